#include "framerole/remote.hpp"

#include <openssl/sha.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <httplib.h>

#include "framerole/vocab.hpp"

namespace framerole::remote {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * SHA256_DIGEST_LENGTH);
    for (unsigned char b : digest) {
        out += hex[b >> 4];
        out += hex[b & 0xF];
    }
    return out;
}

std::string url_encode(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += char(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        }
    }
    return out;
}

std::string build_query(QueryTemplate t, const std::vector<std::string>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw Error("query template expects " + std::to_string(n) + " parameter(s)");
    };
    switch (t) {
        case QueryTemplate::SensesForLemma:
            need(1);
            return "CONSTRUCT { ?s ?p ?o } WHERE { ?s a "
                   "<https://w3id.org/framester/vn31/schema/VerbSense> ; "
                   "<http://www.w3.org/2000/01/rdf-schema#label> ?l ; ?p ?o . "
                   "FILTER(lcase(str(?l)) = \"" + params[0] + "\") }";
        case QueryTemplate::SensesForLemmaAndFrame:
            need(2);
            return "CONSTRUCT { ?s ?p ?o } WHERE { ?s a "
                   "<https://w3id.org/framester/vn31/schema/VerbSense> ; "
                   "<http://www.w3.org/2000/01/rdf-schema#label> ?l ; "
                   "<http://www.w3.org/2004/02/skos/core#closeMatch> <" + params[1] + "> ; "
                   "?p ?o . FILTER(lcase(str(?l)) = \"" + params[0] + "\") }";
        case QueryTemplate::RolesForSense:
            need(1);
            return "CONSTRUCT { ?r ?p ?o . ?a ?q ?b } WHERE { ?r "
                   "<https://w3id.org/framester/vn31/schema/inVerbSense> <" + params[0] + "> ; "
                   "?p ?o . OPTIONAL { ?r "
                   "<https://w3id.org/framester/schema/subsumedUnder>+ ?a . ?a ?q ?b } }";
        case QueryTemplate::FrequenciesForLemma:
            need(1);
            return "CONSTRUCT { ?s <http://www.w3.org/2004/02/skos/core#closeMatch> ?w . "
                   "?w <https://w3id.org/framester/wn/wn30/schema/tagCount> ?f } WHERE { ?s a "
                   "<https://w3id.org/framester/vn31/schema/VerbSense> ; "
                   "<http://www.w3.org/2000/01/rdf-schema#label> ?l ; "
                   "<http://www.w3.org/2004/02/skos/core#closeMatch> ?w . "
                   "?w <https://w3id.org/framester/wn/wn30/schema/tagCount> ?f . "
                   "FILTER(lcase(str(?l)) = \"" + params[0] + "\") }";
        case QueryTemplate::PrepSelectionsForSense:
            need(1);
            return "CONSTRUCT { ?sel ?p ?o } WHERE { ?sel "
                   "<https://w3id.org/framester/vn/schema/hasVerbSense> <" + params[0] + "> ; "
                   "?p ?o }";
    }
    throw Error("unknown query template");
}

std::string cache_key(const std::string& endpoint_url, const std::string& query) {
    return sha256_hex(endpoint_url + "\n" + query);
}

namespace {

std::string http_get(const std::string& endpoint_url, const std::string& query) {
    // Split scheme://host[:port] from the path.
    auto scheme_end = endpoint_url.find("://");
    if (scheme_end == std::string::npos) throw NetworkError("bad endpoint URL: " + endpoint_url);
    auto path_start = endpoint_url.find('/', scheme_end + 3);
    std::string origin = path_start == std::string::npos ? endpoint_url
                                                         : endpoint_url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : endpoint_url.substr(path_start);

    std::string sep = path.find('?') == std::string::npos ? "?" : "&";
    std::string target = path + sep + "query=" + url_encode(query);

    httplib::Client client(origin);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(30, 0);
    auto res = client.Get(target);
    if (!res) throw NetworkError("endpoint unreachable: " + endpoint_url);
    if (res->status != 200)
        throw NetworkError("endpoint returned HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace

std::string remote_fetch(const std::string& endpoint_url, const std::string& query,
                         const std::string& cache_dir) {
    fs::path dir(cache_dir);
    fs::path cached = dir / (cache_key(endpoint_url, query) + ".nt");

    if (fs::exists(cached)) {
        std::ifstream in(cached, std::ios::binary);
        if (!in) throw CacheWriteError("cannot read cache file " + cached.string());
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    std::string body = http_get(endpoint_url, query);
    rdf::parse_ntriples(body);  // malformed bodies surface here, before caching

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw CacheWriteError("cannot create cache dir " + dir.string());

    static std::mt19937_64 rng{std::random_device{}()};
    fs::path tmp = cached;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw CacheWriteError("cannot write " + tmp.string());
        out.write(body.data(), std::streamsize(body.size()));
        if (!out) throw CacheWriteError("short write to " + tmp.string());
    }
    fs::rename(tmp, cached, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw CacheWriteError("cannot rename " + tmp.string());
    }
    return body;
}

rdf::ParsedTriples fetch_lemma_bundle(const std::string& endpoint_url,
                                      const std::vector<std::string>& lemmas,
                                      const std::string& cache_dir) {
    namespace v = framerole::vocab;
    rdf::ParsedTriples merged;
    std::set<rdf::Triple> seen;

    auto add = [&](const std::string& body) {
        rdf::ParsedTriples parsed = rdf::parse_ntriples(body);
        for (std::size_t i = 0; i < parsed.triples.size(); ++i) {
            if (seen.insert(parsed.triples[i]).second) {
                merged.triples.push_back(parsed.triples[i]);
                merged.lines.push_back(0);
            }
        }
        return parsed;
    };

    for (const std::string& lemma : lemmas) {
        rdf::ParsedTriples senses = add(
            remote_fetch(endpoint_url, build_query(QueryTemplate::SensesForLemma, {lemma}), cache_dir));
        add(remote_fetch(endpoint_url, build_query(QueryTemplate::FrequenciesForLemma, {lemma}),
                         cache_dir));

        // Per-sense queries for every sense the lemma query declared.
        std::set<std::string> sense_iris;
        for (const rdf::Triple& t : senses.triples) {
            if (t.predicate.value == v::kRdfType && rdf::is_iri(t.object) &&
                rdf::as_iri(t.object).value == v::kVerbSenseClass)
                sense_iris.insert(t.subject.value);
        }
        for (const std::string& sense : sense_iris) {
            add(remote_fetch(endpoint_url, build_query(QueryTemplate::RolesForSense, {sense}),
                             cache_dir));
            add(remote_fetch(endpoint_url,
                             build_query(QueryTemplate::PrepSelectionsForSense, {sense}), cache_dir));
        }
    }
    return merged;
}

}  // namespace framerole::remote
