#include "framerole/kg.hpp"

#include <algorithm>

namespace framerole::kg {

using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace {

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr const char* kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";

// Percent-encodes characters that would make a minted IRI unparseable.
std::string iri_safe(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (c <= ' ' || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
            c == '^' || c == '`' || c == '\\' || c == 0x7F) {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        } else {
            out += char(c);
        }
    }
    return out;
}

}  // namespace

KnowledgeGraph build_graph(const std::vector<srl::RoleAssignment>& assignments,
                           const deps::DepGraph& graph,
                           const std::string& base) {
    KnowledgeGraph kg;
    kg.namespaces["rdf"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    kg.namespaces["rdfs"] = "http://www.w3.org/2000/01/rdf-schema#";
    kg.namespaces[""] = base + "/";

    const Iri span_datatype{base + "/datatype/span"};

    for (const srl::RoleAssignment& a : assignments) {
        if (a.sentence_id != graph.sentence_id())
            throw MismatchedSentenceError("assignment for sentence '" + a.sentence_id +
                                          "' built against sentence '" + graph.sentence_id() +
                                          "'");

        std::string sid = iri_safe(a.sentence_id);
        Iri occurrence{base + "/occ/" + sid + "/" + std::to_string(a.predicate_token)};
        Iri type = a.sense ? *a.sense : Iri{base + "/verb/" + iri_safe(a.predicate_lemma)};
        kg.triples.insert({occurrence, Iri{kRdfType}, type});

        Iri role = a.label.iri ? *a.label.iri : Iri{base + "/role/" + iri_safe(a.label.name)};
        Iri filler{base + "/filler/" + sid + "/" + std::to_string(a.filler_head)};
        kg.triples.insert({occurrence, role, filler});
        kg.triples.insert({filler, Iri{kRdfsLabel}, Literal{a.filler.text, std::nullopt, std::nullopt}});
        kg.triples.insert({filler, Iri{base + "/span"},
                           Literal{std::to_string(a.filler.start) + ":" + std::to_string(a.filler.end),
                                   span_datatype, std::nullopt}});
    }
    return kg;
}

std::string serialize(const KnowledgeGraph& kg) {
    std::vector<Triple> triples(kg.triples.begin(), kg.triples.end());
    return rdf::serialize_ntriples(triples, /*sorted=*/true);
}

}  // namespace framerole::kg
