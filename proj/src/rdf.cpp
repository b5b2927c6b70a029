#include "framerole/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace framerole::rdf {

namespace {

bool has_whitespace(const std::string& s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

struct Cursor {
    const std::string& line;
    std::size_t pos = 0;
    std::size_t lineno;

    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(lineno, reason);
    }

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }

    bool at_end() const { return pos >= line.size(); }
    char peek() const { return line[pos]; }

    Iri read_iri() {
        if (at_end() || line[pos] != '<') fail("expected '<'");
        auto close = line.find('>', pos + 1);
        if (close == std::string::npos) fail("unterminated IRI");
        std::string value = line.substr(pos + 1, close - pos - 1);
        if (value.empty()) fail("empty IRI");
        if (has_whitespace(value)) fail("whitespace in IRI");
        pos = close + 1;
        return Iri{std::move(value)};
    }

    std::string read_quoted() {
        if (at_end() || line[pos] != '"') fail("expected '\"'");
        ++pos;
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated literal");
            char c = line[pos];
            if (c == '"') {
                ++pos;
                return out;
            }
            if (c == '\\') {
                ++pos;
                if (at_end()) fail("dangling escape");
                char e = line[pos];
                switch (e) {
                    case 't': out += '\t'; break;
                    case 'n': out += '\n'; break;
                    case 'r': out += '\r'; break;
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'u': {
                        if (pos + 4 >= line.size()) fail("short \\u escape");
                        unsigned code = 0;
                        for (int i = 1; i <= 4; ++i) {
                            char h = line[pos + i];
                            code <<= 4;
                            if (h >= '0' && h <= '9') code |= unsigned(h - '0');
                            else if (h >= 'a' && h <= 'f') code |= unsigned(h - 'a' + 10);
                            else if (h >= 'A' && h <= 'F') code |= unsigned(h - 'A' + 10);
                            else fail("bad \\u escape");
                        }
                        // UTF-8 encode (BMP only; surrogates rejected).
                        if (code >= 0xD800 && code <= 0xDFFF) fail("surrogate in \\u escape");
                        if (code < 0x80) {
                            out += char(code);
                        } else if (code < 0x800) {
                            out += char(0xC0 | (code >> 6));
                            out += char(0x80 | (code & 0x3F));
                        } else {
                            out += char(0xE0 | (code >> 12));
                            out += char(0x80 | ((code >> 6) & 0x3F));
                            out += char(0x80 | (code & 0x3F));
                        }
                        pos += 4;
                        break;
                    }
                    default: fail("unknown escape");
                }
                ++pos;
            } else {
                out += c;
                ++pos;
            }
        }
    }

    Term read_object() {
        if (at_end()) fail("missing object");
        if (line[pos] == '<') return read_iri();
        if (line[pos] == '"') {
            Literal lit;
            lit.lexical = read_quoted();
            if (!at_end() && line[pos] == '^') {
                if (pos + 1 >= line.size() || line[pos + 1] != '^') fail("expected '^^'");
                pos += 2;
                lit.datatype = read_iri();
            } else if (!at_end() && line[pos] == '@') {
                ++pos;
                std::string tag;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
                    tag += line[pos++];
                }
                if (tag.empty()) fail("empty language tag");
                lit.language = std::move(tag);
            }
            return lit;
        }
        fail("object must be an IRI or a literal");
    }
};

}  // namespace

std::string Iri::local_name() const {
    auto cut = value.find_last_of("/#");
    return cut == std::string::npos ? value : value.substr(cut + 1);
}

bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
const Iri& as_iri(const Term& t) { return std::get<Iri>(t); }
const Literal& as_literal(const Term& t) { return std::get<Literal>(t); }

ParsedTriples parse_ntriples(const std::string& text) {
    ParsedTriples out;
    std::size_t lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        Cursor cur{line, first, lineno};
        Triple t;
        t.subject = cur.read_iri();
        cur.skip_ws();
        t.predicate = cur.read_iri();
        cur.skip_ws();
        t.object = cur.read_object();
        cur.skip_ws();
        if (cur.at_end() || cur.peek() != '.') cur.fail("missing terminating '.'");
        ++cur.pos;
        cur.skip_ws();
        if (!cur.at_end()) cur.fail("trailing characters after '.'");

        out.triples.push_back(std::move(t));
        out.lines.push_back(lineno);
    }
    return out;
}

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string serialize_triple(const Triple& t) {
    std::string out = "<" + t.subject.value + "> <" + t.predicate.value + "> ";
    if (is_iri(t.object)) {
        out += "<" + as_iri(t.object).value + ">";
    } else {
        const Literal& lit = as_literal(t.object);
        out += "\"" + escape_literal(lit.lexical) + "\"";
        if (lit.datatype) out += "^^<" + lit.datatype->value + ">";
        else if (lit.language) out += "@" + *lit.language;
    }
    out += " .";
    return out;
}

std::string serialize_ntriples(const std::vector<Triple>& triples, bool sorted) {
    std::vector<std::string> lines;
    lines.reserve(triples.size());
    for (const Triple& t : triples) lines.push_back(serialize_triple(t));
    if (sorted) std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace framerole::rdf
