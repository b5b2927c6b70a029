#pragma once

// Minimal RDF model: IRIs, literals, triples, and a line-oriented N-Triples
// reader/writer. This is deliberately not a full RDF toolkit; it covers the
// subset the lexicon and knowledge-graph formats use.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framerole/errors.hpp"

namespace framerole::rdf {

struct Iri {
    std::string value;

    Iri() = default;
    explicit Iri(std::string v) : value(std::move(v)) {}

    // Segment after the last '/' or '#', e.g. "Instrument" for
    // <https://.../data/Instrument>.
    std::string local_name() const;

    auto operator<=>(const Iri&) const = default;
};

struct Literal {
    std::string lexical;
    std::optional<Iri> datatype;
    std::optional<std::string> language;

    auto operator<=>(const Literal&) const = default;
};

using Term = std::variant<Iri, Literal>;

bool is_iri(const Term& t);
const Iri& as_iri(const Term& t);
const Literal& as_literal(const Term& t);

struct Triple {
    Iri subject;
    Iri predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

// One parsed triple per line. Comment lines (#) and blank lines are skipped.
// Throws ParseError with the offending 1-based line number.
struct ParsedTriples {
    std::vector<Triple> triples;
    std::vector<std::size_t> lines;  // source line of each triple
};

ParsedTriples parse_ntriples(const std::string& text);

// Canonical N-Triples: one line per triple, " ." terminated. When sorted is
// true the lines are emitted in lexicographic order (used for canonical
// knowledge-graph output).
std::string serialize_ntriples(const std::vector<Triple>& triples, bool sorted = false);
std::string serialize_triple(const Triple& t);

std::string escape_literal(const std::string& s);

}  // namespace framerole::rdf
