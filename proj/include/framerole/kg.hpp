#pragma once

// Materializes role assignments as a role-oriented RDF graph.
//
// Node layout (artifact convention):
//   <base>/occ/<sentence>/<token>      one occurrence node per predicate
//   <base>/filler/<sentence>/<token>   one node per filler head
//   <base>/role/<name>                 predicate IRIs for fallback roles
//   <base>/verb/<lemma>                occurrence type when no sense was found
// Each assignment contributes three triples: role, filler label, and a
// "start:end" span literal typed <base>/datatype/span.

#include <map>
#include <set>
#include <string>

#include "framerole/rdf.hpp"
#include "framerole/srl.hpp"

namespace framerole::kg {

struct KnowledgeGraph {
    std::set<rdf::Triple> triples;
    std::map<std::string, std::string> namespaces;  // prefix -> IRI
};

inline constexpr const char* kDefaultBase = "http://example.org/framerole";

KnowledgeGraph build_graph(const std::vector<srl::RoleAssignment>& assignments,
                           const deps::DepGraph& graph,
                           const std::string& base = kDefaultBase);

// Canonical N-Triples: lexicographically sorted lines, each ending " .".
std::string serialize(const KnowledgeGraph& kg);

}  // namespace framerole::kg
