#include "framerole/ensemble.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace framerole::ensemble {

using srl::RoleAssignment;

SystemOutput merge(const SystemOutput& primary, const SystemOutput& secondary) {
    using Key = std::tuple<std::string, int, int>;
    auto key_of = [](const RoleAssignment& a) {
        return Key{a.sentence_id, a.predicate_token, a.filler_head};
    };

    std::set<Key> taken;
    // A predicate the primary system detected keeps the primary's identity
    // (lemma and sense); the secondary's complementary roles merge under it.
    std::map<std::pair<std::string, int>, std::pair<std::string, std::optional<rdf::Iri>>>
        primary_predicate;

    SystemOutput out;
    out.name = primary.name.empty() ? secondary.name : primary.name + "+" + secondary.name;

    for (const RoleAssignment& a : primary.assignments) {
        taken.insert(key_of(a));
        primary_predicate.emplace(std::make_pair(a.sentence_id, a.predicate_token),
                                  std::make_pair(a.predicate_lemma, a.sense));
        out.assignments.push_back(a);
    }
    for (const RoleAssignment& a : secondary.assignments) {
        if (!taken.insert(key_of(a)).second) continue;
        RoleAssignment merged = a;
        if (auto it = primary_predicate.find({a.sentence_id, a.predicate_token});
            it != primary_predicate.end()) {
            merged.predicate_lemma = it->second.first;
            merged.sense = it->second.second;
        }
        out.assignments.push_back(std::move(merged));
    }

    std::sort(out.assignments.begin(), out.assignments.end(),
              [&](const RoleAssignment& a, const RoleAssignment& b) {
                  return key_of(a) < key_of(b);
              });
    return out;
}

}  // namespace framerole::ensemble
