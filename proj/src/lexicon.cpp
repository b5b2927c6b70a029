#include "framerole/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "framerole/vocab.hpp"

namespace framerole::lexicon {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Walks parent links from every node and reports the first cycle found.
template <typename ParentsOf>
void check_acyclic(const std::map<Iri, std::vector<Iri>>& index, ParentsOf parents_of,
                   const char* what) {
    enum class Mark { White, Grey, Black };
    std::map<Iri, Mark> marks;
    // Iterative DFS over the parent relation.
    for (const auto& [start, _] : index) {
        if (marks[start] != Mark::White) continue;
        std::vector<std::pair<Iri, std::size_t>> stack{{start, 0}};
        marks[start] = Mark::Grey;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const std::vector<Iri> parents = parents_of(node);
            if (next >= parents.size()) {
                marks[node] = Mark::Black;
                stack.pop_back();
                continue;
            }
            Iri parent = parents[next++];
            Mark& m = marks[parent];
            if (m == Mark::Grey) {
                throw CycleError(std::string(what) + " subsumption cycle through <" +
                                 parent.value + ">");
            }
            if (m == Mark::White) {
                m = Mark::Grey;
                stack.emplace_back(parent, 0);
            }
        }
    }
}

}  // namespace

LexiconStore load_lexicon(const std::string& ntriples_text) {
    return load_from_triples(rdf::parse_ntriples(ntriples_text));
}

LexiconStore load_from_triples(rdf::ParsedTriples parsed) {
    namespace v = framerole::vocab;
    LexiconStore store;

    auto line_of = [&](std::size_t i) { return i < parsed.lines.size() ? parsed.lines[i] : 0; };

    std::set<Iri> sense_nodes, role_nodes, interface_nodes, prep_nodes;
    std::map<Iri, std::vector<std::string>> labels;
    std::map<Iri, std::set<Iri>> close_match;
    std::map<Iri, long> tag_counts;  // per WordNet sense node
    std::map<Iri, Iri> role_sense, sense_class;
    std::map<Iri, Iri> prep_sense, prep_prep_iri, prep_arg;
    std::map<Iri, std::string> prep_literal;

    for (std::size_t i = 0; i < parsed.triples.size(); ++i) {
        const rdf::Triple& t = parsed.triples[i];
        const std::string& p = t.predicate.value;

        auto require_iri_object = [&]() -> const Iri& {
            if (!rdf::is_iri(t.object))
                throw ParseError(line_of(i), "expected an IRI object for <" + p + ">");
            return rdf::as_iri(t.object);
        };

        if (p == v::kRdfType) {
            const Iri& type = require_iri_object();
            if (type.value == v::kVerbSenseClass) sense_nodes.insert(t.subject);
            else if (type.value == v::kArgumentClass) role_nodes.insert(t.subject);
            else if (type.value == v::kInterfaceRoleClass) interface_nodes.insert(t.subject);
            else if (type.value == v::kSensePrepSelectionClass) prep_nodes.insert(t.subject);
        } else if (p == v::kRdfsLabel) {
            if (!rdf::is_iri(t.object)) labels[t.subject].push_back(rdf::as_literal(t.object).lexical);
        } else if (p == v::kSkosCloseMatch) {
            close_match[t.subject].insert(require_iri_object());
        } else if (p == v::kTagCount) {
            if (rdf::is_iri(t.object)) throw ParseError(line_of(i), "tagCount must be a literal");
            const rdf::Literal& lit = rdf::as_literal(t.object);
            // Only xsd:int frequencies count; anything else is ignored.
            if (!lit.datatype || lit.datatype->value != v::kXsdInt) continue;
            long value = 0;
            try {
                value = std::stol(lit.lexical);
            } catch (const std::exception&) {
                throw ParseError(line_of(i), "tagCount is not an integer: " + lit.lexical);
            }
            if (value < 0) throw ParseError(line_of(i), "negative tagCount");
            tag_counts[t.subject] += value;
        } else if (p == v::kSubsumedUnder) {
            const Iri& parent = require_iri_object();
            auto [it, inserted] = store.role_parent_.emplace(t.subject, parent);
            if (!inserted && it->second != parent)
                throw ParseError(line_of(i), "role <" + t.subject.value +
                                                 "> has two subsumedUnder parents");
        } else if (p == v::kSubFrameOf) {
            store.frame_parents_[t.subject].push_back(require_iri_object());
        } else if (p == v::kInVerbSense) {
            const Iri& sense = require_iri_object();
            auto [it, inserted] = role_sense.emplace(t.subject, sense);
            if (!inserted && it->second != sense)
                throw ParseError(line_of(i), "role <" + t.subject.value + "> is in two senses");
        } else if (p == v::kInVerbClass) {
            sense_class[t.subject] = require_iri_object();
        } else if (p == v::kHasVerbSense) {
            prep_sense[t.subject] = require_iri_object();
        } else if (p == v::kHasPreposition) {
            if (rdf::is_iri(t.object)) prep_prep_iri[t.subject] = rdf::as_iri(t.object);
            else prep_literal[t.subject] = rdf::as_literal(t.object).lexical;
        } else if (p == v::kHasGenericArgument) {
            prep_arg[t.subject] = require_iri_object();
        }
        // Unknown predicates are retained in triples_ but build no index.
    }

    // Display labels: first label in document order per node.
    for (auto& [node, ls] : labels) store.labels_[node] = ls.front();

    // Verb senses.
    for (const Iri& id : sense_nodes) {
        VerbSense sense;
        sense.id = id;
        if (auto it = labels.find(id); it != labels.end()) {
            for (const std::string& l : it->second) sense.labels.push_back(lowercase(l));
            std::sort(sense.labels.begin(), sense.labels.end());
            sense.labels.erase(std::unique(sense.labels.begin(), sense.labels.end()),
                               sense.labels.end());
        }
        if (sense.labels.empty())
            throw ParseError(0, "verb sense <" + id.value + "> has no rdfs:label");
        sense.lemma = sense.labels.front();
        if (auto it = sense_class.find(id); it != sense_class.end()) sense.verb_class = it->second;
        if (auto it = close_match.find(id); it != close_match.end()) {
            sense.frames = it->second;
            for (const Iri& target : it->second) {
                if (auto tc = tag_counts.find(target); tc != tag_counts.end())
                    sense.tag_count += tc->second;
            }
        }
        for (const std::string& l : sense.labels) store.lemma_index_[l].push_back(id);
        store.senses_.emplace(id, std::move(sense));
    }
    for (auto& [lemma, ids] : store.lemma_index_) std::sort(ids.begin(), ids.end());

    // Interface roles; names must be unique.
    {
        std::map<std::string, Iri> seen;
        for (const Iri& id : interface_nodes) {
            InterfaceRoleId role{id, store.display_name(id)};
            auto [it, inserted] = seen.emplace(role.name, id);
            if (!inserted)
                throw ParseError(0, "duplicate interface role name '" + role.name + "' (<" +
                                        it->second.value + "> and <" + id.value + ">)");
            store.interface_roles_.emplace(id, std::move(role));
        }
    }

    // Class-specific roles.
    for (const Iri& id : role_nodes) {
        auto sense_it = role_sense.find(id);
        if (sense_it == role_sense.end())
            throw ParseError(0, "role <" + id.value + "> has no inVerbSense triple");
        SpecificRole role;
        role.id = id;
        role.name = store.display_name(id);
        role.in_sense = sense_it->second;
        if (!store.senses_.count(role.in_sense))
            throw ParseError(0, "role <" + id.value + "> refers to undeclared sense <" +
                                    role.in_sense.value + ">");
        if (auto it = store.role_parent_.find(id); it != store.role_parent_.end())
            role.subsumed_under = it->second;
        store.roles_by_sense_[role.in_sense].push_back(std::move(role));
    }
    for (auto& [sense, roles] : store.roles_by_sense_) {
        std::sort(roles.begin(), roles.end(),
                  [](const SpecificRole& a, const SpecificRole& b) { return a.id < b.id; });
    }

    // Preposition selections.
    for (const Iri& id : prep_nodes) {
        auto s = prep_sense.find(id);
        auto a = prep_arg.find(id);
        std::string prep;
        if (auto it = prep_literal.find(id); it != prep_literal.end()) prep = lowercase(it->second);
        else if (auto it = prep_prep_iri.find(id); it != prep_prep_iri.end())
            prep = lowercase(it->second.local_name());
        if (s == prep_sense.end() || a == prep_arg.end() || prep.empty())
            throw ParseError(0, "incomplete preposition selection <" + id.value + ">");
        store.prep_index_[{s->second, prep}].push_back(a->second);
    }
    for (auto& [key, args] : store.prep_index_) {
        std::sort(args.begin(), args.end());
        args.erase(std::unique(args.begin(), args.end()), args.end());
    }

    // Everything that can start or continue a subsumption chain is a known
    // role node for role_apex.
    for (const Iri& id : role_nodes) store.role_nodes_.insert(id);
    for (const Iri& id : interface_nodes) store.role_nodes_.insert(id);
    for (const auto& [child, parent] : store.role_parent_) {
        store.role_nodes_.insert(child);
        store.role_nodes_.insert(parent);
    }

    // Acyclicity of both subsumption relations.
    {
        std::map<Iri, std::vector<Iri>> role_index;
        for (const auto& [child, parent] : store.role_parent_) role_index[child] = {parent};
        check_acyclic(role_index, [&](const Iri& n) {
            auto it = store.role_parent_.find(n);
            return it == store.role_parent_.end() ? std::vector<Iri>{} : std::vector<Iri>{it->second};
        }, "role");
        check_acyclic(store.frame_parents_, [&](const Iri& n) {
            auto it = store.frame_parents_.find(n);
            return it == store.frame_parents_.end() ? std::vector<Iri>{} : it->second;
        }, "frame");
    }

    store.triples_ = std::move(parsed.triples);
    return store;
}

std::vector<VerbSense> LexiconStore::senses_for_lemma(const std::string& lemma) const {
    auto it = lemma_index_.find(lowercase(lemma));
    if (it == lemma_index_.end()) return {};
    std::vector<VerbSense> out;
    out.reserve(it->second.size());
    for (const Iri& id : it->second) out.push_back(senses_.at(id));
    return out;  // ids are pre-sorted ascending
}

std::vector<VerbSense> LexiconStore::most_frequent_senses(const std::string& lemma) const {
    std::vector<VerbSense> out = senses_for_lemma(lemma);
    std::stable_sort(out.begin(), out.end(), [](const VerbSense& a, const VerbSense& b) {
        if (a.tag_count != b.tag_count) return a.tag_count > b.tag_count;
        return a.id < b.id;
    });
    return out;
}

std::vector<VerbSense> LexiconStore::senses_for_lemma_and_frame(const std::string& lemma,
                                                                const Iri& frame) const {
    std::vector<VerbSense> out;
    for (VerbSense& sense : senses_for_lemma(lemma)) {
        if (sense.frames.count(frame)) out.push_back(std::move(sense));
    }
    return out;
}

std::vector<std::pair<SpecificRole, std::optional<InterfaceRoleId>>>
LexiconStore::roles_for_sense(const Iri& sense) const {
    std::vector<std::pair<SpecificRole, std::optional<InterfaceRoleId>>> out;
    auto it = roles_by_sense_.find(sense);
    if (it == roles_by_sense_.end()) return out;
    for (const SpecificRole& role : it->second) {
        // Nearest ancestor on the subsumedUnder chain that is a declared
        // interface role; the role itself never counts.
        std::optional<InterfaceRoleId> iface;
        Iri node = role.id;
        while (true) {
            auto parent = role_parent_.find(node);
            if (parent == role_parent_.end()) break;
            node = parent->second;
            if (auto found = interface_roles_.find(node); found != interface_roles_.end()) {
                iface = found->second;
                break;
            }
        }
        out.emplace_back(role, std::move(iface));
    }
    return out;
}

std::vector<Iri> LexiconStore::prep_argument(const Iri& sense, const std::string& preposition) const {
    auto it = prep_index_.find({sense, lowercase(preposition)});
    return it == prep_index_.end() ? std::vector<Iri>{} : it->second;
}

bool LexiconStore::frame_subsumes(const Iri& general, const Iri& specific) const {
    // BFS upward from specific; strict, so the start node itself never matches.
    std::vector<Iri> queue;
    std::set<Iri> seen;
    if (auto it = frame_parents_.find(specific); it != frame_parents_.end())
        queue = it->second;
    while (!queue.empty()) {
        Iri node = std::move(queue.back());
        queue.pop_back();
        if (!seen.insert(node).second) continue;
        if (node == general) return true;
        if (auto it = frame_parents_.find(node); it != frame_parents_.end())
            queue.insert(queue.end(), it->second.begin(), it->second.end());
    }
    return false;
}

Iri LexiconStore::role_apex(const Iri& role) const {
    if (!role_nodes_.count(role)) throw UnknownRoleError("unknown role <" + role.value + ">");
    Iri node = role;
    while (true) {
        auto it = role_parent_.find(node);
        if (it == role_parent_.end()) return node;
        node = it->second;
    }
}

std::optional<VerbSense> LexiconStore::sense(const Iri& id) const {
    auto it = senses_.find(id);
    if (it == senses_.end()) return std::nullopt;
    return it->second;
}

std::optional<InterfaceRoleId> LexiconStore::interface_role(const Iri& id) const {
    auto it = interface_roles_.find(id);
    if (it == interface_roles_.end()) return std::nullopt;
    return it->second;
}

bool LexiconStore::is_interface_role(const Iri& id) const {
    return interface_roles_.count(id) > 0;
}

std::optional<Iri> LexiconStore::role_parent(const Iri& role) const {
    auto it = role_parent_.find(role);
    if (it == role_parent_.end()) return std::nullopt;
    return it->second;
}

std::string LexiconStore::display_name(const Iri& id) const {
    auto it = labels_.find(id);
    return it != labels_.end() ? it->second : id.local_name();
}

std::string LexiconStore::serialize() const {
    return rdf::serialize_ntriples(triples_, /*sorted=*/true);
}

}  // namespace framerole::lexicon
