#include "framerole/srl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace framerole::srl {

namespace {

bool in_core_set(InterfaceRole r) {
    // O = {Agent, Undergoer, Recipient, Eventuality}: every interface role
    // except Oblique.
    return r != InterfaceRole::Oblique;
}

bool in_core_set(const std::string& name) {
    auto role = heuristics::interface_role_from_string(name);
    return role && in_core_set(*role);
}

std::string base_relation(const std::string& rel) {
    auto cut = rel.find(':');
    return cut == std::string::npos ? rel : rel.substr(0, cut);
}

bool is_predicate_blocking(const std::string& rel) {
    std::string base = base_relation(rel);
    return base == "aux" || base == "auxpass" || base == "cop";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

const char* to_string(SenseProvenance p) {
    switch (p) {
        case SenseProvenance::Monosemous: return "monosemous";
        case SenseProvenance::FrameMatched: return "frame-matched";
        case SenseProvenance::MostFrequentFallback: return "most-frequent";
        case SenseProvenance::RankedIntersection: return "ranked-intersection";
    }
    return "?";
}

RoleLabel RoleLabel::specific(Iri role, std::string name) {
    return {Kind::Specific, std::move(name), std::move(role)};
}

RoleLabel RoleLabel::from_lexicon(const InterfaceRoleId& role) {
    return {Kind::InterfaceFromLexicon, role.name, role.id};
}

RoleLabel RoleLabel::fallback(InterfaceRole role) {
    return {Kind::InterfaceFallback, heuristics::to_string(role), std::nullopt};
}

std::set<Iri> most_specific_frames(const std::set<Iri>& frames, const LexiconStore& store) {
    std::set<Iri> out;
    for (const Iri& f : frames) {
        bool has_more_specific = std::any_of(frames.begin(), frames.end(), [&](const Iri& g) {
            return g != f && store.frame_subsumes(f, g);
        });
        if (!has_more_specific) out.insert(f);
    }
    return out;
}

std::optional<SenseSelection> select_verb_sense(const std::string& lemma,
                                                const std::set<Iri>& frames,
                                                const LexiconStore& store) {
    auto senses = store.senses_for_lemma(lemma);
    if (senses.empty()) return std::nullopt;
    if (senses.size() == 1)
        return SenseSelection{senses.front().id, SenseProvenance::Monosemous};

    // Polysemous. Without frame annotations, take the top of the frequency
    // ranking.
    if (frames.empty()) {
        auto ranked = store.most_frequent_senses(lemma);
        return SenseSelection{ranked.front().id, SenseProvenance::MostFrequentFallback};
    }

    std::set<Iri> specific = most_specific_frames(frames, store);
    std::set<Iri> candidates;
    for (const Iri& frame : specific)
        for (const auto& sense : store.senses_for_lemma_and_frame(lemma, frame))
            candidates.insert(sense.id);

    if (candidates.empty()) {
        auto ranked = store.most_frequent_senses(lemma);
        return SenseSelection{ranked.front().id, SenseProvenance::MostFrequentFallback};
    }
    if (candidates.size() == 1)
        return SenseSelection{*candidates.begin(), SenseProvenance::FrameMatched};

    // Several candidates: walk the frequency ranking and take the first one
    // that the frame match produced.
    for (const auto& sense : store.most_frequent_senses(lemma)) {
        if (candidates.count(sense.id))
            return SenseSelection{sense.id, SenseProvenance::RankedIntersection};
    }
    // Candidates are a subset of the lemma's senses, so the walk cannot miss.
    return SenseSelection{*candidates.begin(), SenseProvenance::RankedIntersection};
}

RoleLabel check_compatibility(InterfaceRole c1,
                              const std::optional<InterfaceRoleId>& v1,
                              const std::optional<SpecificRole>& r1,
                              const std::optional<std::string>& preposition,
                              const Iri& sense,
                              const LexiconStore& store) {
    // (1) Nothing from the lexicon: keep the syntactic interface role.
    if (!v1 && !r1) return RoleLabel::fallback(c1);

    // (2) Matching core interface roles: the class-specific role wins.
    if (in_core_set(c1) && v1 && r1 && in_core_set(v1->name) &&
        v1->name == heuristics::to_string(c1)) {
        return RoleLabel::specific(r1->id, r1->name);
    }

    // (3) Oblique on both sides: resolve through the preposition selection.
    if (c1 == InterfaceRole::Oblique && v1 && v1->name == "Oblique" && preposition) {
        auto args = store.prep_argument(sense, *preposition);
        if (!args.empty())
            return RoleLabel::specific(args.front(), store.display_name(args.front()));
        return RoleLabel::fallback(InterfaceRole::Oblique);
    }

    // (4) Agent/Undergoer against a differently named interface role: accept
    // it when its subsumption chain tops out at Theme.
    if ((c1 == InterfaceRole::Agent || c1 == InterfaceRole::Undergoer) && v1 &&
        v1->name != heuristics::to_string(c1)) {
        Iri apex = store.role_apex(v1->id);
        if (store.display_name(apex) == "Theme") return RoleLabel::from_lexicon(*v1);
    }

    // (5) No mapping.
    return RoleLabel::fallback(c1);
}

namespace {

struct PairSlot {
    SpecificRole role;
    std::optional<InterfaceRoleId> iface;
    bool consumed = false;
};

// Tries unconsumed lexicon pairs in order; a pair is consumed only when it
// yields a lexicon-grounded label. Falls back to the bare interface role.
RoleLabel align_dependent(InterfaceRole c1, const std::optional<std::string>& prep,
                          const Iri& sense, std::vector<PairSlot>& pairs,
                          const LexiconStore& store) {
    for (PairSlot& slot : pairs) {
        if (slot.consumed) continue;
        RoleLabel label = check_compatibility(c1, slot.iface, slot.role, prep, sense, store);
        if (label.kind != RoleLabel::Kind::InterfaceFallback) {
            slot.consumed = true;
            return label;
        }
    }
    return check_compatibility(c1, std::nullopt, std::nullopt, prep, sense, store);
}

}  // namespace

std::vector<RoleAssignment> label_sentence(const deps::DepGraph& graph,
                                           const std::vector<FrameAnnotation>& annotations,
                                           const LexiconStore& store,
                                           const RoleTable& table) {
    std::map<int, std::set<Iri>> frames_by_token;
    std::set<int> annotated;
    for (const FrameAnnotation& a : annotations) {
        if (a.sentence_id != graph.sentence_id()) continue;
        annotated.insert(a.predicate_token);
        frames_by_token[a.predicate_token].insert(a.frames.begin(), a.frames.end());
    }

    std::vector<RoleAssignment> out;
    for (const deps::Token& token : graph.tokens()) {
        bool is_verb = token.upos == "VERB" || annotated.count(token.index) > 0;
        if (!is_verb && token.upos == "X") {
            // No POS information (CoreNLP triple input): a token predicates
            // when it governs a core argument relation.
            for (const deps::DepEdge* edge : graph.dependents_of(token.index)) {
                auto c1 = table.lookup(edge->relation);
                if (c1 && in_core_set(*c1)) {
                    is_verb = true;
                    break;
                }
            }
        }
        if (!is_verb) continue;
        if (is_predicate_blocking(graph.incoming_relation(token.index))) continue;

        std::set<Iri> frames;
        if (auto it = frames_by_token.find(token.index); it != frames_by_token.end())
            frames = it->second;

        auto selection = select_verb_sense(token.lemma, frames, store);
        std::vector<PairSlot> pairs;
        Iri sense;
        if (selection) {
            sense = selection->sense;
            for (auto& [role, iface] : store.roles_for_sense(sense))
                pairs.push_back({role, iface});
        }

        for (const deps::DepEdge* edge : graph.dependents_of(token.index)) {
            auto c1 = table.lookup(edge->relation);
            if (!c1) continue;
            auto prep = graph.preposition_of(token.index, edge->dependent);

            RoleAssignment assignment;
            assignment.sentence_id = graph.sentence_id();
            assignment.predicate_token = token.index;
            assignment.predicate_lemma = token.lemma;
            if (selection) assignment.sense = sense;
            assignment.label = align_dependent(*c1, prep, sense, pairs, store);
            assignment.filler_head = edge->dependent;
            assignment.filler = graph.subtree_yield(edge->dependent);
            out.push_back(std::move(assignment));
        }
    }
    // Predicates ascend and dependents ascend within each predicate, so the
    // required (predicate, filler_head) order holds by construction.
    return out;
}

std::vector<FrameAnnotation> parse_frame_annotations(const std::string& text) {
    std::map<std::pair<std::string, int>, FrameAnnotation> grouped;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 3)
            throw ParseError(lineno, "expected sentence_id<TAB>token_index<TAB>frame_iri");
        int token = 0;
        try {
            token = std::stoi(cols[1]);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad token index '" + cols[1] + "'");
        }
        if (token < 1) throw ParseError(lineno, "token index must be >= 1");
        if (cols[2].empty()) throw ParseError(lineno, "empty frame IRI");

        auto key = std::make_pair(cols[0], token);
        auto [it, inserted] = grouped.try_emplace(key);
        if (inserted) {
            it->second.sentence_id = cols[0];
            it->second.predicate_token = token;
        }
        it->second.frames.insert(Iri{cols[2]});
    }
    std::vector<FrameAnnotation> out;
    out.reserve(grouped.size());
    for (auto& [key, annotation] : grouped) out.push_back(std::move(annotation));
    return out;
}

std::string write_assignments_tsv(const std::vector<RoleAssignment>& assignments) {
    std::string out;
    for (const RoleAssignment& a : assignments) {
        out += a.sentence_id + "\t" + std::to_string(a.predicate_token) + "\t" +
               a.predicate_lemma + "\t" + a.label.name + "\t" +
               std::to_string(a.filler.start) + "\t" + std::to_string(a.filler.end) + "\t" +
               a.filler.text + "\n";
    }
    return out;
}

std::vector<RoleAssignment> read_assignments_tsv(const std::string& text) {
    std::vector<RoleAssignment> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 7) throw ParseError(lineno, "expected 7 tab-separated columns");
        RoleAssignment a;
        a.sentence_id = cols[0];
        try {
            a.predicate_token = std::stoi(cols[1]);
            a.filler.start = std::stoi(cols[4]);
            a.filler.end = std::stoi(cols[5]);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad integer field");
        }
        a.predicate_lemma = cols[2];
        a.label.kind = RoleLabel::Kind::Specific;
        a.label.name = cols[3];
        a.filler_head = a.filler.start;
        a.filler.text = cols[6];
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace framerole::srl
