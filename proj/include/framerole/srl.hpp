#pragma once

// Verb-sense selection, the interface/lexicon role compatibility cascade and
// whole-sentence labeling.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framerole/deps.hpp"
#include "framerole/heuristics.hpp"
#include "framerole/lexicon.hpp"

namespace framerole::srl {

using heuristics::InterfaceRole;
using heuristics::RoleTable;
using lexicon::InterfaceRoleId;
using lexicon::LexiconStore;
using lexicon::SpecificRole;
using rdf::Iri;

struct FrameAnnotation {
    std::string sentence_id;
    int predicate_token = 0;
    std::set<Iri> frames;  // may be empty: the annotator returned nothing
};

enum class SenseProvenance { Monosemous, FrameMatched, MostFrequentFallback, RankedIntersection };

const char* to_string(SenseProvenance p);

struct SenseSelection {
    Iri sense;
    SenseProvenance provenance;

    bool operator==(const SenseSelection&) const = default;
};

struct RoleLabel {
    enum class Kind { Specific, InterfaceFromLexicon, InterfaceFallback };

    Kind kind = Kind::InterfaceFallback;
    std::string name;         // display name used in TSV output and scoring
    std::optional<Iri> iri;   // set for Specific and InterfaceFromLexicon

    static RoleLabel specific(Iri role, std::string name);
    static RoleLabel from_lexicon(const InterfaceRoleId& role);
    static RoleLabel fallback(InterfaceRole role);

    bool operator==(const RoleLabel&) const = default;
};

struct RoleAssignment {
    std::string sentence_id;
    int predicate_token = 0;
    std::string predicate_lemma;
    std::optional<Iri> sense;
    RoleLabel label;
    int filler_head = 0;
    deps::Span filler;

    bool operator==(const RoleAssignment&) const = default;
};

// Sense selection across the monosemous / frame-driven / frequency-fallback
// branches. nullopt when the lemma is unknown to the store.
std::optional<SenseSelection> select_verb_sense(const std::string& lemma,
                                                const std::set<Iri>& frames,
                                                const LexiconStore& store);

// Minimal elements of frames under frame subsumption; pairwise-unrelated
// frames are all retained.
std::set<Iri> most_specific_frames(const std::set<Iri>& frames, const LexiconStore& store);

// The rule cascade deciding what label a dependent carrying interface role c1
// receives when aligned with one lexicon (interface, specific) role pair.
RoleLabel check_compatibility(InterfaceRole c1,
                              const std::optional<InterfaceRoleId>& v1,
                              const std::optional<SpecificRole>& r1,
                              const std::optional<std::string>& preposition,
                              const Iri& sense,
                              const LexiconStore& store);

std::vector<RoleAssignment> label_sentence(const deps::DepGraph& graph,
                                           const std::vector<FrameAnnotation>& annotations,
                                           const LexiconStore& store,
                                           const RoleTable& table);

// Frame annotation records: sentence_id<TAB>token_index<TAB>frame_iri.
std::vector<FrameAnnotation> parse_frame_annotations(const std::string& text);

// Assignment TSV: sentence_id, predicate_token, predicate_lemma, role_name,
// filler_start, filler_end, filler_text. No header. IRIs do not round-trip
// through this format; read-back labels carry names only.
std::string write_assignments_tsv(const std::vector<RoleAssignment>& assignments);
std::vector<RoleAssignment> read_assignments_tsv(const std::string& text);

}  // namespace framerole::srl
