#pragma once

// Indexed view over a Framester-style lexicon snapshot: verb senses, their
// class-specific roles, interface roles, the frame hierarchy, WordNet
// frequencies and preposition selections. Immutable after load; all queries
// return deterministically ordered results (IRI ascending within equal rank).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "framerole/rdf.hpp"

namespace framerole::lexicon {

using rdf::Iri;
using rdf::Triple;

struct VerbSense {
    Iri id;
    std::string lemma;            // primary (lexicographically least) label, lowercased
    std::vector<std::string> labels;  // all labels, lowercased, sorted
    Iri verb_class;               // empty value when the snapshot has no class triple
    long tag_count = 0;           // summed WordNet frequency; 0 when absent
    std::set<Iri> frames;         // closeMatch targets
};

struct SpecificRole {
    Iri id;
    std::string name;             // rdfs:label, or IRI local name as fallback
    Iri in_sense;
    std::optional<Iri> subsumed_under;
};

struct InterfaceRoleId {
    Iri id;
    std::string name;
};

struct PrepSelection {
    Iri sense;
    std::string preposition;      // lowercase
    Iri argument;
};

class LexiconStore {
public:
    // Queries. All lists are IRI-ascending unless stated otherwise.
    std::vector<VerbSense> senses_for_lemma(const std::string& lemma) const;

    // senses_for_lemma sorted by tag_count descending, IRI ascending on ties.
    // The full ranking is returned; callers walk it for "next most frequent".
    std::vector<VerbSense> most_frequent_senses(const std::string& lemma) const;

    std::vector<VerbSense> senses_for_lemma_and_frame(const std::string& lemma,
                                                      const Iri& frame) const;

    // Every class-specific role of the sense, paired with the nearest ancestor
    // on its subsumedUnder chain that is a declared interface role (if any).
    std::vector<std::pair<SpecificRole, std::optional<InterfaceRoleId>>>
    roles_for_sense(const Iri& sense) const;

    // Generic arguments selected by (sense, preposition); empty when none.
    std::vector<Iri> prep_argument(const Iri& sense, const std::string& preposition) const;

    // Strict subsumption: true iff specific reaches general via one or more
    // subframe edges. A frame never subsumes itself.
    bool frame_subsumes(const Iri& general, const Iri& specific) const;

    // Topmost node of the subsumedUnder chain starting at role; role itself
    // when parentless. Throws UnknownRoleError for roles absent from the store.
    Iri role_apex(const Iri& role) const;

    std::optional<VerbSense> sense(const Iri& id) const;
    std::optional<InterfaceRoleId> interface_role(const Iri& id) const;
    bool is_interface_role(const Iri& id) const;
    std::optional<Iri> role_parent(const Iri& role) const;

    // rdfs:label when present, IRI local name otherwise.
    std::string display_name(const Iri& id) const;

    const std::vector<Triple>& triples() const { return triples_; }
    std::string serialize() const;
    std::size_t size() const { return triples_.size(); }

private:
    friend LexiconStore load_lexicon(const std::string& ntriples_text);
    friend LexiconStore load_from_triples(rdf::ParsedTriples parsed);

    std::vector<Triple> triples_;
    std::map<Iri, VerbSense> senses_;
    std::map<std::string, std::vector<Iri>> lemma_index_;      // lowercased label -> sense ids
    std::map<Iri, std::vector<SpecificRole>> roles_by_sense_;
    std::map<Iri, Iri> role_parent_;                           // subsumedUnder chain
    std::map<Iri, InterfaceRoleId> interface_roles_;
    std::map<Iri, std::vector<Iri>> frame_parents_;            // child -> parents
    std::map<std::pair<Iri, std::string>, std::vector<Iri>> prep_index_;
    std::map<Iri, std::string> labels_;                        // first label per node
    std::set<Iri> role_nodes_;                                 // anything on a role chain
};

// Builds the store and all indices from line-oriented N-Triples. Throws
// ParseError for malformed lines or inconsistent structure, CycleError when a
// role chain or the frame hierarchy is cyclic.
LexiconStore load_lexicon(const std::string& ntriples_text);
LexiconStore load_from_triples(rdf::ParsedTriples parsed);

}  // namespace framerole::lexicon
