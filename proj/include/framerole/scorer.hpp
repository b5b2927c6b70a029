#pragma once

// CoNLL-2009-style semantic dependency scoring, the strict text-containment
// scorer, the VerbNet->PropBank role mapping and the gold/prediction file
// formats.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framerole/deps.hpp"
#include "framerole/errors.hpp"
#include "framerole/srl.hpp"

namespace framerole::scorer {

// target == kRootTarget encodes the virtual ROOT dependency carrying the
// predicate sense.
inline constexpr int kRootTarget = 0;

struct SemanticDependency {
    std::string sentence_id;
    int predicate_token = 0;
    int target = kRootTarget;
    std::string label;

    bool operator==(const SemanticDependency&) const = default;
};

struct PredicateArgSet {
    std::string sentence_id;
    int predicate_token = 0;
    std::string sense;
    std::vector<std::pair<int, std::string>> args;  // (token, label)
};

struct ScoreReport {
    long labeled_correct = 0;
    long unlabeled_correct = 0;
    long predicted_total = 0;
    long gold_total = 0;

    double labeled_precision = 0, labeled_recall = 0, labeled_f1 = 0;
    double unlabeled_precision = 0, unlabeled_recall = 0, unlabeled_f1 = 0;
};

struct GoldRow {
    std::string sentence_id;
    std::string verb;        // lemma
    std::string verb_class;  // e.g. 37.7-1
    std::string vn_role;
    std::string pb_role;     // ARG0..ARG5 or ARGM-*
    std::string filler;
};

class SemLinkMap {
public:
    void insert(const std::string& verb_class, const std::string& vn_role,
                const std::string& pb_role);
    std::optional<std::string> lookup(const std::string& verb_class,
                                      const std::string& vn_role) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::pair<std::string, std::string>, std::string> entries_;
};

// One ROOT dependency (labeled with the sense) plus one per argument.
std::vector<SemanticDependency> to_semantic_deps(const std::vector<PredicateArgSet>& sets);

// Keyed dependency matching on (sentence, predicate, target); label equality
// additionally required on the labeled axis. Duplicate keys are an input
// error. An empty side scores 1.0 against an empty counterpart.
ScoreReport score(const std::vector<PredicateArgSet>& gold,
                  const std::vector<PredicateArgSet>& predicted);

// Strict strategy: a prediction matches a gold row when sentence, predicate
// lemma (case-insensitive) and role name agree and the predicted filler text
// contains every whitespace token of the gold filler. One-to-one greedy
// matching; labeled axis only (unlabeled mirrors labeled).
ScoreReport score_strict(const std::vector<GoldRow>& gold,
                         const std::vector<srl::RoleAssignment>& predicted);

// Per-entry SemLink lookup; nullopt marks an unmapped entry.
std::vector<std::optional<std::string>> map_vn_to_pb(
    const std::vector<std::pair<std::string, std::string>>& rows, const SemLinkMap& map);

// 3-column TSV: verb_class<TAB>vn_role<TAB>pb_role. # comments allowed.
SemLinkMap read_semlink_tsv(const std::string& text);

// 6-column gold TSV with a header line.
std::vector<GoldRow> read_gold_tsv(const std::string& text);
std::string write_gold_tsv(const std::vector<GoldRow>& rows);

// CoNLL-2009 columns: ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD
// DEPREL PDEPREL FILLPRED PRED APRED1..n. Sentences are numbered "1".. in
// file order; the k-th FILLPRED=Y row owns column APREDk.
std::vector<PredicateArgSet> read_conll2009(const std::string& text);
std::string write_conll2009(const std::vector<PredicateArgSet>& sets,
                            const std::vector<deps::DepGraph>& graphs);

// Groups assignments into predicate-argument sets: args are (filler_head,
// role name), the sense string is the sense IRI local name or, without a
// sense, the predicate lemma.
std::vector<PredicateArgSet> assignments_to_arg_sets(
    const std::vector<srl::RoleAssignment>& assignments);

// Rewrites VerbNet arg labels of each set to PropBank via SemLink, taking the
// verb class from the sense string (text after the first '.', else the whole
// sense). Unmapped labels are kept; their count is reported via out_unmapped.
std::vector<PredicateArgSet> map_arg_labels(const std::vector<PredicateArgSet>& sets,
                                            const SemLinkMap& map,
                                            std::size_t* out_unmapped = nullptr);

// Fixed CLI layout: six metric lines (percent, 2 decimals) then four counts.
std::string format_report(const ScoreReport& report);

}  // namespace framerole::scorer
