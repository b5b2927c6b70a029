#include "framerole/scorer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace framerole::scorer {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
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

std::vector<std::string> whitespace_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Vacuous convention: zero predictions have precision 1, zero gold has
// recall 1. F1 still lands on 0 whenever the other side is empty.
double ratio(long numerator, long denominator) {
    return denominator > 0 ? double(numerator) / double(denominator) : 1.0;
}

double f1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

void validate_sets(const std::vector<PredicateArgSet>& sets, const char* side) {
    std::set<std::pair<std::string, int>> predicates;
    for (const PredicateArgSet& s : sets) {
        if (!predicates.emplace(s.sentence_id, s.predicate_token).second)
            throw ParseError(0, std::string(side) + ": duplicate predicate " + s.sentence_id +
                                    "#" + std::to_string(s.predicate_token));
        std::set<int> tokens;
        for (const auto& [token, label] : s.args) {
            if (!tokens.insert(token).second)
                throw ParseError(0, std::string(side) + ": duplicate argument token " +
                                        std::to_string(token) + " for predicate " + s.sentence_id +
                                        "#" + std::to_string(s.predicate_token));
        }
    }
}

struct DepKey {
    std::string sentence_id;
    int predicate;
    int target;

    auto operator<=>(const DepKey&) const = default;
};

}  // namespace

std::vector<SemanticDependency> to_semantic_deps(const std::vector<PredicateArgSet>& sets) {
    std::vector<SemanticDependency> out;
    for (const PredicateArgSet& s : sets) {
        out.push_back({s.sentence_id, s.predicate_token, kRootTarget, s.sense});
        for (const auto& [token, label] : s.args)
            out.push_back({s.sentence_id, s.predicate_token, token, label});
    }
    return out;
}

ScoreReport score(const std::vector<PredicateArgSet>& gold,
                  const std::vector<PredicateArgSet>& predicted) {
    validate_sets(gold, "gold");
    validate_sets(predicted, "predicted");

    std::vector<SemanticDependency> gold_deps = to_semantic_deps(gold);
    std::vector<SemanticDependency> pred_deps = to_semantic_deps(predicted);

    std::map<DepKey, std::string> gold_index;
    for (const SemanticDependency& d : gold_deps)
        gold_index.emplace(DepKey{d.sentence_id, d.predicate_token, d.target}, d.label);

    ScoreReport report;
    report.gold_total = long(gold_deps.size());
    report.predicted_total = long(pred_deps.size());
    for (const SemanticDependency& d : pred_deps) {
        auto it = gold_index.find({d.sentence_id, d.predicate_token, d.target});
        if (it == gold_index.end()) continue;
        ++report.unlabeled_correct;
        if (it->second == d.label) ++report.labeled_correct;
    }

    report.labeled_precision = ratio(report.labeled_correct, report.predicted_total);
    report.labeled_recall = ratio(report.labeled_correct, report.gold_total);
    report.labeled_f1 = f1(report.labeled_precision, report.labeled_recall);
    report.unlabeled_precision = ratio(report.unlabeled_correct, report.predicted_total);
    report.unlabeled_recall = ratio(report.unlabeled_correct, report.gold_total);
    report.unlabeled_f1 = f1(report.unlabeled_precision, report.unlabeled_recall);
    return report;
}

ScoreReport score_strict(const std::vector<GoldRow>& gold,
                         const std::vector<srl::RoleAssignment>& predicted) {
    std::vector<bool> consumed(gold.size(), false);

    long correct = 0;
    for (const srl::RoleAssignment& p : predicted) {
        std::vector<std::string> pred_tokens = whitespace_tokens(p.filler.text);
        auto contains_all = [&](const std::string& gold_filler) {
            for (const std::string& needed : whitespace_tokens(gold_filler)) {
                if (std::find(pred_tokens.begin(), pred_tokens.end(), needed) == pred_tokens.end())
                    return false;
            }
            return true;
        };
        for (std::size_t i = 0; i < gold.size(); ++i) {
            if (consumed[i]) continue;
            const GoldRow& g = gold[i];
            if (g.sentence_id != p.sentence_id) continue;
            if (lowercase(g.verb) != lowercase(p.predicate_lemma)) continue;
            if (g.vn_role != p.label.name) continue;
            if (!contains_all(g.filler)) continue;
            consumed[i] = true;
            ++correct;
            break;
        }
    }

    ScoreReport report;
    report.labeled_correct = correct;
    report.unlabeled_correct = correct;
    report.predicted_total = long(predicted.size());
    report.gold_total = long(gold.size());
    report.labeled_precision = ratio(correct, report.predicted_total);
    report.labeled_recall = ratio(correct, report.gold_total);
    report.labeled_f1 = f1(report.labeled_precision, report.labeled_recall);
    report.unlabeled_precision = report.labeled_precision;
    report.unlabeled_recall = report.labeled_recall;
    report.unlabeled_f1 = report.labeled_f1;
    return report;
}

void SemLinkMap::insert(const std::string& verb_class, const std::string& vn_role,
                        const std::string& pb_role) {
    entries_[{verb_class, vn_role}] = pb_role;
}

std::optional<std::string> SemLinkMap::lookup(const std::string& verb_class,
                                              const std::string& vn_role) const {
    auto it = entries_.find({verb_class, vn_role});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::optional<std::string>> map_vn_to_pb(
    const std::vector<std::pair<std::string, std::string>>& rows, const SemLinkMap& map) {
    std::vector<std::optional<std::string>> out;
    out.reserve(rows.size());
    for (const auto& [verb_class, vn_role] : rows) out.push_back(map.lookup(verb_class, vn_role));
    return out;
}

SemLinkMap read_semlink_tsv(const std::string& text) {
    SemLinkMap map;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 3)
            throw ParseError(lineno, "expected verb_class<TAB>vn_role<TAB>pb_role");
        map.insert(cols[0], cols[1], cols[2]);
    }
    return map;
}

namespace {

const char* kGoldHeader = "sentence_id\tverb\tverb_class\tvn_role\tpb_role\tfiller";

bool valid_pb_role(const std::string& role) {
    if (role.size() == 4 && role.rfind("ARG", 0) == 0 && role[3] >= '0' && role[3] <= '5')
        return true;
    return role.size() > 5 && role.rfind("ARGM-", 0) == 0;
}

}  // namespace

std::vector<GoldRow> read_gold_tsv(const std::string& text) {
    std::vector<GoldRow> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != kGoldHeader)
                throw ParseError(lineno, "missing gold TSV header");
            saw_header = true;
            continue;
        }
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 6) throw ParseError(lineno, "expected 6 tab-separated columns");
        GoldRow row{cols[0], cols[1], cols[2], cols[3], cols[4], cols[5]};
        if (!valid_pb_role(row.pb_role))
            throw ParseError(lineno, "'" + row.pb_role + "' is not a PropBank role");
        out.push_back(std::move(row));
    }
    return out;
}

std::string write_gold_tsv(const std::vector<GoldRow>& rows) {
    std::string out = std::string(kGoldHeader) + "\n";
    for (const GoldRow& r : rows) {
        out += r.sentence_id + "\t" + r.verb + "\t" + r.verb_class + "\t" + r.vn_role + "\t" +
               r.pb_role + "\t" + r.filler + "\n";
    }
    return out;
}

std::vector<PredicateArgSet> read_conll2009(const std::string& text) {
    std::vector<PredicateArgSet> out;

    std::vector<std::vector<std::string>> rows;
    std::size_t sentence_start_line = 0;
    int sentence_number = 0;
    std::size_t lineno = 0;

    auto flush = [&]() {
        if (rows.empty()) return;
        ++sentence_number;
        std::string sid = std::to_string(sentence_number);

        std::vector<std::pair<int, std::string>> predicates;  // (token, sense)
        for (const auto& cols : rows) {
            int token = std::stoi(cols[0]);
            const std::string& fillpred = cols[12];
            const std::string& pred = cols[13];
            if (fillpred == "Y") {
                if (pred == "_")
                    throw ParseError(sentence_start_line, "FILLPRED=Y row without PRED");
                predicates.emplace_back(token, pred);
            } else if (fillpred == "_") {
                if (pred != "_")
                    throw ParseError(sentence_start_line, "PRED set on a FILLPRED=_ row");
            } else {
                throw ParseError(sentence_start_line, "FILLPRED must be Y or _");
            }
        }

        std::size_t apreds = rows.front().size() - 14;
        if (apreds != predicates.size())
            throw ColumnCountError(sentence_start_line,
                                   "sentence has " + std::to_string(predicates.size()) +
                                       " predicates but " + std::to_string(apreds) +
                                       " APRED columns");

        std::vector<PredicateArgSet> sets;
        for (const auto& [token, sense] : predicates)
            sets.push_back({sid, token, sense, {}});
        for (const auto& cols : rows) {
            int token = std::stoi(cols[0]);
            for (std::size_t k = 0; k < apreds; ++k) {
                const std::string& cell = cols[14 + k];
                if (cell != "_") sets[k].args.emplace_back(token, cell);
            }
        }
        out.insert(out.end(), sets.begin(), sets.end());
        rows.clear();
    };

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') continue;

        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() < 14)
            throw ParseError(lineno, "expected at least 14 columns, got " +
                                         std::to_string(cols.size()));
        if (!rows.empty() && cols.size() != rows.front().size())
            throw ColumnCountError(lineno, "inconsistent column count within sentence");
        try {
            (void)std::stoi(cols[0]);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad token id '" + cols[0] + "'");
        }
        if (rows.empty()) sentence_start_line = lineno;
        rows.push_back(std::move(cols));
    }
    flush();
    return out;
}

std::string write_conll2009(const std::vector<PredicateArgSet>& sets,
                            const std::vector<deps::DepGraph>& graphs) {
    validate_sets(sets, "output");

    std::map<std::string, std::vector<const PredicateArgSet*>> by_sentence;
    for (const PredicateArgSet& s : sets) by_sentence[s.sentence_id].push_back(&s);

    // Every set must land on a known sentence and real tokens, or the output
    // would not read back.
    std::map<std::string, const deps::DepGraph*> graph_of;
    for (const deps::DepGraph& g : graphs) graph_of[g.sentence_id()] = &g;
    for (const PredicateArgSet& s : sets) {
        auto it = graph_of.find(s.sentence_id);
        if (it == graph_of.end())
            throw Error("no sentence '" + s.sentence_id + "' for predicate " +
                        std::to_string(s.predicate_token));
        if (!it->second->has_token(s.predicate_token))
            throw Error("predicate token " + std::to_string(s.predicate_token) +
                        " not in sentence '" + s.sentence_id + "'");
        for (const auto& [token, label] : s.args) {
            if (!it->second->has_token(token))
                throw Error("argument token " + std::to_string(token) + " not in sentence '" +
                            s.sentence_id + "'");
        }
    }

    std::string out;
    for (const deps::DepGraph& g : graphs) {
        std::vector<const PredicateArgSet*> sentence_sets;
        if (auto it = by_sentence.find(g.sentence_id()); it != by_sentence.end())
            sentence_sets = it->second;
        std::sort(sentence_sets.begin(), sentence_sets.end(),
                  [](const PredicateArgSet* a, const PredicateArgSet* b) {
                      return a->predicate_token < b->predicate_token;
                  });

        std::map<int, const PredicateArgSet*> by_token;
        for (const PredicateArgSet* s : sentence_sets) by_token[s->predicate_token] = s;
        std::map<std::pair<std::size_t, int>, std::string> apred;  // (column, token) -> label
        for (std::size_t k = 0; k < sentence_sets.size(); ++k)
            for (const auto& [token, label] : sentence_sets[k]->args)
                apred[{k, token}] = label;

        for (const deps::Token& t : g.tokens()) {
            const deps::DepEdge* incoming = nullptr;
            for (const deps::DepEdge& e : g.edges())
                if (e.dependent == t.index) incoming = &e;

            auto pred_it = by_token.find(t.index);
            std::string fillpred = pred_it != by_token.end() ? "Y" : "_";
            std::string pred = pred_it != by_token.end() ? pred_it->second->sense : "_";

            out += std::to_string(t.index) + "\t" + t.form + "\t" + t.lemma + "\t" + t.lemma +
                   "\t" + t.upos + "\t" + t.upos + "\t_\t_\t" + std::to_string(incoming->head) +
                   "\t" + std::to_string(incoming->head) + "\t" + incoming->relation + "\t" +
                   incoming->relation + "\t" + fillpred + "\t" + pred;
            for (std::size_t k = 0; k < sentence_sets.size(); ++k) {
                auto cell = apred.find({k, t.index});
                out += "\t" + (cell != apred.end() ? cell->second : std::string("_"));
            }
            out += "\n";
        }
        out += "\n";
    }
    return out;
}

std::vector<PredicateArgSet> assignments_to_arg_sets(
    const std::vector<srl::RoleAssignment>& assignments) {
    std::map<std::pair<std::string, int>, PredicateArgSet> grouped;
    std::vector<std::pair<std::string, int>> order;
    for (const srl::RoleAssignment& a : assignments) {
        auto key = std::make_pair(a.sentence_id, a.predicate_token);
        auto [it, inserted] = grouped.try_emplace(key);
        if (inserted) {
            it->second.sentence_id = a.sentence_id;
            it->second.predicate_token = a.predicate_token;
            it->second.sense = a.sense ? a.sense->local_name() : a.predicate_lemma;
            order.push_back(key);
        }
        it->second.args.emplace_back(a.filler_head, a.label.name);
    }
    std::vector<PredicateArgSet> out;
    out.reserve(order.size());
    for (const auto& key : order) out.push_back(std::move(grouped.at(key)));
    return out;
}

std::vector<PredicateArgSet> map_arg_labels(const std::vector<PredicateArgSet>& sets,
                                            const SemLinkMap& map,
                                            std::size_t* out_unmapped) {
    std::size_t unmapped = 0;
    std::vector<PredicateArgSet> out = sets;
    for (PredicateArgSet& s : out) {
        auto dot = s.sense.find('.');
        std::string verb_class = dot == std::string::npos ? s.sense : s.sense.substr(dot + 1);
        for (auto& [token, label] : s.args) {
            if (auto pb = map.lookup(verb_class, label)) label = *pb;
            else ++unmapped;
        }
    }
    if (out_unmapped) *out_unmapped = unmapped;
    return out;
}

std::string format_report(const ScoreReport& report) {
    char buf[64];
    std::string out;
    auto metric = [&](const char* name, double value) {
        std::snprintf(buf, sizeof buf, "%s\t%.2f\n", name, value * 100.0);
        out += buf;
    };
    metric("labeled_precision", report.labeled_precision);
    metric("labeled_recall", report.labeled_recall);
    metric("labeled_f1", report.labeled_f1);
    metric("unlabeled_precision", report.unlabeled_precision);
    metric("unlabeled_recall", report.unlabeled_recall);
    metric("unlabeled_f1", report.unlabeled_f1);
    out += "labeled_correct\t" + std::to_string(report.labeled_correct) + "\n";
    out += "unlabeled_correct\t" + std::to_string(report.unlabeled_correct) + "\n";
    out += "predicted_total\t" + std::to_string(report.predicted_total) + "\n";
    out += "gold_total\t" + std::to_string(report.gold_total) + "\n";
    return out;
}

}  // namespace framerole::scorer
