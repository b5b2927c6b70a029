// framerole command line: label sentences, score outputs, merge systems,
// validate lexicon snapshots, fetch lexicon fragments from an endpoint.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framerole/ensemble.hpp"
#include "framerole/kg.hpp"
#include "framerole/remote.hpp"
#include "framerole/scorer.hpp"
#include "framerole/srl.hpp"

namespace {

using namespace framerole;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvariantError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::optional<std::string>& path, const std::string& data) {
    if (!path) {
        std::cout << data;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw Error("cannot write " + *path);
    out << data;
}

struct LabelOptions {
    std::string input_path;
    std::string lexicon_path;
    std::string input_format = "conllu";
    std::string emit = "kg";
    std::string base = kg::kDefaultBase;
    std::optional<std::string> frames_path;
    std::optional<std::string> role_table_path;
    std::optional<std::string> out_path;
    std::optional<std::string> endpoint;
    std::optional<std::string> cache_dir;
    bool no_frames = false;
    int jobs = 1;
};

int run_label(const LabelOptions& opt) {
    std::vector<deps::DepGraph> graphs;
    std::string input = read_file(opt.input_path);
    if (opt.input_format == "conllu") {
        graphs = deps::parse_conllu(input);
    } else if (opt.input_format == "corenlp") {
        graphs.push_back(deps::parse_corenlp_triples(input));
    } else {
        throw Error("unknown input format: " + opt.input_format);
    }

    lexicon::LexiconStore store = [&] {
        rdf::ParsedTriples triples = rdf::parse_ntriples(read_file(opt.lexicon_path));
        if (opt.endpoint) {
            std::string cache = opt.cache_dir.value_or("");
            if (cache.empty()) {
                if (const char* env = std::getenv("FRAMEROLE_CACHE")) cache = env;
            }
            if (cache.empty()) throw Error("--endpoint requires --cache-dir or FRAMEROLE_CACHE");
            std::vector<std::string> lemmas;
            for (const deps::DepGraph& g : graphs)
                for (const deps::Token& t : g.tokens())
                    if (t.upos == "VERB") lemmas.push_back(t.lemma);
            std::sort(lemmas.begin(), lemmas.end());
            lemmas.erase(std::unique(lemmas.begin(), lemmas.end()), lemmas.end());
            rdf::ParsedTriples fetched = remote::fetch_lemma_bundle(*opt.endpoint, lemmas, cache);
            for (std::size_t i = 0; i < fetched.triples.size(); ++i) {
                triples.triples.push_back(fetched.triples[i]);
                triples.lines.push_back(0);
            }
        }
        return lexicon::load_from_triples(std::move(triples));
    }();

    heuristics::RoleTable table = heuristics::load_role_table(
        opt.role_table_path ? std::optional(read_file(*opt.role_table_path)) : std::nullopt);

    std::vector<srl::FrameAnnotation> annotations;
    if (opt.frames_path && !opt.no_frames)
        annotations = srl::parse_frame_annotations(read_file(*opt.frames_path));

    // Sentences are independent; label them in a small worker pool but emit
    // in input order.
    std::vector<std::vector<srl::RoleAssignment>> results(graphs.size());
    if (opt.jobs > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= graphs.size()) return;
                results[i] = srl::label_sentence(graphs[i], annotations, store, table);
            }
        };
        std::vector<std::future<void>> pool;
        for (int j = 0; j < opt.jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    } else {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            results[i] = srl::label_sentence(graphs[i], annotations, store, table);
    }

    std::string out;
    if (opt.emit == "tsv") {
        for (const auto& assignments : results) out += srl::write_assignments_tsv(assignments);
    } else if (opt.emit == "kg") {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out += kg::serialize(kg::build_graph(results[i], graphs[i], opt.base));
    } else {
        throw Error("unknown emit format: " + opt.emit);
    }
    write_output(opt.out_path, out);
    return kExitOk;
}

struct ScoreOptions {
    std::string gold_path;
    std::string pred_path;
    std::optional<std::string> semlink_path;
    bool strict = false;
};

int run_score(const ScoreOptions& opt) {
    scorer::ScoreReport report;
    if (opt.strict) {
        auto gold = scorer::read_gold_tsv(read_file(opt.gold_path));
        auto pred = srl::read_assignments_tsv(read_file(opt.pred_path));
        report = scorer::score_strict(gold, pred);
    } else {
        auto gold = scorer::read_conll2009(read_file(opt.gold_path));
        auto pred = scorer::read_conll2009(read_file(opt.pred_path));
        if (opt.semlink_path) {
            scorer::SemLinkMap map = scorer::read_semlink_tsv(read_file(*opt.semlink_path));
            std::size_t unmapped = 0;
            pred = scorer::map_arg_labels(pred, map, &unmapped);
            if (unmapped > 0)
                std::cerr << "semlink: " << unmapped << " argument label(s) left unmapped\n";
        }
        report = scorer::score(gold, pred);
    }
    std::cout << scorer::format_report(report);
    return kExitOk;
}

struct MergeOptions {
    std::string primary_path;
    std::string secondary_path;
    std::string prefer = "primary";
    std::optional<std::string> out_path;
};

int run_merge(const MergeOptions& opt) {
    ensemble::SystemOutput primary{"primary",
                                   srl::read_assignments_tsv(read_file(opt.primary_path))};
    ensemble::SystemOutput secondary{"secondary",
                                     srl::read_assignments_tsv(read_file(opt.secondary_path))};
    ensemble::SystemOutput merged = opt.prefer == "secondary"
                                        ? ensemble::merge(secondary, primary)
                                        : ensemble::merge(primary, secondary);
    write_output(opt.out_path, srl::write_assignments_tsv(merged.assignments));
    return kExitOk;
}

int run_lexicon_validate(const std::string& path) {
    lexicon::LexiconStore store = lexicon::load_lexicon(read_file(path));
    std::cout << "ok\t" << store.size() << " triples\n";
    return kExitOk;
}

struct FetchOptions {
    std::string endpoint;
    std::vector<std::string> lemmas;
    std::string cache_dir;
    std::optional<std::string> out_path;
};

int run_lexicon_fetch(const FetchOptions& opt) {
    std::string cache = opt.cache_dir;
    if (cache.empty()) {
        if (const char* env = std::getenv("FRAMEROLE_CACHE")) cache = env;
    }
    if (cache.empty()) throw Error("fetch requires --cache-dir or FRAMEROLE_CACHE");
    rdf::ParsedTriples fetched = remote::fetch_lemma_bundle(opt.endpoint, opt.lemmas, cache);
    write_output(opt.out_path, rdf::serialize_ntriples(fetched.triples, /*sorted=*/true));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic role labeling to role-oriented knowledge graphs"};
    app.require_subcommand(1);

    LabelOptions label;
    CLI::App* label_cmd = app.add_subcommand("label", "label sentences with semantic roles");
    label_cmd->add_option("--input", label.input_path, "dependency parses")->required();
    label_cmd->add_option("--lexicon", label.lexicon_path, "lexicon N-Triples file")->required();
    label_cmd->add_option("--input-format", label.input_format, "conllu|corenlp")
        ->check(CLI::IsMember({"conllu", "corenlp"}));
    label_cmd->add_option("--frames", label.frames_path, "frame annotations TSV");
    label_cmd->add_flag("--no-frames", label.no_frames,
                        "ignore frame annotations (most-frequent-sense path)");
    label_cmd->add_option("--role-table", label.role_table_path, "relation->role config");
    label_cmd->add_option("--emit", label.emit, "kg|tsv")
        ->check(CLI::IsMember({"kg", "tsv"}));
    label_cmd->add_option("--base", label.base, "namespace for emitted IRIs");
    label_cmd->add_option("--out", label.out_path, "output path (default stdout)");
    label_cmd->add_option("--endpoint", label.endpoint, "lexicon HTTP endpoint");
    label_cmd->add_option("--cache-dir", label.cache_dir,
                          "endpoint cache directory (default $FRAMEROLE_CACHE)");
    label_cmd->add_option("--jobs", label.jobs, "worker threads")->check(CLI::PositiveNumber);

    ScoreOptions score;
    CLI::App* score_cmd = app.add_subcommand("score", "score predictions against gold");
    score_cmd->add_option("--gold", score.gold_path, "gold file")->required();
    score_cmd->add_option("--pred", score.pred_path, "prediction file")->required();
    score_cmd->add_flag("--strict", score.strict,
                        "strict filler matching (gold TSV vs assignment TSV)");
    score_cmd->add_option("--semlink", score.semlink_path, "VerbNet->PropBank mapping TSV");

    MergeOptions merge;
    CLI::App* merge_cmd = app.add_subcommand("merge", "merge two systems' assignments");
    merge_cmd->add_option("--primary", merge.primary_path, "primary assignment TSV")->required();
    merge_cmd->add_option("--secondary", merge.secondary_path, "secondary assignment TSV")
        ->required();
    merge_cmd->add_option("--prefer", merge.prefer, "which side wins key conflicts")
        ->check(CLI::IsMember({"primary", "secondary"}));
    merge_cmd->add_option("--out", merge.out_path, "output path (default stdout)");

    CLI::App* lexicon_cmd = app.add_subcommand("lexicon", "lexicon utilities");
    lexicon_cmd->require_subcommand(1);
    std::string validate_path;
    CLI::App* validate_cmd = lexicon_cmd->add_subcommand("validate", "check store invariants");
    validate_cmd->add_option("file", validate_path, "lexicon N-Triples file")->required();

    FetchOptions fetch;
    CLI::App* fetch_cmd = lexicon_cmd->add_subcommand("fetch", "import triples from an endpoint");
    fetch_cmd->add_option("--endpoint", fetch.endpoint, "lexicon HTTP endpoint")->required();
    fetch_cmd->add_option("--lemma", fetch.lemmas, "lemma(s) to fetch")->required();
    fetch_cmd->add_option("--cache-dir", fetch.cache_dir,
                          "cache directory (default $FRAMEROLE_CACHE)");
    fetch_cmd->add_option("--out", fetch.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (label_cmd->parsed()) return run_label(label);
        if (score_cmd->parsed()) return run_score(score);
        if (merge_cmd->parsed()) return run_merge(merge);
        if (validate_cmd->parsed()) return run_lexicon_validate(validate_path);
        if (fetch_cmd->parsed()) return run_lexicon_fetch(fetch);
    } catch (const CycleError& e) {
        std::cerr << "CycleError: " << e.what() << "\n";
        return kExitInvariantError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantError;
    }
    return kExitInputError;
}
