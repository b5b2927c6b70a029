#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "framerole/scorer.hpp"
#include "testutil.hpp"

using namespace framerole;
using scorer::GoldRow;
using scorer::PredicateArgSet;
using scorer::ScoreReport;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool close(double a, double b) { return std::abs(a - b) < 1e-12; }

PredicateArgSet set_of(const std::string& sid, int token, const std::string& sense,
                       std::vector<std::pair<int, std::string>> args) {
    return {sid, token, sense, std::move(args)};
}

srl::RoleAssignment assignment(const std::string& sid, int pred, const std::string& lemma,
                               const std::string& role, const std::string& filler) {
    srl::RoleAssignment a;
    a.sentence_id = sid;
    a.predicate_token = pred;
    a.predicate_lemma = lemma;
    a.label = {srl::RoleLabel::Kind::Specific, role, std::nullopt};
    a.filler_head = 1;
    a.filler = {1, 1, filler};
    return a;
}

}  // namespace

TEST_CASE("to_semantic_deps adds a ROOT dependency per predicate") {
    auto deps = scorer::to_semantic_deps(
        {set_of("1", 3, "verb.01", {{2, "ARG0"}, {5, "ARG1"}, {9, "ARGM-TMP"}})});
    REQUIRE(deps.size() == 4);
    CHECK(deps[0].target == scorer::kRootTarget);
    CHECK(deps[0].label == "verb.01");

    CHECK(scorer::to_semantic_deps({set_of("1", 3, "verb.01", {})}).size() == 1);

    auto two = scorer::to_semantic_deps({set_of("1", 3, "verb.01", {{2, "ARG0"}}),
                                         set_of("1", 7, "note.01", {{8, "ARG1"}, {9, "ARG2"}})});
    CHECK(two.size() == 5);  // (1 + 1) + (1 + 2)
}

TEST_CASE("worked example scores labeled 2/4 and unlabeled 4/4") {
    auto gold = set_of("1", 3, "verb.01", {{2, "ARG0"}, {5, "ARG1"}, {9, "ARGM-TMP"}});
    auto pred = set_of("1", 3, "verb.02", {{2, "ARG0"}, {5, "ARG1"}, {9, "ARGM-LOC"}});
    ScoreReport r = scorer::score({gold}, {pred});
    CHECK(r.labeled_correct == 2);
    CHECK(r.unlabeled_correct == 4);
    CHECK(r.predicted_total == 4);
    CHECK(r.gold_total == 4);
    CHECK(close(r.labeled_precision, 0.5));
    CHECK(close(r.unlabeled_precision, 1.0));
    CHECK(close(r.labeled_recall, 0.5));
    CHECK(close(r.unlabeled_recall, 1.0));
}

TEST_CASE("identical inputs score 1.0 on all six metrics") {
    auto sets = {set_of("1", 2, "verb.01", {{1, "ARG0"}}),
                 set_of("2", 4, "note.01", {{2, "ARG1"}, {6, "ARGM-TMP"}})};
    ScoreReport r = scorer::score(sets, sets);
    for (double m : {r.labeled_precision, r.labeled_recall, r.labeled_f1, r.unlabeled_precision,
                     r.unlabeled_recall, r.unlabeled_f1})
        CHECK(close(m, 1.0));
}

TEST_CASE("hand-counted two-predicate example") {
    // Gold: 2 predicates, 7 deps total (2 ROOT + 5 args).
    std::vector<PredicateArgSet> gold{
        set_of("1", 2, "sell.01", {{1, "ARG0"}, {4, "ARG1"}, {6, "ARGM-TMP"}}),
        set_of("1", 8, "buy.01", {{7, "ARG0"}, {9, "ARG1"}}),
    };
    // Predicted: 6 deps; 5 unlabeled hits, 4 labeled hits.
    // - sell kept with the right sense and args 1/4; arg 6 dropped; arg 11
    //   invented (keyless).
    // - buy sense wrong, so its ROOT is an unlabeled-only hit; arg 7 right.
    std::vector<PredicateArgSet> pred{
        set_of("1", 2, "sell.01", {{1, "ARG0"}, {4, "ARG1"}, {11, "ARG3"}}),
        set_of("1", 8, "buy.02", {{7, "ARG0"}}),
    };
    ScoreReport r = scorer::score(gold, pred);
    CHECK(r.gold_total == 7);
    CHECK(r.predicted_total == 6);
    CHECK(r.unlabeled_correct == 5);
    CHECK(r.labeled_correct == 4);
    CHECK(close(r.labeled_precision, 4.0 / 6.0));
    CHECK(close(r.labeled_recall, 4.0 / 7.0));
    CHECK(close(r.unlabeled_precision, 5.0 / 6.0));
    CHECK(close(r.unlabeled_recall, 5.0 / 7.0));
}

TEST_CASE("duplicate keys are rejected") {
    auto a = set_of("1", 2, "verb.01", {{1, "ARG0"}});
    CHECK_THROWS_AS((void)scorer::score({a, a}, {}), ParseError);
    auto dup_arg = set_of("1", 2, "verb.01", {{1, "ARG0"}, {1, "ARG1"}});
    CHECK_THROWS_AS((void)scorer::score({}, {dup_arg}), ParseError);
}

TEST_CASE("empty-side conventions: vacuous precision/recall, zero F1") {
    ScoreReport both = scorer::score({}, {});
    CHECK(close(both.labeled_f1, 1.0));
    CHECK(close(both.unlabeled_f1, 1.0));
    // Gold present, nothing predicted: precision is vacuously 1, recall 0.
    ScoreReport none_predicted = scorer::score({set_of("1", 2, "verb.01", {})}, {});
    CHECK(close(none_predicted.labeled_precision, 1.0));
    CHECK(close(none_predicted.labeled_recall, 0.0));
    CHECK(close(none_predicted.labeled_f1, 0.0));
    // Predictions against empty gold mirror that.
    ScoreReport no_gold = scorer::score({}, {set_of("1", 2, "verb.01", {})});
    CHECK(close(no_gold.labeled_precision, 0.0));
    CHECK(close(no_gold.labeled_recall, 1.0));
    CHECK(close(no_gold.labeled_f1, 0.0));
}

TEST_CASE("strict scorer follows the containment rule") {
    std::vector<GoldRow> gold{{"1", "total", "54.1-1", "Theme", "ARG1", "The Canadian pig herd"}};
    SUBCASE("exact filler matches") {
        auto r = scorer::score_strict(gold, {assignment("1", 3, "total", "Theme",
                                                        "The Canadian pig herd")});
        CHECK(r.labeled_correct == 1);
        CHECK(close(r.labeled_f1, 1.0));
        CHECK(close(r.unlabeled_f1, 1.0));  // unlabeled mirrors labeled
    }
    SUBCASE("missing words fail") {
        auto r = scorer::score_strict(gold, {assignment("1", 3, "total", "Theme", "Canadian pig")});
        CHECK(r.labeled_correct == 0);
    }
    SUBCASE("supersets still match") {
        auto r = scorer::score_strict(
            gold, {assignment("1", 3, "total", "Theme", "The Canadian pig herd totaled")});
        CHECK(r.labeled_correct == 1);
    }
    SUBCASE("role name must match") {
        auto r = scorer::score_strict(gold, {assignment("1", 3, "total", "Value",
                                                        "The Canadian pig herd")});
        CHECK(r.labeled_correct == 0);
    }
    SUBCASE("lemma comparison is case-insensitive") {
        std::vector<GoldRow> cap{{"1", "Total", "54.1-1", "Theme", "ARG1", "The herd"}};
        auto r = scorer::score_strict(cap, {assignment("1", 3, "total", "Theme", "The herd")});
        CHECK(r.labeled_correct == 1);
    }
    SUBCASE("containment is case-sensitive on surface tokens") {
        auto r = scorer::score_strict(gold, {assignment("1", 3, "total", "Theme",
                                                        "the canadian pig herd")});
        CHECK(r.labeled_correct == 0);
    }
}

TEST_CASE("semlink mapping covers the bundled fixture") {
    auto map = scorer::read_semlink_tsv(
        read_file(std::string(FRAMEROLE_DATA_DIR) + "/semlink_toy.tsv"));
    auto out = scorer::map_vn_to_pb({{"37.7-1", "Topic"},
                                     {"37.7-1", "Agent"},
                                     {"54.1-1", "Theme"},
                                     {"54.1-1", "Value"},
                                     {"99.9", "Agent"}},
                                    map);
    REQUIRE(out.size() == 5);
    CHECK(out[0] == "ARG1");
    CHECK(out[1] == "ARG0");
    CHECK(out[2] == "ARG1");
    CHECK(out[3] == "ARG2");
    CHECK_FALSE(out[4].has_value());  // unmapped, not guessed
}

TEST_CASE("gold TSV parses the annotation table rows") {
    std::string text =
        "sentence_id\tverb\tverb_class\tvn_role\tpb_role\tfiller\n"
        "1\tSay\t37.7-1\tTopic\tARG1\tThe Canadian pig herd totaled 10,674,500\n"
        "1\tSay\t37.7-1\tAgent\tARG0\tStatistics Canada, a federal agency\n"
        "1\tTotal\t54.1-1\tTheme\tARG1\tThe Canadian pig herd\n"
        "1\tTotal\t54.1-1\tValue\tARG2\t10,674,500\n";
    auto rows = scorer::read_gold_tsv(text);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].verb == "Say");
    CHECK(rows[2].vn_role == "Theme");
    CHECK(rows[3].pb_role == "ARG2");
    CHECK(rows[3].filler == "10,674,500");

    CHECK(scorer::read_gold_tsv("sentence_id\tverb\tverb_class\tvn_role\tpb_role\tfiller\n")
              .empty());
    CHECK_THROWS_AS((void)scorer::read_gold_tsv("wrong header\n"), ParseError);
    CHECK_THROWS_AS(
        (void)scorer::read_gold_tsv("sentence_id\tverb\tverb_class\tvn_role\tpb_role\tfiller\n"
                                    "1\tSay\t37.7-1\tTopic\tBOGUS\tx\n"),
        ParseError);
}

TEST_CASE("gold TSV round-trips a random fixture") {
    testutil::Rng rng(61);
    std::vector<GoldRow> rows;
    for (int i = 0; i < 50; ++i) {
        GoldRow row;
        row.sentence_id = std::to_string(testutil::rand_int(rng, 1, 9));
        row.verb = "verb" + std::to_string(i);
        row.verb_class = std::to_string(testutil::rand_int(rng, 10, 99)) + "." +
                         std::to_string(testutil::rand_int(rng, 1, 9));
        row.vn_role = testutil::pick(rng, std::vector<std::string>{"Agent", "Theme", "Value"});
        row.pb_role = testutil::coin(rng) ? "ARG" + std::to_string(testutil::rand_int(rng, 0, 5))
                                          : "ARGM-TMP";
        row.filler = "some filler " + std::to_string(i);
        rows.push_back(std::move(row));
    }
    auto again = scorer::read_gold_tsv(scorer::write_gold_tsv(rows));
    REQUIRE(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(again[i].sentence_id == rows[i].sentence_id);
        CHECK(again[i].verb == rows[i].verb);
        CHECK(again[i].verb_class == rows[i].verb_class);
        CHECK(again[i].vn_role == rows[i].vn_role);
        CHECK(again[i].pb_role == rows[i].pb_role);
        CHECK(again[i].filler == rows[i].filler);
    }
}

TEST_CASE("CoNLL-2009 reader assigns APRED columns to predicates in token order") {
    std::string gold = read_file(std::string(FRAMEROLE_FIXTURE_DIR) + "/worked_gold.conll09");
    auto sets = scorer::read_conll2009(gold);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].sentence_id == "1");
    CHECK(sets[0].predicate_token == 3);
    CHECK(sets[0].sense == "verb.01");
    REQUIRE(sets[0].args.size() == 3);
    CHECK(sets[0].args[0] == std::pair(2, std::string("ARG0")));
    CHECK(sets[0].args[1] == std::pair(5, std::string("ARG1")));
    CHECK(sets[0].args[2] == std::pair(9, std::string("ARGM-TMP")));
}

TEST_CASE("CoNLL-2009 sentences without predicates produce no sets") {
    std::string text =
        "1\tRain\train\train\tNOUN\tNOUN\t_\t_\t2\t2\tnsubj\tnsubj\t_\t_\n"
        "2\tfalls\tfall\tfall\tVERB\tVERB\t_\t_\t0\t0\troot\troot\t_\t_\n";
    CHECK(scorer::read_conll2009(text).empty());
}

TEST_CASE("CoNLL-2009 column violations are flagged") {
    // 2 predicates but only 1 APRED column.
    std::string bad =
        "1\ta\ta\ta\tV\tV\t_\t_\t0\t0\troot\troot\tY\tverb.01\t_\n"
        "2\tb\tb\tb\tV\tV\t_\t_\t1\t1\tdobj\tdobj\tY\tnote.01\t_\n";
    CHECK_THROWS_AS((void)scorer::read_conll2009(bad), ColumnCountError);

    std::string no_pred =
        "1\ta\ta\ta\tV\tV\t_\t_\t0\t0\troot\troot\tY\t_\t_\n";
    CHECK_THROWS_AS((void)scorer::read_conll2009(no_pred), ParseError);

    std::string bad_fill =
        "1\ta\ta\ta\tV\tV\t_\t_\t0\t0\troot\troot\tQ\t_\t_\n";
    CHECK_THROWS_AS((void)scorer::read_conll2009(bad_fill), ParseError);

    CHECK_THROWS_AS((void)scorer::read_conll2009("1\ta\ta\n"), ParseError);
}

TEST_CASE("CoNLL-2009 write/read round-trips random fixtures") {
    testutil::Rng rng(67);
    for (int round = 0; round < 60; ++round) {
        int sentences = testutil::rand_int(rng, 1, 3);
        std::vector<deps::DepGraph> graphs;
        std::vector<PredicateArgSet> sets;
        for (int s = 1; s <= sentences; ++s) {
            int n = testutil::rand_int(rng, 3, 12);
            graphs.push_back(testutil::random_tree(rng, n, std::to_string(s)));
            std::set<int> preds;
            for (int i = 0, k = testutil::rand_int(rng, 0, 3); i < k; ++i)
                preds.insert(testutil::rand_int(rng, 1, n));
            for (int p : preds) {
                PredicateArgSet set;
                set.sentence_id = std::to_string(s);
                set.predicate_token = p;
                set.sense = "verb.0" + std::to_string(testutil::rand_int(rng, 1, 3));
                std::set<int> args;
                for (int i = 0, k = testutil::rand_int(rng, 0, 4); i < k; ++i)
                    args.insert(testutil::rand_int(rng, 1, n));
                for (int arg : args)
                    set.args.emplace_back(arg, testutil::pick(rng, testutil::arg_labels()));
                sets.push_back(std::move(set));
            }
        }
        auto text = scorer::write_conll2009(sets, graphs);
        auto again = scorer::read_conll2009(text);
        REQUIRE(again.size() == sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            CHECK(again[i].sentence_id == sets[i].sentence_id);
            CHECK(again[i].predicate_token == sets[i].predicate_token);
            CHECK(again[i].sense == sets[i].sense);
            CHECK(again[i].args == sets[i].args);
        }
    }
}

TEST_CASE("map_arg_labels rewrites via the class in the sense string") {
    auto map = scorer::read_semlink_tsv("54.1-1\tTheme\tARG1\n54.1-1\tValue\tARG2\n");
    std::vector<PredicateArgSet> sets{
        set_of("1", 3, "total.54.1-1", {{2, "Theme"}, {4, "Value"}, {6, "Mystery"}})};
    std::size_t unmapped = 0;
    auto mapped = scorer::map_arg_labels(sets, map, &unmapped);
    CHECK(mapped[0].args[0].second == "ARG1");
    CHECK(mapped[0].args[1].second == "ARG2");
    CHECK(mapped[0].args[2].second == "Mystery");  // kept, reported
    CHECK(unmapped == 1);
    CHECK(mapped[0].sense == "total.54.1-1");  // sense untouched
}

TEST_CASE("labeled metrics never exceed unlabeled ones") {
    testutil::Rng rng(71);
    for (int round = 0; round < 250; ++round) {
        auto gold = testutil::random_arg_sets(rng);
        auto pred = testutil::mutate_arg_sets(rng, gold);
        ScoreReport r = scorer::score(gold, pred);
        CHECK(r.labeled_precision <= r.unlabeled_precision + 1e-12);
        CHECK(r.labeled_recall <= r.unlabeled_recall + 1e-12);
        CHECK(r.labeled_correct <= r.unlabeled_correct);
    }
}

TEST_CASE("swapping gold and predicted swaps precision and recall") {
    testutil::Rng rng(73);
    for (int round = 0; round < 200; ++round) {
        auto a = testutil::random_arg_sets(rng);
        auto b = testutil::mutate_arg_sets(rng, a);
        ScoreReport ab = scorer::score(a, b);
        ScoreReport ba = scorer::score(b, a);
        CHECK(close(ab.labeled_precision, ba.labeled_recall));
        CHECK(close(ab.labeled_recall, ba.labeled_precision));
        CHECK(close(ab.unlabeled_precision, ba.unlabeled_recall));
        CHECK(close(ab.unlabeled_recall, ba.unlabeled_precision));
    }
}

TEST_CASE("score agrees with the brute-force oracle") {
    testutil::Rng rng(79);
    for (int round = 0; round < 250; ++round) {
        auto gold = testutil::random_arg_sets(rng);
        auto pred = testutil::mutate_arg_sets(rng, gold);
        ScoreReport fast = scorer::score(gold, pred);
        ScoreReport slow = testutil::oracle_score(gold, pred);
        CHECK(fast.labeled_correct == slow.labeled_correct);
        CHECK(fast.unlabeled_correct == slow.unlabeled_correct);
        CHECK(fast.predicted_total == slow.predicted_total);
        CHECK(fast.gold_total == slow.gold_total);
        CHECK(close(fast.labeled_f1, slow.labeled_f1));
        CHECK(close(fast.unlabeled_f1, slow.unlabeled_f1));
    }
}

TEST_CASE("garbage input never escapes the library error types") {
    testutil::Rng rng(97);
    CHECK(testutil::survives_garbage(rng, 300,
                                     [](const std::string& s) { scorer::read_conll2009(s); }));
    CHECK(testutil::survives_garbage(rng, 300,
                                     [](const std::string& s) { scorer::read_gold_tsv(s); }));
    CHECK(testutil::survives_garbage(rng, 300,
                                     [](const std::string& s) { scorer::read_semlink_tsv(s); }));
}

TEST_CASE("report layout is six metrics then four counts") {
    auto gold = set_of("1", 3, "verb.01", {{2, "ARG0"}, {5, "ARG1"}, {9, "ARGM-TMP"}});
    auto pred = set_of("1", 3, "verb.02", {{2, "ARG0"}, {5, "ARG1"}, {9, "ARGM-LOC"}});
    std::string report = scorer::format_report(scorer::score({gold}, {pred}));
    CHECK(report ==
          "labeled_precision\t50.00\n"
          "labeled_recall\t50.00\n"
          "labeled_f1\t50.00\n"
          "unlabeled_precision\t100.00\n"
          "unlabeled_recall\t100.00\n"
          "unlabeled_f1\t100.00\n"
          "labeled_correct\t2\n"
          "unlabeled_correct\t4\n"
          "predicted_total\t4\n"
          "gold_total\t4\n");
}
