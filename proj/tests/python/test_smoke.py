"""Smoke tests for the python bindings: end-to-end labeling, scoring, merging."""

from pathlib import Path

import pytest

framerole = pytest.importorskip("framerole")

DATA = Path(__file__).resolve().parents[2] / "data"

CONQUEST_TRIPLES = """\
det, Spaniards-2, The-1,
nsubj, conquered-3, Spaniards-2,
root, ROOT-0, conquered-3,
det, Incas-5, the-4,
dobj, conquered-3, Incas-5
"""


@pytest.fixture(scope="module")
def store():
    return framerole.load_lexicon((DATA / "lexicon_toy.nt").read_text())


def test_lexicon_queries(store):
    senses = store.senses_for_lemma("conquer")
    assert [s.id.local_name() for s in senses] == ["Conquer_42030000"]
    assert senses[0].lemma == "conquer"
    assert store.senses_for_lemma("xyzzy") == []

    ranked = store.most_frequent_senses("run")
    assert [s.id.local_name() for s in ranked] == ["Run_51321000", "Run_26070000"]

    roles = store.roles_for_sense(senses[0].id)
    assert sorted(role.name for role, _ in roles) == ["Agent", "Instrument", "Patient"]

    args = store.prep_argument(senses[0].id, "with")
    assert [a.local_name() for a in args] == ["Instrument"]


def test_running_example_end_to_end(store):
    graph = framerole.parse_corenlp_triples(CONQUEST_TRIPLES)
    table = framerole.default_role_table()
    assignments = framerole.label_sentence(graph, [], store, table)
    assert [(a.label.name, a.filler.text) for a in assignments] == [
        ("Agent", "The Spaniards"),
        ("Patient", "the Incas"),
    ]

    kg = framerole.build_graph(assignments, graph, "http://example.org/py")
    assert len(kg) == 7
    ntriples = kg.serialize()
    assert '"The Spaniards"' in ntriples
    assert ntriples == kg.serialize()  # stable


def test_worked_scoring_example():
    gold = [framerole.PredicateArgSet("1", 3, "verb.01", [(2, "ARG0"), (5, "ARG1"), (9, "ARGM-TMP")])]
    pred = [framerole.PredicateArgSet("1", 3, "verb.02", [(2, "ARG0"), (5, "ARG1"), (9, "ARGM-LOC")])]
    report = framerole.score(gold, pred)
    assert report.labeled_precision == 0.5
    assert report.unlabeled_precision == 1.0
    assert report.labeled_correct == 2
    assert report.predicted_total == 4


def test_sense_selection_branches(store):
    frame = framerole.Iri("https://w3id.org/framester/framenet/abox/frame/Operating")
    sel = framerole.select_verb_sense("run", {frame}, store)
    assert sel.sense.local_name() == "Run_26070000"
    assert sel.provenance == framerole.SenseProvenance.FrameMatched

    fallback = framerole.select_verb_sense("run", set(), store)
    assert fallback.sense.local_name() == "Run_51321000"
    assert fallback.provenance == framerole.SenseProvenance.MostFrequentFallback

    assert framerole.select_verb_sense("flibber", set(), store) is None


def test_strict_scoring_and_merge(store):
    graph = framerole.parse_corenlp_triples(CONQUEST_TRIPLES)
    table = framerole.default_role_table()
    assignments = framerole.label_sentence(graph, [], store, table)

    gold = [
        framerole.GoldRow("1", "conquered", "42.3", "Agent", "ARG0", "The Spaniards"),
        framerole.GoldRow("1", "conquered", "42.3", "Patient", "ARG1", "the Incas"),
    ]
    report = framerole.score_strict(gold, assignments)
    assert report.labeled_f1 == 1.0

    primary = framerole.SystemOutput("base", assignments[:1])
    secondary = framerole.SystemOutput("other", assignments)
    merged = framerole.merge(primary, secondary)
    assert len(merged.assignments) == 2
    assert merged.name == "base+other"


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        framerole.load_lexicon("definitely not ntriples")
    with pytest.raises(ValueError):
        framerole.parse_corenlp_triples("nsubj, a-1, b-2\n")  # no root
