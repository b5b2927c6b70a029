// Python bindings for the labeling, scoring and merging operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "framerole/ensemble.hpp"
#include "framerole/kg.hpp"
#include "framerole/remote.hpp"
#include "framerole/scorer.hpp"
#include "framerole/srl.hpp"

namespace py = pybind11;
using namespace framerole;

PYBIND11_MODULE(_core, m) {
    m.doc() = "semantic role labeling to role-oriented knowledge graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<TreeError>(m, "TreeError", PyExc_ValueError);
    py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<rdf::Iri>(m, "Iri")
        .def(py::init<std::string>())
        .def_readonly("value", &rdf::Iri::value)
        .def("local_name", &rdf::Iri::local_name)
        .def("__str__", [](const rdf::Iri& i) { return i.value; })
        .def("__repr__", [](const rdf::Iri& i) { return "Iri(" + i.value + ")"; })
        .def("__eq__", [](const rdf::Iri& a, const rdf::Iri& b) { return a == b; })
        .def("__lt__", [](const rdf::Iri& a, const rdf::Iri& b) { return a < b; })
        .def("__hash__", [](const rdf::Iri& i) { return py::hash(py::str(i.value)); });
    py::implicitly_convertible<py::str, rdf::Iri>();

    py::class_<lexicon::VerbSense>(m, "VerbSense")
        .def_readonly("id", &lexicon::VerbSense::id)
        .def_readonly("lemma", &lexicon::VerbSense::lemma)
        .def_readonly("labels", &lexicon::VerbSense::labels)
        .def_readonly("verb_class", &lexicon::VerbSense::verb_class)
        .def_readonly("tag_count", &lexicon::VerbSense::tag_count)
        .def_readonly("frames", &lexicon::VerbSense::frames);

    py::class_<lexicon::SpecificRole>(m, "SpecificRole")
        .def_readonly("id", &lexicon::SpecificRole::id)
        .def_readonly("name", &lexicon::SpecificRole::name)
        .def_readonly("in_sense", &lexicon::SpecificRole::in_sense)
        .def_readonly("subsumed_under", &lexicon::SpecificRole::subsumed_under);

    py::class_<lexicon::InterfaceRoleId>(m, "InterfaceRoleId")
        .def_readonly("id", &lexicon::InterfaceRoleId::id)
        .def_readonly("name", &lexicon::InterfaceRoleId::name);

    py::class_<lexicon::LexiconStore>(m, "LexiconStore")
        .def("senses_for_lemma", &lexicon::LexiconStore::senses_for_lemma)
        .def("most_frequent_senses", &lexicon::LexiconStore::most_frequent_senses)
        .def("senses_for_lemma_and_frame", &lexicon::LexiconStore::senses_for_lemma_and_frame)
        .def("roles_for_sense", &lexicon::LexiconStore::roles_for_sense)
        .def("prep_argument", &lexicon::LexiconStore::prep_argument)
        .def("frame_subsumes", &lexicon::LexiconStore::frame_subsumes)
        .def("role_apex", &lexicon::LexiconStore::role_apex)
        .def("display_name", &lexicon::LexiconStore::display_name)
        .def("serialize", &lexicon::LexiconStore::serialize)
        .def("__len__", &lexicon::LexiconStore::size);

    m.def("load_lexicon", &lexicon::load_lexicon, py::arg("ntriples_text"));

    py::class_<deps::Token>(m, "Token")
        .def_readonly("index", &deps::Token::index)
        .def_readonly("form", &deps::Token::form)
        .def_readonly("lemma", &deps::Token::lemma)
        .def_readonly("upos", &deps::Token::upos);

    py::class_<deps::DepEdge>(m, "DepEdge")
        .def_readonly("relation", &deps::DepEdge::relation)
        .def_readonly("head", &deps::DepEdge::head)
        .def_readonly("dependent", &deps::DepEdge::dependent);

    py::class_<deps::Span>(m, "Span")
        .def_readonly("start", &deps::Span::start)
        .def_readonly("end", &deps::Span::end)
        .def_readonly("text", &deps::Span::text)
        .def("__repr__", [](const deps::Span& s) {
            return "Span(" + std::to_string(s.start) + ", " + std::to_string(s.end) + ", '" +
                   s.text + "')";
        });

    py::class_<deps::DepGraph>(m, "DepGraph")
        .def_property_readonly("sentence_id", &deps::DepGraph::sentence_id)
        .def_property_readonly("tokens", &deps::DepGraph::tokens)
        .def_property_readonly("edges", &deps::DepGraph::edges)
        .def("subtree_tokens", &deps::DepGraph::subtree_tokens)
        .def("subtree_yield", &deps::DepGraph::subtree_yield)
        .def("preposition_of", &deps::DepGraph::preposition_of);

    m.def("parse_corenlp_triples", &deps::parse_corenlp_triples, py::arg("text"),
          py::arg("sentence_id") = "1");
    m.def("write_corenlp_triples", &deps::write_corenlp_triples);
    m.def("parse_conllu", &deps::parse_conllu);
    m.def("write_conllu", &deps::write_conllu);

    py::enum_<heuristics::InterfaceRole>(m, "InterfaceRole")
        .value("Agent", heuristics::InterfaceRole::Agent)
        .value("Undergoer", heuristics::InterfaceRole::Undergoer)
        .value("Recipient", heuristics::InterfaceRole::Recipient)
        .value("Eventuality", heuristics::InterfaceRole::Eventuality)
        .value("Oblique", heuristics::InterfaceRole::Oblique);

    py::class_<heuristics::RoleTable>(m, "RoleTable")
        .def("lookup", &heuristics::RoleTable::lookup)
        .def("serialize", &heuristics::RoleTable::serialize);

    m.def("load_role_table",
          [](const std::optional<std::string>& config) { return heuristics::load_role_table(config); },
          py::arg("config_text") = py::none());
    m.def("default_role_table", &heuristics::default_role_table);

    py::class_<srl::FrameAnnotation>(m, "FrameAnnotation")
        .def(py::init([](std::string sid, int token, const std::set<rdf::Iri>& frames) {
                 return srl::FrameAnnotation{std::move(sid), token, frames};
             }),
             py::arg("sentence_id"), py::arg("predicate_token"),
             py::arg("frames") = std::set<rdf::Iri>{})
        .def_readonly("sentence_id", &srl::FrameAnnotation::sentence_id)
        .def_readonly("predicate_token", &srl::FrameAnnotation::predicate_token)
        .def_readonly("frames", &srl::FrameAnnotation::frames);

    py::enum_<srl::SenseProvenance>(m, "SenseProvenance")
        .value("Monosemous", srl::SenseProvenance::Monosemous)
        .value("FrameMatched", srl::SenseProvenance::FrameMatched)
        .value("MostFrequentFallback", srl::SenseProvenance::MostFrequentFallback)
        .value("RankedIntersection", srl::SenseProvenance::RankedIntersection);

    py::class_<srl::SenseSelection>(m, "SenseSelection")
        .def_readonly("sense", &srl::SenseSelection::sense)
        .def_readonly("provenance", &srl::SenseSelection::provenance);

    py::enum_<srl::RoleLabel::Kind>(m, "RoleLabelKind")
        .value("Specific", srl::RoleLabel::Kind::Specific)
        .value("InterfaceFromLexicon", srl::RoleLabel::Kind::InterfaceFromLexicon)
        .value("InterfaceFallback", srl::RoleLabel::Kind::InterfaceFallback);

    py::class_<srl::RoleLabel>(m, "RoleLabel")
        .def_readonly("kind", &srl::RoleLabel::kind)
        .def_readonly("name", &srl::RoleLabel::name)
        .def_readonly("iri", &srl::RoleLabel::iri);

    py::class_<srl::RoleAssignment>(m, "RoleAssignment")
        .def_readonly("sentence_id", &srl::RoleAssignment::sentence_id)
        .def_readonly("predicate_token", &srl::RoleAssignment::predicate_token)
        .def_readonly("predicate_lemma", &srl::RoleAssignment::predicate_lemma)
        .def_readonly("sense", &srl::RoleAssignment::sense)
        .def_readonly("label", &srl::RoleAssignment::label)
        .def_readonly("filler_head", &srl::RoleAssignment::filler_head)
        .def_readonly("filler", &srl::RoleAssignment::filler);

    m.def("select_verb_sense", &srl::select_verb_sense, py::arg("lemma"), py::arg("frames"),
          py::arg("store"));
    m.def("most_specific_frames", &srl::most_specific_frames, py::arg("frames"), py::arg("store"));
    m.def("label_sentence", &srl::label_sentence, py::arg("graph"), py::arg("annotations"),
          py::arg("store"), py::arg("table"));
    m.def("parse_frame_annotations", &srl::parse_frame_annotations);
    m.def("write_assignments_tsv", &srl::write_assignments_tsv);
    m.def("read_assignments_tsv", &srl::read_assignments_tsv);

    py::class_<kg::KnowledgeGraph>(m, "KnowledgeGraph")
        .def("__len__", [](const kg::KnowledgeGraph& g) { return g.triples.size(); })
        .def("serialize", [](const kg::KnowledgeGraph& g) { return kg::serialize(g); });

    m.def("build_graph", &kg::build_graph, py::arg("assignments"), py::arg("graph"),
          py::arg("base") = std::string(kg::kDefaultBase));

    py::class_<scorer::PredicateArgSet>(m, "PredicateArgSet")
        .def(py::init([](std::string sid, int token, std::string sense,
                         std::vector<std::pair<int, std::string>> args) {
                 return scorer::PredicateArgSet{std::move(sid), token, std::move(sense),
                                                std::move(args)};
             }),
             py::arg("sentence_id"), py::arg("predicate_token"), py::arg("sense"),
             py::arg("args") = std::vector<std::pair<int, std::string>>{})
        .def_readonly("sentence_id", &scorer::PredicateArgSet::sentence_id)
        .def_readonly("predicate_token", &scorer::PredicateArgSet::predicate_token)
        .def_readonly("sense", &scorer::PredicateArgSet::sense)
        .def_readonly("args", &scorer::PredicateArgSet::args);

    py::class_<scorer::ScoreReport>(m, "ScoreReport")
        .def_readonly("labeled_correct", &scorer::ScoreReport::labeled_correct)
        .def_readonly("unlabeled_correct", &scorer::ScoreReport::unlabeled_correct)
        .def_readonly("predicted_total", &scorer::ScoreReport::predicted_total)
        .def_readonly("gold_total", &scorer::ScoreReport::gold_total)
        .def_readonly("labeled_precision", &scorer::ScoreReport::labeled_precision)
        .def_readonly("labeled_recall", &scorer::ScoreReport::labeled_recall)
        .def_readonly("labeled_f1", &scorer::ScoreReport::labeled_f1)
        .def_readonly("unlabeled_precision", &scorer::ScoreReport::unlabeled_precision)
        .def_readonly("unlabeled_recall", &scorer::ScoreReport::unlabeled_recall)
        .def_readonly("unlabeled_f1", &scorer::ScoreReport::unlabeled_f1);

    py::class_<scorer::GoldRow>(m, "GoldRow")
        .def(py::init([](std::string sid, std::string verb, std::string vclass, std::string vn,
                         std::string pb, std::string filler) {
                 return scorer::GoldRow{std::move(sid), std::move(verb), std::move(vclass),
                                        std::move(vn), std::move(pb), std::move(filler)};
             }),
             py::arg("sentence_id"), py::arg("verb"), py::arg("verb_class"), py::arg("vn_role"),
             py::arg("pb_role"), py::arg("filler"))
        .def_readonly("sentence_id", &scorer::GoldRow::sentence_id)
        .def_readonly("verb", &scorer::GoldRow::verb)
        .def_readonly("verb_class", &scorer::GoldRow::verb_class)
        .def_readonly("vn_role", &scorer::GoldRow::vn_role)
        .def_readonly("pb_role", &scorer::GoldRow::pb_role)
        .def_readonly("filler", &scorer::GoldRow::filler);

    py::class_<scorer::SemLinkMap>(m, "SemLinkMap")
        .def(py::init<>())
        .def("insert", &scorer::SemLinkMap::insert)
        .def("lookup", &scorer::SemLinkMap::lookup)
        .def("__len__", &scorer::SemLinkMap::size);

    m.def("score", &scorer::score, py::arg("gold"), py::arg("predicted"));
    m.def("score_strict", &scorer::score_strict, py::arg("gold"), py::arg("predicted"));
    m.def("map_vn_to_pb", &scorer::map_vn_to_pb);
    m.def("read_semlink_tsv", &scorer::read_semlink_tsv);
    m.def("read_gold_tsv", &scorer::read_gold_tsv);
    m.def("write_gold_tsv", &scorer::write_gold_tsv);
    m.def("read_conll2009", &scorer::read_conll2009);
    m.def("write_conll2009", &scorer::write_conll2009);
    m.def("assignments_to_arg_sets", &scorer::assignments_to_arg_sets);
    m.def("format_report", &scorer::format_report);

    py::class_<ensemble::SystemOutput>(m, "SystemOutput")
        .def(py::init([](std::string name, std::vector<srl::RoleAssignment> assignments) {
                 return ensemble::SystemOutput{std::move(name), std::move(assignments)};
             }),
             py::arg("name"), py::arg("assignments"))
        .def_readonly("name", &ensemble::SystemOutput::name)
        .def_readonly("assignments", &ensemble::SystemOutput::assignments);

    m.def("merge", &ensemble::merge, py::arg("primary"), py::arg("secondary"));

    m.def("remote_fetch", &remote::remote_fetch, py::arg("endpoint_url"), py::arg("query"),
          py::arg("cache_dir"));
}
