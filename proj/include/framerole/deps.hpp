#pragma once

// Dependency graphs for single sentences, plus the two ingestion formats:
// CoNLL-U and the relation/head/dependent triple lines produced by CoreNLP.

#include <optional>
#include <string>
#include <vector>

#include "framerole/errors.hpp"

namespace framerole::deps {

struct Token {
    int index = 0;  // 1-based
    std::string form;
    std::string lemma;
    std::string upos;
    std::optional<int> char_start;
    std::optional<int> char_end;

    bool operator==(const Token&) const = default;
};

struct DepEdge {
    std::string relation;
    int head = 0;       // 0 = ROOT
    int dependent = 0;

    bool operator==(const DepEdge&) const = default;
};

// A filler span: token index range plus the joined surface text.
struct Span {
    int start = 0;
    int end = 0;
    std::string text;

    bool operator==(const Span&) const = default;
};

class DepGraph {
public:
    DepGraph(std::string sentence_id, std::vector<Token> tokens, std::vector<DepEdge> edges);

    const std::string& sentence_id() const { return sentence_id_; }
    const std::vector<Token>& tokens() const { return tokens_; }
    const std::vector<DepEdge>& edges() const { return edges_; }

    bool has_token(int index) const;
    const Token& token(int index) const;  // UnknownTokenError when absent

    // Dependents of head in ascending token order.
    std::vector<const DepEdge*> dependents_of(int head) const;

    // Relation by which token hangs off its head ("root" for the root token).
    const std::string& incoming_relation(int token) const;

    // Token indices of the subtree rooted at head, ascending, minus the
    // subtrees of head's own case-marker children (a filler never includes
    // the preposition attaching it to its governor).
    std::vector<int> subtree_tokens(int head) const;

    // Minimal contiguous cover of subtree_tokens(head), with joined text.
    Span subtree_yield(int head) const;

    // Lowercased lemma of dependent's `case` child, or the suffix of an
    // enhanced relation like nmod:into when no case child exists.
    std::optional<std::string> preposition_of(int head, int dependent) const;

    bool operator==(const DepGraph& other) const;

private:
    void validate() const;

    std::string sentence_id_;
    std::vector<Token> tokens_;
    std::vector<DepEdge> edges_;
};

// `rel, Form-Index, Form-Index` lines, one sentence per call. ROOT-0 marks
// the root. Trailing commas are tolerated.
DepGraph parse_corenlp_triples(const std::string& text, const std::string& sentence_id = "1");
std::string write_corenlp_triples(const DepGraph& graph);

// 10-column CoNLL-U; multiword ranges and empty nodes are skipped. Sentence
// ids come from `# sent_id = ...` comments, else the 1-based position.
std::vector<DepGraph> parse_conllu(const std::string& text);
std::string write_conllu(const std::vector<DepGraph>& graphs);

}  // namespace framerole::deps
