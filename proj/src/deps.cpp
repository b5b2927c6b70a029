#include "framerole/deps.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace framerole::deps {

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

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Base relation: text before the first subtype separator.
std::string base_relation(const std::string& rel) {
    auto cut = rel.find(':');
    return cut == std::string::npos ? rel : rel.substr(0, cut);
}

int parse_index(const std::string& s, std::size_t lineno) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(lineno, "bad token index '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError(lineno, "token index out of range: " + s);
    }
}

// `Form-Index` mention, e.g. conquered-3 or ROOT-0.
std::pair<std::string, int> parse_mention(const std::string& s, std::size_t lineno) {
    auto cut = s.find_last_of('-');
    if (cut == std::string::npos || cut + 1 >= s.size())
        throw ParseError(lineno, "mention '" + s + "' is not Form-Index");
    return {s.substr(0, cut), parse_index(s.substr(cut + 1), lineno)};
}

}  // namespace

DepGraph::DepGraph(std::string sentence_id, std::vector<Token> tokens, std::vector<DepEdge> edges)
    : sentence_id_(std::move(sentence_id)), tokens_(std::move(tokens)), edges_(std::move(edges)) {
    std::sort(tokens_.begin(), tokens_.end(),
              [](const Token& a, const Token& b) { return a.index < b.index; });
    validate();
}

void DepGraph::validate() const {
    std::set<int> indices;
    for (const Token& t : tokens_) {
        if (t.index < 1) throw TreeError("token index " + std::to_string(t.index) + " < 1");
        if (t.form.empty()) throw TreeError("empty form at token " + std::to_string(t.index));
        if (!indices.insert(t.index).second)
            throw TreeError("duplicate token index " + std::to_string(t.index));
    }

    std::map<int, int> head_of;
    int roots = 0;
    for (const DepEdge& e : edges_) {
        if (e.dependent == e.head) throw TreeError("self-loop at token " + std::to_string(e.head));
        if (!indices.count(e.dependent))
            throw TreeError("edge dependent " + std::to_string(e.dependent) + " is not a token");
        if (e.head != 0 && !indices.count(e.head))
            throw TreeError("edge head " + std::to_string(e.head) + " is not a token");
        if (!head_of.emplace(e.dependent, e.head).second)
            throw TreeError("token " + std::to_string(e.dependent) + " has two heads");
        if (e.head == 0) ++roots;
    }
    if (roots == 0) throw TreeError("missing root edge");
    if (roots > 1) throw TreeError("multiple root edges");

    // Every token must reach ROOT through its head chain: this gives both
    // connectivity and acyclicity.
    for (const Token& t : tokens_) {
        std::set<int> seen;
        int node = t.index;
        while (node != 0) {
            if (!seen.insert(node).second)
                throw TreeError("cycle through token " + std::to_string(node));
            auto it = head_of.find(node);
            if (it == head_of.end())
                throw TreeError("token " + std::to_string(node) + " has no head");
            node = it->second;
        }
    }
}

bool DepGraph::has_token(int index) const {
    return std::any_of(tokens_.begin(), tokens_.end(),
                       [&](const Token& t) { return t.index == index; });
}

const Token& DepGraph::token(int index) const {
    for (const Token& t : tokens_)
        if (t.index == index) return t;
    throw UnknownTokenError("no token with index " + std::to_string(index));
}

std::vector<const DepEdge*> DepGraph::dependents_of(int head) const {
    std::vector<const DepEdge*> out;
    for (const DepEdge& e : edges_)
        if (e.head == head) out.push_back(&e);
    std::sort(out.begin(), out.end(),
              [](const DepEdge* a, const DepEdge* b) { return a->dependent < b->dependent; });
    return out;
}

const std::string& DepGraph::incoming_relation(int token) const {
    for (const DepEdge& e : edges_)
        if (e.dependent == token) return e.relation;
    throw UnknownTokenError("no incoming edge for token " + std::to_string(token));
}

std::vector<int> DepGraph::subtree_tokens(int head) const {
    if (!has_token(head)) throw UnknownTokenError("no token with index " + std::to_string(head));
    std::vector<int> out;
    std::vector<int> queue{head};
    while (!queue.empty()) {
        int node = queue.back();
        queue.pop_back();
        out.push_back(node);
        for (const DepEdge* e : dependents_of(node)) {
            // The head's own case marker (and its subtree) is not part of the
            // filler; deeper case markers are.
            if (node == head && base_relation(e->relation) == "case") continue;
            queue.push_back(e->dependent);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Span DepGraph::subtree_yield(int head) const {
    std::vector<int> members = subtree_tokens(head);
    Span span;
    span.start = members.front();
    span.end = members.back();
    for (const Token& t : tokens_) {
        if (t.index < span.start || t.index > span.end) continue;
        if (!span.text.empty()) span.text += ' ';
        span.text += t.form;
    }
    return span;
}

std::optional<std::string> DepGraph::preposition_of(int head, int dependent) const {
    const DepEdge* connecting = nullptr;
    for (const DepEdge& e : edges_) {
        if (e.head == head && e.dependent == dependent) {
            connecting = &e;
            break;
        }
    }
    if (!connecting) return std::nullopt;
    for (const DepEdge* e : dependents_of(dependent)) {
        if (base_relation(e->relation) == "case")
            return lowercase(token(e->dependent).lemma);
    }
    // Collapsed/enhanced style: the preposition rides on the relation itself.
    auto cut = connecting->relation.find(':');
    if (cut != std::string::npos && cut + 1 < connecting->relation.size()) {
        std::string suffix = lowercase(connecting->relation.substr(cut + 1));
        if (suffix != "poss" && suffix != "tmod" && suffix != "npmod" && suffix != "agent")
            return suffix;
    }
    return std::nullopt;
}

bool DepGraph::operator==(const DepGraph& other) const {
    if (sentence_id_ != other.sentence_id_ || tokens_ != other.tokens_) return false;
    auto key = [](const DepEdge& e) { return std::tuple(e.dependent, e.head, e.relation); };
    std::vector<DepEdge> a = edges_, b = other.edges_;
    auto lt = [&](const DepEdge& x, const DepEdge& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

DepGraph parse_corenlp_triples(const std::string& text, const std::string& sentence_id) {
    std::map<int, std::string> forms;
    std::vector<DepEdge> edges;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty() || body[0] == '#') continue;
        while (!body.empty() && body.back() == ',') body.pop_back();  // trailing comma

        std::vector<std::string> parts = split(body, ',');
        if (parts.size() != 3)
            throw ParseError(lineno, "expected `rel, head, dependent`");
        std::string rel = strip(parts[0]);
        auto [head_form, head_idx] = parse_mention(strip(parts[1]), lineno);
        auto [dep_form, dep_idx] = parse_mention(strip(parts[2]), lineno);
        if (rel.empty()) throw ParseError(lineno, "empty relation");

        auto note_form = [&](const std::string& form, int idx) {
            if (idx == 0) return;  // ROOT-0 is not a token
            auto [it, inserted] = forms.emplace(idx, form);
            if (!inserted && it->second != form)
                throw ParseError(lineno, "token " + std::to_string(idx) + " seen as '" +
                                             it->second + "' and '" + form + "'");
        };
        note_form(head_form, head_idx);
        note_form(dep_form, dep_idx);
        edges.push_back({rel, head_idx, dep_idx});
    }

    std::vector<Token> tokens;
    for (const auto& [idx, form] : forms) {
        Token t;
        t.index = idx;
        t.form = form;
        t.lemma = lowercase(form);  // this format carries no morphology
        t.upos = "X";
        tokens.push_back(std::move(t));
    }
    return DepGraph(sentence_id, std::move(tokens), std::move(edges));
}

std::string write_corenlp_triples(const DepGraph& graph) {
    std::string out;
    auto mention = [&](int idx) {
        return idx == 0 ? std::string("ROOT-0") : graph.token(idx).form + "-" + std::to_string(idx);
    };
    for (const DepEdge& e : graph.edges()) {
        out += e.relation + ", " + mention(e.head) + ", " + mention(e.dependent) + "\n";
    }
    return out;
}

std::vector<DepGraph> parse_conllu(const std::string& text) {
    std::vector<DepGraph> graphs;

    std::vector<Token> tokens;
    std::vector<DepEdge> edges;
    std::optional<std::string> sent_id;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    auto flush = [&]() {
        if (tokens.empty()) return;
        std::string id = sent_id.value_or(std::to_string(graphs.size() + 1));
        graphs.emplace_back(id, std::move(tokens), std::move(edges));
        tokens.clear();
        edges.clear();
        sent_id.reset();
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            std::string body = strip(line.substr(1));
            if (body.rfind("sent_id", 0) == 0) {
                auto eq = body.find('=');
                if (eq != std::string::npos) sent_id = strip(body.substr(eq + 1));
            }
            continue;
        }

        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 10)
            throw ParseError(lineno, "expected 10 tab-separated columns, got " +
                                         std::to_string(cols.size()));
        const std::string& id = cols[0];
        // Multiword ranges (1-2) and empty nodes (2.1) carry no tree structure.
        if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;

        Token t;
        t.index = parse_index(id, lineno);
        t.form = cols[1];
        t.lemma = cols[2] == "_" ? lowercase(cols[1]) : cols[2];
        t.upos = cols[3] == "_" ? "X" : cols[3];
        if (t.form.empty()) throw ParseError(lineno, "empty FORM");

        int head = parse_index(cols[6], lineno);
        const std::string& deprel = cols[7];
        if (deprel.empty() || deprel == "_") throw ParseError(lineno, "missing DEPREL");

        tokens.push_back(std::move(t));
        edges.push_back({deprel, head, tokens.back().index});
    }
    flush();
    return graphs;
}

std::string write_conllu(const std::vector<DepGraph>& graphs) {
    std::string out;
    for (const DepGraph& g : graphs) {
        out += "# sent_id = " + g.sentence_id() + "\n";
        for (const Token& t : g.tokens()) {
            const DepEdge* incoming = nullptr;
            for (const DepEdge& e : g.edges())
                if (e.dependent == t.index) incoming = &e;
            out += std::to_string(t.index) + "\t" + t.form + "\t" + t.lemma + "\t" + t.upos +
                   "\t_\t_\t" + std::to_string(incoming->head) + "\t" + incoming->relation +
                   "\t_\t_\n";
        }
        out += "\n";
    }
    return out;
}

}  // namespace framerole::deps
