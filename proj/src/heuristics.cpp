#include "framerole/heuristics.hpp"

#include <sstream>

namespace framerole::heuristics {

const char* to_string(InterfaceRole role) {
    switch (role) {
        case InterfaceRole::Agent: return "Agent";
        case InterfaceRole::Undergoer: return "Undergoer";
        case InterfaceRole::Recipient: return "Recipient";
        case InterfaceRole::Eventuality: return "Eventuality";
        case InterfaceRole::Oblique: return "Oblique";
    }
    return "?";
}

std::optional<InterfaceRole> interface_role_from_string(const std::string& name) {
    if (name == "Agent") return InterfaceRole::Agent;
    if (name == "Undergoer") return InterfaceRole::Undergoer;
    if (name == "Recipient") return InterfaceRole::Recipient;
    if (name == "Eventuality") return InterfaceRole::Eventuality;
    if (name == "Oblique") return InterfaceRole::Oblique;
    return std::nullopt;
}

RoleTable::RoleTable(std::vector<RoleRule> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw ConfigError(0, "role table must not be empty");
}

std::optional<InterfaceRole> RoleTable::lookup(const std::string& relation) const {
    for (const RoleRule& rule : rules_) {
        if (relation == rule.pattern) return rule.role;
        // Subtyped variants: nmod:into matches the nmod rule.
        if (relation.size() > rule.pattern.size() &&
            relation.compare(0, rule.pattern.size(), rule.pattern) == 0 &&
            relation[rule.pattern.size()] == ':')
            return rule.role;
    }
    return std::nullopt;
}

std::string RoleTable::serialize() const {
    std::string out;
    for (const RoleRule& rule : rules_)
        out += rule.pattern + "\t" + to_string(rule.role) + "\n";
    return out;
}

RoleTable default_role_table() {
    return RoleTable({
        {"nsubj", InterfaceRole::Agent},
        {"agent", InterfaceRole::Agent},
        {"csubj", InterfaceRole::Agent},
        {"nsubjpass", InterfaceRole::Undergoer},
        {"dobj", InterfaceRole::Undergoer},
        {"iobj", InterfaceRole::Recipient},
        {"ccomp", InterfaceRole::Eventuality},
        {"xcomp", InterfaceRole::Eventuality},
        {"advcl", InterfaceRole::Eventuality},
        {"nmod", InterfaceRole::Oblique},
    });
}

RoleTable load_role_table(const std::optional<std::string>& config_text) {
    if (!config_text) return default_role_table();

    std::vector<RoleRule> rules;
    std::istringstream in(*config_text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ConfigError(lineno, "expected `relation<TAB>InterfaceRole`");
        std::string pattern = line.substr(first, tab - first);
        std::string role_name = line.substr(tab + 1);
        while (!role_name.empty() && (role_name.back() == ' ' || role_name.back() == '\t'))
            role_name.pop_back();
        auto role = interface_role_from_string(role_name);
        if (!role) throw ConfigError(lineno, "'" + role_name + "' is not an interface role");
        rules.push_back({std::move(pattern), *role});
    }
    if (rules.empty()) throw ConfigError(0, "role table config is empty");
    return RoleTable(std::move(rules));
}

}  // namespace framerole::heuristics
