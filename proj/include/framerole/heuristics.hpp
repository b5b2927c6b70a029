#pragma once

// Relation-label -> interface-role table. The table is data: the built-in
// default covers the core UD/Stanford argument relations and can be replaced
// wholesale from a two-column config file.

#include <optional>
#include <string>
#include <vector>

#include "framerole/errors.hpp"

namespace framerole::heuristics {

enum class InterfaceRole { Agent, Undergoer, Recipient, Eventuality, Oblique };

const char* to_string(InterfaceRole role);
std::optional<InterfaceRole> interface_role_from_string(const std::string& name);

struct RoleRule {
    std::string pattern;  // matches relation exactly, or any `pattern:subtype`
    InterfaceRole role;

    bool operator==(const RoleRule&) const = default;
};

class RoleTable {
public:
    explicit RoleTable(std::vector<RoleRule> rules);

    // First matching rule wins; nullopt for relations that never denote
    // arguments (det, case, punct, mark, ...).
    std::optional<InterfaceRole> lookup(const std::string& relation) const;

    const std::vector<RoleRule>& rules() const { return rules_; }
    std::string serialize() const;

    bool operator==(const RoleTable&) const = default;

private:
    std::vector<RoleRule> rules_;
};

// Lines of `relation<TAB>InterfaceRole`; # comments and blank lines allowed.
// Without config the built-in default table is returned.
RoleTable load_role_table(const std::optional<std::string>& config_text);
RoleTable default_role_table();

}  // namespace framerole::heuristics
