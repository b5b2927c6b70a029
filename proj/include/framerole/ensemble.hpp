#pragma once

// Union merge of two systems' role assignments, keyed by
// (sentence, predicate, filler_head). The primary system wins key conflicts,
// and its sense is kept for every predicate it detected.

#include <string>
#include <vector>

#include "framerole/srl.hpp"

namespace framerole::ensemble {

struct SystemOutput {
    std::string name;
    std::vector<srl::RoleAssignment> assignments;
};

SystemOutput merge(const SystemOutput& primary, const SystemOutput& secondary);

}  // namespace framerole::ensemble
