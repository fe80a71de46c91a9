#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mwb {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

// Runs the acceptance criteria (all of them when `which` is empty).
std::vector<CriterionResult> run_acceptance(const std::set<int>& which, uint64_t seed);

inline constexpr uint64_t kDefaultSeed = 20250811;

}  // namespace mwb
