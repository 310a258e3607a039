#pragma once

#include <string>
#include <vector>

#include "ghwforge/budget.hpp"

namespace ghwforge {

// One entry of the built-in reproduction suite: a named check of a known
// result about the bundled code families, with the expected and computed
// values rendered as strings.
struct ReproCheck {
    std::string name;
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
    double millis = 0.0;
};

struct ReproductionReport {
    std::vector<ReproCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Recomputes every bundled claim from scratch: the [8,3]_4 elliptic code and
// its infeasible subset system, Reed-Solomon and Reed-Muller weight
// hierarchies, the plane-cubic feasibility dichotomy, and the known
// counterexamples showing the GHW gate alone does not imply feasibility.
ReproductionReport run_reproduction_suite(const Budget& budget = {});

}  // namespace ghwforge
