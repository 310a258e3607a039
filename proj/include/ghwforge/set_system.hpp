#pragma once

#include <vector>

#include "ghwforge/budget.hpp"

namespace ghwforge {

// Ordered list of subsets S_1..S_k of the coordinate set {0..n-1}.
// Coordinates are 0-based everywhere in the C++ API; files and rendered
// reports use 1-based coordinates.
struct SubsetSystem {
    int n = 0;
    std::vector<std::vector<int>> sets;  // each sorted ascending, no repeats

    SubsetSystem(int n, std::vector<std::vector<int>> sets);
    int k() const { return static_cast<int>(sets.size()); }
};

// Intersection of the S_i selected by index_set (0-based rows).
// Throws EmptyIndexSetError / BadIndexError.
std::vector<int> intersection_over(const SubsetSystem& s,
                                   const std::vector<int>& index_set);

struct ConstraintViolation {
    std::vector<int> index_set;  // offending rows I, 0-based, sorted
    int measured = 0;
    int bound = 0;
};

// Violations sorted by |I| then lexicographically; empty means pass.
struct ConstraintReport {
    std::vector<ConstraintViolation> violations;
    bool passed() const { return violations.empty(); }
};

// |I| + |intersection over I| <= k for every nonempty I.
ConstraintReport check_mds_condition(const SubsetSystem& s,
                                     const Budget& budget = {});

// |intersection over I| <= n - d[|I|] for every nonempty I, where d holds
// the weight hierarchy d_1..d_k of the target code.
ConstraintReport check_ghw_constraints(const SubsetSystem& s,
                                       const std::vector<int>& d, int n,
                                       const Budget& budget = {});

// |S_i| <= k - 1 for every i.
ConstraintReport check_cardinality(const SubsetSystem& s);

}  // namespace ghwforge
