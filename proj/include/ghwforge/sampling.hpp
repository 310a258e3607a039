#pragma once

#include <cstdint>
#include <optional>

#include "ghwforge/budget.hpp"
#include "ghwforge/code.hpp"
#include "ghwforge/rng.hpp"
#include "ghwforge/solver.hpp"

namespace ghwforge {

// Sorted random subset of {0..n-1} of the given size (partial Fisher-Yates).
std::vector<int> sample_subset(SplitMix64& rng, int n, int size);

// k subsets, each with size drawn uniformly from {0..max_size} and then a
// uniform subset of that size. Not uniform over all subset systems: small
// sets are overweighted by the size-first draw.
SubsetSystem sample_subset_system(SplitMix64& rng, int n, int k, int max_size);

enum class GateMode { kGhw, kMds, kCardinalityGhw };

// d is the weight hierarchy of the target code (used by the GHW gates).
bool gate_passes(GateMode mode, const SubsetSystem& s, const std::vector<int>& d,
                 int n, const Budget& budget = {});

struct FalsifyConfig {
    GateMode mode = GateMode::kGhw;
    std::uint64_t seed = 0;
    std::uint64_t trials = 10'000;
};

struct FalsifyResult {
    bool found = false;
    std::uint64_t trial = 0;  // 0-based index of the hit
    std::uint64_t gated = 0;  // samples that passed the gate
    std::optional<SubsetSystem> system;
    std::optional<SolveOutcome> outcome;
};

// Samples subset systems, keeps those passing the configured gate, and
// returns the first one the solver proves Infeasible. Counterexamples are
// re-verified (gate, witness arithmetic, and the exhaustive oracle when the
// instance fits its budget) before being reported. Fully reproducible from
// (seed, trials, mode).
FalsifyResult falsify(const LinearCode& code, const FalsifyConfig& config,
                      const Budget& budget = {});

}  // namespace ghwforge
