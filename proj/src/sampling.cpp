#include "ghwforge/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "ghwforge/errors.hpp"

namespace ghwforge {

std::vector<int> sample_subset(SplitMix64& rng, int n, int size) {
    if (size < 0 || size > n) throw BadDimsError("subset size out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < size; ++j) {
        const int swap_with = j + static_cast<int>(rng.below(n - j));
        std::swap(pool[j], pool[swap_with]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

SubsetSystem sample_subset_system(SplitMix64& rng, int n, int k, int max_size) {
    std::vector<std::vector<int>> sets;
    sets.reserve(k);
    for (int i = 0; i < k; ++i) {
        const int size = static_cast<int>(rng.below(std::min(max_size, n) + 1));
        sets.push_back(sample_subset(rng, n, size));
    }
    return SubsetSystem(n, std::move(sets));
}

bool gate_passes(GateMode mode, const SubsetSystem& s, const std::vector<int>& d,
                 int n, const Budget& budget) {
    switch (mode) {
        case GateMode::kMds:
            return check_mds_condition(s, budget).passed();
        case GateMode::kGhw:
            return check_ghw_constraints(s, d, n, budget).passed();
        case GateMode::kCardinalityGhw:
            return check_cardinality(s).passed() &&
                   check_ghw_constraints(s, d, n, budget).passed();
    }
    throw InternalError("unknown gate mode");
}

FalsifyResult falsify(const LinearCode& code, const FalsifyConfig& config,
                      const Budget& budget) {
    if (config.trials < 1) throw BadDimsError("need at least one trial");
    const int n = code.length(), k = code.dimension();
    const WeightHierarchy h = weight_hierarchy(code, GhwMethod::kAuto, budget);

    // cap set sizes at the largest value the gate's singleton constraint can
    // accept; the full gate still decides acceptance
    int max_size = n;
    if (config.mode == GateMode::kMds || config.mode == GateMode::kCardinalityGhw)
        max_size = k - 1;
    else
        max_size = std::min(n, n - h.d.front());

    SplitMix64 rng(config.seed);
    FalsifyResult result;
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        const SubsetSystem s = sample_subset_system(rng, n, k, max_size);
        if (!gate_passes(config.mode, s, h.d, n, budget)) continue;
        ++result.gated;
        SolveOutcome outcome = solve_support_constrained(code, s, budget);
        if (outcome.feasible()) continue;

        // re-verify before reporting: witness arithmetic and, when the
        // instance is small enough, the independent oracle
        std::vector<const Subspace*> parts;
        std::vector<Subspace> spans;
        spans.reserve(outcome.witness.size());
        for (int i : outcome.witness)
            spans.push_back(vanishing_subcode(code, s.sets[i]));
        for (const Subspace& sp : spans) parts.push_back(&sp);
        const int dim = dim_of_sum(parts);
        if (dim != outcome.deficient_dim ||
            dim >= static_cast<int>(outcome.witness.size()))
            throw InternalError("witness failed re-verification");
        try {
            if (exhaustive_oracle(code, s, budget).feasible())
                throw InternalError("oracle disagrees with the solver");
        } catch (const TooLargeError&) {
            // oracle out of budget; witness arithmetic already re-checked
        }

        result.found = true;
        result.trial = trial;
        result.system = s;
        result.outcome = std::move(outcome);
        return result;
    }
    return result;
}

}  // namespace ghwforge
