#pragma once

#include <optional>
#include <vector>

#include "ghwforge/budget.hpp"
#include "ghwforge/code.hpp"

namespace ghwforge {

// Result of a support-constrained generator matrix search. Feasible carries
// a k x n generator matrix of the code whose row i vanishes on S_i.
// Infeasible carries an inclusion-minimal witness I with
// dim(sum of V_i over I) = deficient_dim < |I|, V_i the vanishing subcode.
struct SolveOutcome {
    enum class Status { kFeasible, kInfeasible };

    Status status = Status::kInfeasible;
    std::optional<Matrix> generator;
    std::vector<int> witness;  // 0-based row indices, sorted
    int deficient_dim = -1;

    bool feasible() const { return status == Status::kFeasible; }

    static SolveOutcome make_feasible(Matrix g);
    static SolveOutcome make_infeasible(std::vector<int> witness, int dim);
};

struct HallViolation {
    std::vector<int> index_set;  // inclusion-minimal, sorted
    int dim = 0;                 // dim of the sum, < |index_set|
};

// Hall/Rado condition: independent representatives c_i in V_i exist iff
// dim(sum of V_i over I) >= |I| for every nonempty I. Returns the first
// violating I in (size, lex) order, which is inclusion-minimal, or nullopt.
std::optional<HallViolation> hall_feasibility(
    const std::vector<Subspace>& spans, const Budget& budget = {});

// Picks linearly independent representatives c_i in V_i. Requires the Hall
// condition to hold. Deterministic: candidates are tried in lexicographic
// order of their code sequences, and a partial choice is pruned unless the
// residual system still satisfies the Hall condition modulo the chosen span.
std::vector<std::vector<int>> extract_basis(const std::vector<Subspace>& spans,
                                            const Budget& budget = {});

// Decides existence of a generator matrix of c whose row i vanishes on
// s.sets[i], and constructs one when feasible.
SolveOutcome solve_support_constrained(const LinearCode& c,
                                       const SubsetSystem& s,
                                       const Budget& budget = {});

// True iff g has rank k, every row lies in the code, and row i vanishes on
// every position of s.sets[i] (containment, not equality).
bool verify_solution(const LinearCode& c, const SubsetSystem& s,
                     const Matrix& g);

// Independent ground truth: brute-force search over all tuples of projective
// representatives of the vanishing subcodes. Requires the product of
// projective point counts to stay within 10^6.
SolveOutcome exhaustive_oracle(const LinearCode& c, const SubsetSystem& s,
                               const Budget& budget = {});

}  // namespace ghwforge
