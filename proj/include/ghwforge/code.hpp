#pragma once

#include <cstdint>
#include <vector>

#include "ghwforge/budget.hpp"
#include "ghwforge/matrix.hpp"
#include "ghwforge/set_system.hpp"

namespace ghwforge {

// Linear [n,k]_q code given by a full-rank k x n generator matrix.
class LinearCode {
public:
    explicit LinearCode(Matrix generator);  // BadDimsError unless full rank, 1 <= k <= n

    const Field& field() const { return gen_.field(); }
    int length() const { return gen_.cols(); }      // n
    int dimension() const { return gen_.rows(); }   // k
    const Matrix& generator() const { return gen_; }

    // message (length k) -> codeword (length n)
    std::vector<int> encode(const std::vector<int>& message) const;

private:
    Matrix gen_;
};

// d_1 < d_2 < ... < d_k; d_r <= n - k + r (generalized Singleton bound).
struct WeightHierarchy {
    std::vector<int> d;

    int k() const { return static_cast<int>(d.size()); }
    int at(int r) const { return d.at(r - 1); }  // 1-based, matching d_r

    bool operator==(const WeightHierarchy& o) const { return d == o.d; }
    bool operator!=(const WeightHierarchy& o) const { return d != o.d; }
};

enum class GhwMethod {
    kSubcode,  // enumerate r-dimensional subcodes via canonical RREF bases
    kZeroSet,  // n - max{|Z| : k - rank(G_Z) >= r} over coordinate sets Z
    kAuto,     // whichever visits fewer states
};

// Number of r-dimensional subspaces of GF(q)^k, saturating at 2^63.
std::uint64_t gaussian_binomial(int k, int r, long q);

// r-th generalized Hamming weight: minimum support size over r-dimensional
// subcodes. Both methods agree on every instance; kAuto picks the cheaper.
int ghw(const LinearCode& c, int r, GhwMethod method = GhwMethod::kAuto,
        const Budget& budget = {});

int min_distance(const LinearCode& c, const Budget& budget = {});

WeightHierarchy weight_hierarchy(const LinearCode& c,
                                 GhwMethod method = GhwMethod::kAuto,
                                 const Budget& budget = {});

// d_r == n - k + r. Also asserts the upward closure (r-MDS implies s-MDS
// for s >= r); a violation would be a bug in the hierarchy computation.
bool is_r_mds(const LinearCode& c, int r, const Budget& budget = {});

// Messages v whose codeword v*G vanishes on every position of
// zero_positions; a subspace of GF(q)^k of dimension k - rank(G_Z).
Subspace vanishing_subcode(const LinearCode& c,
                           const std::vector<int>& zero_positions);

// S_i = zero coordinate positions of row i of g.
SubsetSystem row_zero_sets(const Matrix& g);

// Checks |intersection of S_i over I| <= n - d_|I| for the code's own
// generator rows, for every nonempty I. Holds for every generator matrix;
// a reported violation signals an internal inconsistency.
ConstraintReport check_generator_support_bounds(const LinearCode& c,
                                                const Budget& budget = {});

// True iff the minimum weight codewords span the whole code.
bool min_weight_span(const LinearCode& c, const Budget& budget = {});

}  // namespace ghwforge
