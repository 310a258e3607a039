#include "ghwforge/code.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {
namespace {

constexpr std::uint64_t kSaturated = std::uint64_t(1) << 63;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSaturated || b >= kSaturated || a > kSaturated / b) return kSaturated;
    return a * b;
}

// Visits every r-dimensional subspace of GF(q)^k exactly once via RREF
// basis matrices grouped by pivot profile. fn receives the r x k basis.
template <class Fn>
void for_each_subspace(const Field& f, int k, int r, BudgetMeter& meter, Fn&& fn) {
    const long q = f.size();
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    Matrix basis(f, r, k);
    for (;;) {
        // free slots: to the right of each pivot, excluding pivot columns
        std::vector<bool> is_pivot(k, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < r; ++i)
            for (int j = pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) free_slots.emplace_back(i, j);

        std::uint64_t combos = 1;
        for (size_t i = 0; i < free_slots.size(); ++i) combos = sat_mul(combos, q);

        for (int i = 0; i < r; ++i)
            for (int j = 0; j < k; ++j) basis.set(i, j, i < r && pivots[i] == j ? 1 : 0);

        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            meter.charge();
            std::uint64_t rest = idx;
            for (const auto& [i, j] : free_slots) {
                basis.set(i, j, static_cast<int>(rest % q));
                rest /= q;
            }
            fn(basis);
        }

        // next pivot combination
        int i = r - 1;
        while (i >= 0 && pivots[i] == k - r + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

int support_of_basis(const Matrix& basis, const Matrix& gen) {
    const Field& f = gen.field();
    const int n = gen.cols(), k = gen.rows();
    std::vector<char> hit(n, 0);
    for (int i = 0; i < basis.rows(); ++i) {
        for (int j = 0; j < n; ++j) {
            if (hit[j]) continue;
            int acc = 0;
            for (int t = 0; t < k; ++t) {
                const int c = basis.at(i, t);
                if (c != 0) acc = f.add(acc, f.mul(c, gen.at(t, j)));
            }
            if (acc != 0) hit[j] = 1;
        }
    }
    int count = 0;
    for (char h : hit) count += h;
    return count;
}

int ghw_subcode(const LinearCode& c, int r, const Budget& budget) {
    BudgetMeter meter(budget);
    meter.require(gaussian_binomial(c.dimension(), r, c.field().size()));
    int best = c.length() + 1;
    for_each_subspace(c.field(), c.dimension(), r, meter, [&](const Matrix& basis) {
        best = std::min(best, support_of_basis(basis, c.generator()));
    });
    return best;
}

int ghw_zeroset(const LinearCode& c, int r, const Budget& budget) {
    const int n = c.length(), k = c.dimension();
    if (n > 24) throw TooLargeError("zero-set method supports n <= 24");
    BudgetMeter meter(budget);
    // largest |Z| with k - rank(G_Z) >= r, scanning sizes downward
    for (int size = n; size >= 0; --size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            meter.charge();
            if (k - rank_of(c.generator().columns(comb)) >= r) return n - size;
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (size == 0) break;
    }
    throw InternalError("zero-set scan fell through");  // Z = empty always qualifies
}

}  // namespace

LinearCode::LinearCode(Matrix generator) : gen_(std::move(generator)) {
    const int k = gen_.rows(), n = gen_.cols();
    if (k < 1) throw BadDimsError("code dimension must be >= 1");
    if (k > n)
        throw BadDimsError("k = " + std::to_string(k) + " exceeds n = " +
                           std::to_string(n));
    if (rank_of(gen_) != k) throw BadDimsError("generator matrix is not full rank");
}

std::vector<int> LinearCode::encode(const std::vector<int>& message) const {
    return row_times(message, gen_);
}

std::uint64_t gaussian_binomial(int k, int r, long q) {
    if (r < 0 || r > k) return 0;
    // product over pivot profiles: sum over combinations of q^(free slots);
    // equivalently prod_{i=0}^{r-1} (q^{k-i}-1)/(q^{i+1}-1), computed in
    // floating point guard + exact check via the profile sum for small sizes.
    // The profile sum is exact and saturates cleanly.
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    if (r == 0) return 1;
    std::uint64_t total = 0;
    for (;;) {
        int free_count = 0;
        std::vector<bool> is_pivot(k, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int i = 0; i < r; ++i)
            for (int j = pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) ++free_count;
        std::uint64_t combos = 1;
        for (int i = 0; i < free_count; ++i) combos = sat_mul(combos, q);
        total = total >= kSaturated - combos ? kSaturated : total + combos;
        if (total >= kSaturated) return kSaturated;
        int i = r - 1;
        while (i >= 0 && pivots[i] == k - r + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return total;
}

int ghw(const LinearCode& c, int r, GhwMethod method, const Budget& budget) {
    if (r < 1 || r > c.dimension())
        throw BadRankError("r = " + std::to_string(r) + " outside [1," +
                           std::to_string(c.dimension()) + "]");
    if (method == GhwMethod::kAuto) {
        const std::uint64_t sub_states =
            gaussian_binomial(c.dimension(), r, c.field().size());
        const std::uint64_t zero_states =
            c.length() <= 62 ? (std::uint64_t(1) << c.length()) : kSaturated;
        method = zero_states < sub_states ? GhwMethod::kZeroSet : GhwMethod::kSubcode;
    }
    return method == GhwMethod::kSubcode ? ghw_subcode(c, r, budget)
                                         : ghw_zeroset(c, r, budget);
}

int min_distance(const LinearCode& c, const Budget& budget) {
    return ghw(c, 1, GhwMethod::kAuto, budget);
}

WeightHierarchy weight_hierarchy(const LinearCode& c, GhwMethod method,
                                 const Budget& budget) {
    WeightHierarchy h;
    const int n = c.length(), k = c.dimension();
    for (int r = 1; r <= k; ++r) h.d.push_back(ghw(c, r, method, budget));
    for (int r = 1; r <= k; ++r) {
        const bool increasing = r == 1 || h.d[r - 1] > h.d[r - 2];
        if (!increasing || h.d[r - 1] > n - k + r)
            throw InternalError("weight hierarchy violates its invariants");
    }
    return h;
}

bool is_r_mds(const LinearCode& c, int r, const Budget& budget) {
    if (r < 1 || r > c.dimension())
        throw BadRankError("r = " + std::to_string(r) + " outside [1," +
                           std::to_string(c.dimension()) + "]");
    const WeightHierarchy h = weight_hierarchy(c, GhwMethod::kAuto, budget);
    const int n = c.length(), k = c.dimension();
    bool seen = false;
    for (int s = 1; s <= k; ++s) {
        const bool mds_at_s = h.at(s) == n - k + s;
        if (seen && !mds_at_s)
            throw InternalError("r-MDS property is not upward closed");
        seen = seen || mds_at_s;
    }
    return h.at(r) == n - k + r;
}

Subspace vanishing_subcode(const LinearCode& c,
                           const std::vector<int>& zero_positions) {
    for (int j : zero_positions)
        if (j < 0 || j >= c.length())
            throw BadIndexError("position " + std::to_string(j) + " outside [0," +
                                std::to_string(c.length()) + ")");
    if (zero_positions.empty())
        return Subspace::full(c.field(), c.dimension());
    return kernel(c.generator().columns(zero_positions).transpose());
}

SubsetSystem row_zero_sets(const Matrix& g) {
    std::vector<std::vector<int>> sets(g.rows());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (g.at(i, j) == 0) sets[i].push_back(j);
    return SubsetSystem(g.cols(), std::move(sets));
}

ConstraintReport check_generator_support_bounds(const LinearCode& c,
                                                const Budget& budget) {
    const WeightHierarchy h = weight_hierarchy(c, GhwMethod::kAuto, budget);
    const SubsetSystem s = row_zero_sets(c.generator());
    return check_ghw_constraints(s, h.d, c.length(), budget);
}

bool min_weight_span(const LinearCode& c, const Budget& budget) {
    const Field& f = c.field();
    const long q = f.size();
    const int k = c.dimension(), n = c.length();
    BudgetMeter meter(budget);

    int best = n + 1;
    std::vector<std::vector<int>> best_words;
    // one message per projective class: first nonzero coordinate fixed to 1
    std::vector<int> msg(k, 0);
    for (int lead = k - 1; lead >= 0; --lead) {
        std::fill(msg.begin(), msg.end(), 0);
        msg[lead] = 1;
        std::uint64_t combos = 1;
        for (int i = lead + 1; i < k; ++i) combos = sat_mul(combos, q);
        meter.require(combos);
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            meter.charge();
            std::uint64_t rest = idx;
            for (int i = lead + 1; i < k; ++i) {
                msg[i] = static_cast<int>(rest % q);
                rest /= q;
            }
            const std::vector<int> word = c.encode(msg);
            int w = 0;
            for (int x : word) w += x != 0;
            if (w < best) {
                best = w;
                best_words.clear();
            }
            if (w == best) best_words.push_back(word);
        }
    }
    Matrix span(f, static_cast<int>(best_words.size()), n);
    for (size_t i = 0; i < best_words.size(); ++i)
        for (int j = 0; j < n; ++j) span.set(static_cast<int>(i), j, best_words[i][j]);
    return rank_of(span) == k;
}

}  // namespace ghwforge
