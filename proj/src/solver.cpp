#include "ghwforge/solver.hpp"

#include <algorithm>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {
namespace {

void check_span_list(const std::vector<Subspace>& spans) {
    if (spans.empty()) throw BadDimsError("empty subspace list");
    if (spans.size() > 20)
        throw TooLargeError("subspace lists are supported up to k = 20");
    for (const Subspace& s : spans)
        if (s.ambient() != spans.front().ambient() ||
            s.field() != spans.front().field())
            throw AmbientMismatchError("subspace ambients differ");
}

// dim of the sum of spans[i] for i in I, plus an optional extra space.
int sum_dim(const std::vector<Subspace>& spans, const std::vector<int>& I,
            const Subspace* extra) {
    std::vector<const Subspace*> parts;
    if (extra != nullptr) parts.push_back(extra);
    for (int i : I) parts.push_back(&spans[i]);
    return dim_of_sum(parts);
}

// Hall condition for the subsystem `rest`, counted relative to base:
// dim(base + sum over I) - dim(base) >= |I| for every nonempty I in rest.
bool residual_hall_ok(const std::vector<Subspace>& spans,
                      const std::vector<int>& rest, const Subspace& base,
                      BudgetMeter& meter) {
    const int r = static_cast<int>(rest.size());
    const int base_dim = base.dim();
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        meter.charge();
        std::vector<int> I;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) I.push_back(rest[i]);
        if (sum_dim(spans, I, &base) - base_dim < static_cast<int>(I.size()))
            return false;
    }
    return true;
}

bool extend_basis(const std::vector<Subspace>& spans, size_t at,
                  const Subspace& chosen_span,
                  std::vector<std::vector<int>>& picked, BudgetMeter& meter) {
    if (at == spans.size()) return true;
    std::vector<int> rest;
    for (size_t i = at + 1; i < spans.size(); ++i) rest.push_back(static_cast<int>(i));
    for (const std::vector<int>& cand : spans[at].projective_vectors()) {
        meter.charge();
        if (chosen_span.contains(cand)) continue;
        Subspace next = chosen_span.sum(
            Subspace::span_of(chosen_span.field(), chosen_span.ambient(), {cand}));
        if (!residual_hall_ok(spans, rest, next, meter)) continue;
        picked.push_back(cand);
        if (extend_basis(spans, at + 1, next, picked, meter)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

SolveOutcome SolveOutcome::make_feasible(Matrix g) {
    SolveOutcome o;
    o.status = Status::kFeasible;
    o.generator = std::move(g);
    return o;
}

SolveOutcome SolveOutcome::make_infeasible(std::vector<int> witness, int dim) {
    SolveOutcome o;
    o.status = Status::kInfeasible;
    o.witness = std::move(witness);
    o.deficient_dim = dim;
    return o;
}

std::optional<HallViolation> hall_feasibility(const std::vector<Subspace>& spans,
                                              const Budget& budget) {
    check_span_list(spans);
    BudgetMeter meter(budget);
    const int k = static_cast<int>(spans.size());
    // size-then-lex scan; the first violation is inclusion-minimal because
    // all of its proper subsets were visited earlier
    std::vector<int> comb;
    for (int size = 1; size <= k; ++size) {
        comb.resize(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            meter.charge();
            const int d = sum_dim(spans, comb, nullptr);
            if (d < size) return HallViolation{comb, d};
            int i = size - 1;
            while (i >= 0 && comb[i] == k - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> extract_basis(const std::vector<Subspace>& spans,
                                            const Budget& budget) {
    check_span_list(spans);
    BudgetMeter meter(budget);
    std::vector<std::vector<int>> picked;
    Subspace zero(spans.front().field(), spans.front().ambient());
    if (!extend_basis(spans, 0, zero, picked, meter))
        throw InternalError(
            "no independent representatives despite a passing Hall check");
    return picked;
}

SolveOutcome solve_support_constrained(const LinearCode& c,
                                       const SubsetSystem& s,
                                       const Budget& budget) {
    if (s.k() != c.dimension())
        throw ShapeMismatchError("subset count " + std::to_string(s.k()) +
                                 " differs from code dimension " +
                                 std::to_string(c.dimension()));
    if (s.n != c.length())
        throw ShapeMismatchError("subset ambient " + std::to_string(s.n) +
                                 " differs from code length " +
                                 std::to_string(c.length()));
    std::vector<Subspace> spans;
    spans.reserve(s.k());
    for (const auto& zero_set : s.sets)
        spans.push_back(vanishing_subcode(c, zero_set));

    if (auto violation = hall_feasibility(spans, budget))
        return SolveOutcome::make_infeasible(violation->index_set, violation->dim);

    const std::vector<std::vector<int>> messages = extract_basis(spans, budget);
    Matrix g(c.field(), c.dimension(), c.length());
    for (int i = 0; i < c.dimension(); ++i) {
        const std::vector<int> word = c.encode(messages[i]);
        for (int j = 0; j < c.length(); ++j) g.set(i, j, word[j]);
    }
    if (!verify_solution(c, s, g))
        throw InternalError("constructed matrix failed verification");
    return SolveOutcome::make_feasible(std::move(g));
}

bool verify_solution(const LinearCode& c, const SubsetSystem& s,
                     const Matrix& g) {
    if (g.rows() != c.dimension() || g.cols() != c.length()) return false;
    if (g.field() != c.field()) return false;
    if (s.k() != c.dimension() || s.n != c.length()) return false;
    if (rank_of(g) != c.dimension()) return false;
    const Subspace row_space = Subspace::from_rows(c.generator());
    for (int i = 0; i < g.rows(); ++i) {
        if (!row_space.contains(g.row(i))) return false;
        for (int j : s.sets[i])
            if (g.at(i, j) != 0) return false;
    }
    return true;
}

SolveOutcome exhaustive_oracle(const LinearCode& c, const SubsetSystem& s,
                               const Budget& budget) {
    if (s.k() != c.dimension() || s.n != c.length())
        throw ShapeMismatchError("subset system does not match the code");
    const int k = c.dimension();
    BudgetMeter meter(budget);

    std::vector<std::vector<std::vector<int>>> reps(k);
    std::vector<Subspace> spans;
    std::uint64_t product = 1;
    for (int i = 0; i < k; ++i) {
        spans.push_back(vanishing_subcode(c, s.sets[i]));
        reps[i] = spans.back().projective_vectors();
        product *= std::max<std::uint64_t>(reps[i].size(), 1);
        if (product > 1'000'000)
            throw TooLargeError("oracle search space exceeds 10^6 tuples");
    }

    const Field& f = c.field();
    // brute-force search restricted to the rows in I; true iff some tuple of
    // representatives indexed by I is linearly independent
    auto independent_tuple_exists = [&](const std::vector<int>& I) {
        std::vector<size_t> idx(I.size(), 0);
        for (;;) {
            meter.charge();
            Matrix m(f, static_cast<int>(I.size()), k);
            for (size_t t = 0; t < I.size(); ++t)
                for (int j = 0; j < k; ++j)
                    m.set(static_cast<int>(t), j, reps[I[t]][idx[t]][j]);
            if (rank_of(m) == static_cast<int>(I.size())) return true;
            size_t pos = 0;
            while (pos < I.size()) {
                if (++idx[pos] < reps[I[pos]].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == I.size()) return false;
        }
    };

    bool any_empty = false;
    for (int i = 0; i < k; ++i) any_empty = any_empty || reps[i].empty();

    std::vector<int> full(k);
    for (int i = 0; i < k; ++i) full[i] = i;

    if (!any_empty && independent_tuple_exists(full)) {
        // rebuild the first independent tuple in the same order
        std::vector<size_t> idx(k, 0);
        for (;;) {
            Matrix m(f, k, k);
            for (int t = 0; t < k; ++t)
                for (int j = 0; j < k; ++j) m.set(t, j, reps[t][idx[t]][j]);
            if (rank_of(m) == k) {
                Matrix g(f, k, c.length());
                for (int i = 0; i < k; ++i) {
                    const std::vector<int> word = c.encode(m.row(i));
                    for (int j = 0; j < c.length(); ++j) g.set(i, j, word[j]);
                }
                return SolveOutcome::make_feasible(std::move(g));
            }
            size_t pos = 0;
            while (pos < static_cast<size_t>(k)) {
                if (++idx[pos] < reps[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == static_cast<size_t>(k))
                throw InternalError("oracle lost its feasible tuple");
        }
    }

    // infeasible: report the first index set (size then lex) that admits no
    // independent tuple; its deficiency is the dimension of the subspace sum
    std::vector<int> comb;
    for (int size = 1; size <= k; ++size) {
        comb.resize(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            bool empty_member = false;
            for (int i : comb) empty_member = empty_member || reps[i].empty();
            if (empty_member ? true : !independent_tuple_exists(comb)) {
                std::vector<const Subspace*> parts;
                for (int i : comb) parts.push_back(&spans[i]);
                return SolveOutcome::make_infeasible(comb, dim_of_sum(parts));
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == k - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw InternalError("oracle found neither a tuple nor a witness");
}

}  // namespace ghwforge
