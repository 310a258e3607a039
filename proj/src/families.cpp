#include "ghwforge/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {
namespace {

constexpr std::array<std::array<int, 3>, 10> kCubicExponents = {{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

}  // namespace

LinearCode reed_solomon(const Field& field, const std::vector<int>& points,
                        int k) {
    const int n = static_cast<int>(points.size());
    if (k < 1 || k > n)
        throw BadDimsError("need 1 <= k <= n, got k = " + std::to_string(k) +
                           ", n = " + std::to_string(n));
    if (n > field.size())
        throw BadDimsError("more evaluation points than field elements");
    std::set<int> seen(points.begin(), points.end());
    if (static_cast<int>(seen.size()) != n)
        throw DuplicatePointsError("evaluation points repeat");
    Matrix g(field, k, n);
    for (int j = 0; j < n; ++j) {
        int v = 1;
        for (int i = 0; i < k; ++i) {
            g.set(i, j, v);
            v = field.mul(v, points[j]);
        }
    }
    return LinearCode(std::move(g));
}

SolveOutcome rs_support_constrained(const Field& field,
                                    const std::vector<int>& points, int k,
                                    const SubsetSystem& s, const Budget& budget) {
    const ConstraintReport mds = check_mds_condition(s, budget);
    if (!mds.passed()) {
        const auto& v = mds.violations.front();
        std::string rows;
        for (int i : v.index_set) rows += std::to_string(i + 1) + " ";
        throw ConditionViolatedError("MDS condition fails at rows " + rows + "(" +
                                     std::to_string(v.measured) + " > " +
                                     std::to_string(v.bound) + ")");
    }
    return solve_support_constrained(reed_solomon(field, points, k), s, budget);
}

std::vector<std::vector<int>> rm_points(const Field& field, int m) {
    if (m < 1) throw BadDimsError("need m >= 1");
    const long q = field.size();
    long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q;
        if (n > Field::kMaxCardinality) throw TooLargeError("q^m too large");
    }
    std::vector<std::vector<int>> pts;
    pts.reserve(n);
    std::vector<int> x(m, 0);
    for (long idx = 0; idx < n; ++idx) {
        long rest = idx;
        for (int i = m - 1; i >= 0; --i) {  // x_1 is the most significant digit
            x[i] = static_cast<int>(rest % q);
            rest /= q;
        }
        pts.push_back(x);
    }
    return pts;
}

LinearCode reed_muller_1(const Field& field, int m, const Budget& budget) {
    const std::vector<std::vector<int>> pts = rm_points(field, m);
    const int n = static_cast<int>(pts.size());
    BudgetMeter meter(budget);
    meter.require(static_cast<std::uint64_t>(n) * (m + 1));
    Matrix g(field, m + 1, n);
    for (int j = 0; j < n; ++j) {
        g.set(0, j, 1);
        for (int i = 1; i <= m; ++i) g.set(i, j, pts[j][i - 1]);
    }
    return LinearCode(std::move(g));
}

std::vector<int> affine_zero_set(const Field& field, int m,
                                 const std::vector<int>& coeffs) {
    if (static_cast<int>(coeffs.size()) != m + 1)
        throw ShapeMismatchError("need m + 1 coefficients");
    bool linear_part = false;
    for (int i = 1; i <= m; ++i) linear_part = linear_part || coeffs[i] != 0;
    if (!linear_part)
        throw DegenerateFunctionalError("linear part vanishes identically");
    const std::vector<std::vector<int>> pts = rm_points(field, m);
    std::vector<int> zero;
    for (size_t j = 0; j < pts.size(); ++j) {
        int acc = coeffs[0];
        for (int i = 1; i <= m; ++i)
            acc = field.add(acc, field.mul(coeffs[i], pts[j][i - 1]));
        if (acc == 0) zero.push_back(static_cast<int>(j));
    }
    return zero;
}

int cubic_eval(const Field& field, const PlaneCubic& cubic,
               const std::array<int, 3>& p) {
    int acc = 0;
    for (size_t t = 0; t < kCubicExponents.size(); ++t) {
        if (cubic.coeffs[t] == 0) continue;
        int term = cubic.coeffs[t];
        for (int axis = 0; axis < 3; ++axis)
            for (int e = 0; e < kCubicExponents[t][axis]; ++e)
                term = field.mul(term, p[axis]);
        acc = field.add(acc, term);
    }
    return acc;
}

int line_eval(const Field& field, const std::array<int, 3>& line,
              const std::array<int, 3>& p) {
    int acc = 0;
    for (int axis = 0; axis < 3; ++axis)
        acc = field.add(acc, field.mul(line[axis], p[axis]));
    return acc;
}

std::vector<ProjectivePoint> plane_cubic_points(const Field& field,
                                                const PlaneCubic& cubic,
                                                const Budget& budget) {
    if (field.size() > 1024)
        throw TooLargeError("projective point enumeration supports q <= 1024");
    bool cubic_zero = true;
    for (int c : cubic.coeffs) cubic_zero = cubic_zero && c == 0;
    if (cubic_zero) throw BadDimsError("cubic form is identically zero");
    BudgetMeter meter(budget);
    const long q = field.size();
    std::vector<ProjectivePoint> out;
    // normalized representatives, generated in ascending lexicographic order
    auto consider = [&](int a, int b, int c) {
        meter.charge();
        const std::array<int, 3> p{a, b, c};
        if (cubic_eval(field, cubic, p) == 0) out.push_back(ProjectivePoint{p});
    };
    consider(0, 0, 1);
    for (long z = 0; z < q; ++z) consider(0, 1, static_cast<int>(z));
    for (long y = 0; y < q; ++y)
        for (long z = 0; z < q; ++z)
            consider(1, static_cast<int>(y), static_cast<int>(z));
    return out;
}

std::vector<ProjectivePoint> plane_cubic_points_off_line(const Field& field,
                                                         const PlaneCubic& cubic,
                                                         const Budget& budget) {
    bool line_zero = cubic.line[0] == 0 && cubic.line[1] == 0 && cubic.line[2] == 0;
    if (line_zero) throw BadDimsError("divisor line is identically zero");
    std::vector<ProjectivePoint> out;
    for (const ProjectivePoint& p : plane_cubic_points(field, cubic, budget))
        if (line_eval(field, cubic.line, p.xyz) != 0) out.push_back(p);
    return out;
}

LinearCode cubic_line_code(const Field& field, const PlaneCubic& cubic,
                           const std::vector<ProjectivePoint>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 4) throw BadDimsError("need at least 4 evaluation points");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (points[a] == points[b])
                throw DuplicatePointsError("evaluation points repeat");
    Matrix g(field, 3, n);
    for (int j = 0; j < n; ++j) {
        if (cubic_eval(field, cubic, points[j].xyz) != 0)
            throw PointOffCurveError("point " + std::to_string(j + 1) +
                                     " is not on the cubic");
        const int l = line_eval(field, cubic.line, points[j].xyz);
        if (l == 0)
            throw PointOnLineError("point " + std::to_string(j + 1) +
                                   " lies on the divisor line");
        const int linv = field.inv(l);
        for (int axis = 0; axis < 3; ++axis)
            g.set(axis, j, field.mul(points[j].xyz[axis], linv));
    }
    return LinearCode(std::move(g));
}

std::pair<LinearCode, SubsetSystem> elliptic_f4_example() {
    const Field f4 = Field::make(2, 2);
    // codes: 0, 1, 2 = w, 3 = w^2 with w^2 + w + 1 = 0
    const std::vector<std::vector<int>> rows = {
        {1, 1, 1, 1, 1, 1, 1, 1},
        {0, 1, 2, 2, 2, 3, 3, 3},
        {0, 0, 1, 2, 3, 1, 2, 3},
    };
    LinearCode code(Matrix::from_rows(f4, rows));
    SubsetSystem sets(8, {{3, 7}, {2, 6}, {4, 5}});
    return {std::move(code), std::move(sets)};
}

std::vector<CommonZeroObstruction> find_common_zero_obstructions(
    const LinearCode& c, int max_results, const Budget& budget) {
    const int n = c.length(), k = c.dimension();
    const int d1 = min_distance(c, budget);
    if (d1 != n - k)
        throw AssumptionViolatedError("needs d_1 = n - k, got d_1 = " +
                                      std::to_string(d1));
    if (max_results < 1) return {};
    BudgetMeter meter(budget);
    std::vector<CommonZeroObstruction> found;

    for (int q_pos = 0; q_pos < n && static_cast<int>(found.size()) < max_results;
         ++q_pos) {
        const Subspace at_q = vanishing_subcode(c, {q_pos});
        // subsets of size k-1 avoiding Q whose vanishing space also dies at Q
        std::vector<std::vector<int>> valid;
        std::vector<int> pool;
        for (int j = 0; j < n; ++j)
            if (j != q_pos) pool.push_back(j);
        const int psize = static_cast<int>(pool.size());
        if (k - 1 > psize) continue;
        std::vector<int> comb(k - 1);
        for (int i = 0; i < k - 1; ++i) comb[i] = i;
        for (;;) {
            meter.charge();
            std::vector<int> subset(k - 1);
            for (int i = 0; i < k - 1; ++i) subset[i] = pool[comb[i]];
            const Subspace v = vanishing_subcode(c, subset);
            if (v.dim() >= 1 && at_q.contains_subspace(v))
                valid.push_back(subset);
            int i = k - 2;
            while (i >= 0 && comb[i] == psize - (k - 1) + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (static_cast<int>(valid.size()) < k) continue;

        // every choice of k distinct valid subsets is an obstruction
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        const int vsize = static_cast<int>(valid.size());
        for (;;) {
            meter.charge();
            std::vector<std::vector<int>> sets(k);
            for (int i = 0; i < k; ++i) sets[i] = valid[pick[i]];
            CommonZeroObstruction obstruction{q_pos, SubsetSystem(n, sets)};
            if (!solve_support_constrained(c, obstruction.sets, budget).feasible()) {
                found.push_back(std::move(obstruction));
            } else {
                throw InternalError("common-zero tuple was unexpectedly feasible");
            }
            if (static_cast<int>(found.size()) >= max_results) break;
            int i = k - 1;
            while (i >= 0 && pick[i] == vsize - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return found;
}

}  // namespace ghwforge
