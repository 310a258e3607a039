#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ghwforge/budget.hpp"
#include "ghwforge/code.hpp"
#include "ghwforge/solver.hpp"

namespace ghwforge {

// Reed-Solomon code: rows evaluate 1, x, ..., x^{k-1} at the given distinct
// points. MDS with d_1 = n - k + 1.
LinearCode reed_solomon(const Field& field, const std::vector<int>& points,
                        int k);

// Solves the support-constrained problem over the RS code at the given
// points. The subset system must satisfy the MDS condition
// (ConditionViolatedError otherwise). Note the verdict depends on the
// chosen evaluation points, not only on (n, k, q).
SolveOutcome rs_support_constrained(const Field& field,
                                    const std::vector<int>& points, int k,
                                    const SubsetSystem& s,
                                    const Budget& budget = {});

// All q^m evaluation points of GF(q)^m in lexicographic order (first
// coordinate most significant, element code order per coordinate).
std::vector<std::vector<int>> rm_points(const Field& field, int m);

// First order Reed-Muller code RM(1,m): n = q^m, k = m + 1, rows evaluate
// 1, x_1, ..., x_m at rm_points order.
LinearCode reed_muller_1(const Field& field, int m, const Budget& budget = {});

// Zero set (0-based indexes into rm_points order) of the affine function
// a_0 + a_1 x_1 + ... + a_m x_m; coeffs has length m + 1 and the linear part
// must not vanish (DegenerateFunctionalError). Always q^{m-1} points.
std::vector<int> affine_zero_set(const Field& field, int m,
                                 const std::vector<int>& coeffs);

// Projective plane point, normalized so the first nonzero coordinate is 1.
struct ProjectivePoint {
    std::array<int, 3> xyz{0, 0, 0};
    bool operator==(const ProjectivePoint& o) const { return xyz == o.xyz; }
};

// Homogeneous cubic form plus a divisor line. Coefficients follow the
// exponent triples of degree 3 in descending lexicographic order:
// (3,0,0) (2,1,0) (2,0,1) (1,2,0) (1,1,1) (1,0,2) (0,3,0) (0,2,1) (0,1,2) (0,0,3).
struct PlaneCubic {
    std::array<int, 10> coeffs{};
    std::array<int, 3> line{0, 0, 1};
};

int cubic_eval(const Field& field, const PlaneCubic& cubic,
               const std::array<int, 3>& p);
int line_eval(const Field& field, const std::array<int, 3>& line,
              const std::array<int, 3>& p);

// All projective points of the cubic, normalized, in lexicographic order.
std::vector<ProjectivePoint> plane_cubic_points(const Field& field,
                                                const PlaneCubic& cubic,
                                                const Budget& budget = {});

// Curve points with the divisor-line points filtered out.
std::vector<ProjectivePoint> plane_cubic_points_off_line(
    const Field& field, const PlaneCubic& cubic, const Budget& budget = {});

// Dimension-3 evaluation code with rows x_0/l, x_1/l, x_2/l at the chosen
// curve points, l the divisor line. Needs n >= 4 points on the curve and
// off the line. When three chosen points are collinear, d_1 = n - 3 and the
// code is 2-MDS.
LinearCode cubic_line_code(const Field& field, const PlaneCubic& cubic,
                           const std::vector<ProjectivePoint>& points);

// The bundled [8,3]_4 elliptic-curve evaluation code (rows: all ones, the
// x coordinates, the y coordinates of the 8 rational points) together with
// the subset system S_1 = {4,8}, S_2 = {3,7}, S_3 = {5,6} (1-based), which
// passes the GHW-based constraints yet admits no support-constrained
// generator matrix.
std::pair<LinearCode, SubsetSystem> elliptic_f4_example();

// A point Q and k subsets of size k-1 whose vanishing subcodes all vanish
// at Q as well. Such a tuple forces infeasibility: the k rows would have to
// live in the hyperplane of codewords vanishing at Q.
struct CommonZeroObstruction {
    int pinch_point = 0;  // 0-based position of Q
    SubsetSystem sets;
};

// Searches codes with d_1 = n - k (AssumptionViolatedError otherwise) for
// common-zero obstructions, in deterministic (Q, subsets) order. Every
// returned tuple is re-checked to be Infeasible.
std::vector<CommonZeroObstruction> find_common_zero_obstructions(
    const LinearCode& c, int max_results, const Budget& budget = {});

}  // namespace ghwforge
