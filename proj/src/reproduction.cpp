#include "ghwforge/reproduction.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "ghwforge/families.hpp"
#include "ghwforge/sampling.hpp"
#include "ghwforge/solver.hpp"

namespace ghwforge {
namespace {

std::string hierarchy_str(const std::vector<int>& d) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

std::vector<int> rm_formula(long q, int m) {
    std::vector<int> d;
    long qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    for (int r = 1; r <= m; ++r) {
        long qmr = 1;
        for (int i = 0; i < m - r; ++i) qmr *= q;
        d.push_back(static_cast<int>(qm - qmr));
    }
    d.push_back(static_cast<int>(qm));
    return d;
}

// The shared GF(5) plane cubic: x1^2 x2 = x0^3 - x0 x2^2 with the line at
// infinity as divisor. Off-line points, canonical order, 1-based:
//   1:(0,0,1) 2:(1,0,1) 3:(1,0,4) 4:(1,1,2) 5:(1,2,3) 6:(1,3,3) 7:(1,4,2)
PlaneCubic gf5_cubic() {
    PlaneCubic c;
    c.coeffs = {4, 0, 0, 0, 0, 1, 0, 1, 0, 0};
    c.line = {0, 0, 1};
    return c;
}

struct Runner {
    ReproductionReport report;
    const Budget& budget;

    void run(const std::string& name, const std::string& claim,
             const std::string& expected,
             const std::function<std::string()>& compute) {
        ReproCheck check;
        check.name = name;
        check.claim = claim;
        check.expected = expected;
        const auto start = std::chrono::steady_clock::now();
        try {
            check.computed = compute();
        } catch (const Error& e) {
            check.computed = std::string("error: ") + e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        check.millis =
            std::chrono::duration<double, std::milli>(stop - start).count();
        check.pass = check.computed == check.expected;
        report.checks.push_back(std::move(check));
    }
};

std::string verdict(const SolveOutcome& o) {
    return o.feasible() ? "feasible" : "infeasible";
}

}  // namespace

ReproductionReport run_reproduction_suite(const Budget& budget) {
    Runner r{{}, budget};
    const auto [ecode, esets] = elliptic_f4_example();

    r.run("gf4-modulus", "GF(4) is built as GF(2)[w]/(w^2+w+1)", "[1,1,1]", [&] {
        const auto m = Field::make(2, 2).modulus();
        std::ostringstream os;
        os << "[" << m[0] << "," << m[1] << "," << m[2] << "]";
        return os.str();
    });

    r.run("elliptic-f4-hierarchy-subcode",
          "the [8,3]_4 elliptic code has weight hierarchy (5,7,8), subcode method",
          "(5,7,8)", [&] {
              return hierarchy_str(
                  weight_hierarchy(ecode, GhwMethod::kSubcode, budget).d);
          });

    r.run("elliptic-f4-hierarchy-zeroset",
          "the [8,3]_4 elliptic code has weight hierarchy (5,7,8), zero-set method",
          "(5,7,8)", [&] {
              return hierarchy_str(
                  weight_hierarchy(ecode, GhwMethod::kZeroSet, budget).d);
          });

    r.run("elliptic-f4-min-distance", "its minimum distance is 5 (below Singleton)",
          "5", [&] { return std::to_string(min_distance(ecode, budget)); });

    r.run("elliptic-f4-2mds", "it is 2-MDS but not 1-MDS", "no/yes", [&] {
        return std::string(is_r_mds(ecode, 1, budget) ? "yes" : "no") + "/" +
               (is_r_mds(ecode, 2, budget) ? "yes" : "no");
    });

    r.run("elliptic-f4-support-gate",
          "the bundled subset system meets the GHW and cardinality constraints",
          "pass", [&] {
              const auto h = weight_hierarchy(ecode, GhwMethod::kAuto, budget);
              const bool ok =
                  check_ghw_constraints(esets, h.d, ecode.length(), budget).passed() &&
                  check_cardinality(esets).passed();
              return std::string(ok ? "pass" : "fail");
          });

    r.run("elliptic-f4-infeasible",
          "no generator matrix realizes the bundled zero pattern; witness rows "
          "{1,2,3} span only 2 dimensions",
          "infeasible [1,2,3] dim 2", [&] {
              const SolveOutcome o = solve_support_constrained(ecode, esets, budget);
              if (o.feasible()) return std::string("feasible");
              std::ostringstream os;
              os << "infeasible [";
              for (size_t i = 0; i < o.witness.size(); ++i)
                  os << (i ? "," : "") << o.witness[i] + 1;
              os << "] dim " << o.deficient_dim;
              return os.str();
          });

    r.run("elliptic-f4-oracle-agrees",
          "the exhaustive oracle confirms infeasibility", "infeasible",
          [&] { return verdict(exhaustive_oracle(ecode, esets, budget)); });

    r.run("elliptic-f4-obstruction-recovered",
          "the common-zero search recovers Q = P_1 with the bundled subsets",
          "found", [&] {
              auto wanted = esets.sets;
              std::sort(wanted.begin(), wanted.end());
              const auto obs = find_common_zero_obstructions(ecode, 8, budget);
              for (const auto& o : obs) {
                  auto got = o.sets.sets;
                  std::sort(got.begin(), got.end());
                  if (o.pinch_point == 0 && got == wanted)
                      return std::string("found");
              }
              return std::string("missing");
          });

    r.run("rs-hierarchy", "RS(6,3) over GF(7) has hierarchy (4,5,6)", "(4,5,6)",
          [&] {
              const Field f = Field::make(7, 1);
              const LinearCode c = reed_solomon(f, {0, 1, 2, 3, 4, 5}, 3);
              return hierarchy_str(weight_hierarchy(c, GhwMethod::kAuto, budget).d);
          });

    r.run("rs-min-weight-span", "RS(6,3) over GF(7) is spanned by weight-4 words",
          "yes", [&] {
              const Field f = Field::make(7, 1);
              const LinearCode c = reed_solomon(f, {0, 1, 2, 3, 4, 5}, 3);
              return std::string(min_weight_span(c, budget) ? "yes" : "no");
          });

    r.run("rs-mds-support-feasible",
          "an MDS-condition pattern is realized over the GF(8) RS code at "
          "points (0,1,w,w^2,w+1,w^2+1)",
          "feasible+verified", [&] {
              const Field f = Field::make(2, 3);
              const std::vector<int> pts = {0, 1, 2, 4, 3, 5};
              const SubsetSystem s(6, {{0, 1}, {2, 3}, {4, 5}});
              const SolveOutcome o = rs_support_constrained(f, pts, 3, s, budget);
              if (!o.feasible()) return std::string("infeasible");
              const bool ok = verify_solution(reed_solomon(f, pts, 3), s, *o.generator);
              return std::string(ok ? "feasible+verified" : "feasible+broken");
          });

    const struct { long p; int m; } rm_cases[] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& [p, m] : rm_cases) {
        std::ostringstream name;
        name << "rm-1-" << m << "-gf" << p << "-hierarchy";
        const std::vector<int> expect = rm_formula(p, m);
        r.run(name.str(),
              "RM(1,m) weight hierarchy follows d_r = q^m - q^(m-r), d_(m+1) = q^m",
              hierarchy_str(expect), [&, p = p, m = m] {
                  const LinearCode c = reed_muller_1(Field::make(p, 1), m, budget);
                  return hierarchy_str(
                      weight_hierarchy(c, GhwMethod::kAuto, budget).d);
              });
    }

    r.run("rm-1-2-gf4-hierarchy",
          "RM(1,2) over GF(4) has weight hierarchy (12,15,16)", "(12,15,16)", [&] {
              const LinearCode c = reed_muller_1(Field::make(2, 2), 2, budget);
              return hierarchy_str(weight_hierarchy(c, GhwMethod::kAuto, budget).d);
          });

    r.run("rm-gf2-affine-gate-exhaustive",
          "over GF(2)^2 every triple of affine zero sets passing the GHW "
          "constraints is feasible (exhaustive over 6^3 triples)",
          "216 scanned, all gated feasible", [&] {
              const Field f = Field::make(2, 1);
              const LinearCode c = reed_muller_1(f, 2, budget);
              const auto h = weight_hierarchy(c, GhwMethod::kAuto, budget);
              std::vector<std::vector<int>> zero_sets;
              for (int a0 = 0; a0 <= 1; ++a0)
                  for (int a1 = 0; a1 <= 1; ++a1)
                      for (int a2 = 0; a2 <= 1; ++a2)
                          if (a1 != 0 || a2 != 0)
                              zero_sets.push_back(affine_zero_set(f, 2, {a0, a1, a2}));
              int scanned = 0, bad = 0;
              for (const auto& s1 : zero_sets)
                  for (const auto& s2 : zero_sets)
                      for (const auto& s3 : zero_sets) {
                          ++scanned;
                          const SubsetSystem s(4, {s1, s2, s3});
                          if (!check_ghw_constraints(s, h.d, 4, budget).passed())
                              continue;
                          if (!solve_support_constrained(c, s, budget).feasible())
                              ++bad;
                      }
              std::ostringstream os;
              os << scanned << " scanned, "
                 << (bad == 0 ? "all gated feasible"
                              : std::to_string(bad) + " gated infeasible");
              return os.str();
          });

    r.run("rm-gf3-parallel-class-gap",
          "over GF(3)^2 the three parallel lines x=0,1,2 pass the GHW "
          "constraints yet admit no support-constrained generator matrix",
          "gated infeasible", [&] {
              const Field f = Field::make(3, 1);
              const LinearCode c = reed_muller_1(f, 2, budget);
              const auto h = weight_hierarchy(c, GhwMethod::kAuto, budget);
              SubsetSystem s(9, {affine_zero_set(f, 2, {0, 1, 0}),
                                 affine_zero_set(f, 2, {2, 1, 0}),
                                 affine_zero_set(f, 2, {1, 1, 0})});
              const bool gated = check_ghw_constraints(s, h.d, 9, budget).passed();
              const bool infeasible =
                  !solve_support_constrained(c, s, budget).feasible();
              return std::string(gated ? "gated " : "ungated ") +
                     (infeasible ? "infeasible" : "feasible");
          });

    r.run("rm-gf2-ghw-gate-insufficient",
          "for RM(1,3) over GF(2) a cardinality + GHW gated system of size-3 "
          "sets is infeasible (plane sections through a common point)",
          "gated infeasible", [&] {
              const Field f = Field::make(2, 1);
              const LinearCode c = reed_muller_1(f, 3, budget);
              const auto h = weight_hierarchy(c, GhwMethod::kAuto, budget);
              SubsetSystem s(8, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {7}});
              const bool gated = check_cardinality(s).passed() &&
                                 check_ghw_constraints(s, h.d, 8, budget).passed();
              const bool infeasible =
                  !solve_support_constrained(c, s, budget).feasible();
              return std::string(gated ? "gated " : "ungated ") +
                     (infeasible ? "infeasible" : "feasible");
          });

    r.run("rm-gf3-ghw-gate-insufficient",
          "for RM(1,2) over GF(3) a cardinality + GHW gated system of point "
          "pairs on three parallel lines is infeasible",
          "gated infeasible", [&] {
              const Field f = Field::make(3, 1);
              const LinearCode c = reed_muller_1(f, 2, budget);
              const auto h = weight_hierarchy(c, GhwMethod::kAuto, budget);
              SubsetSystem s(9, {{0, 1}, {3, 4}, {6, 7}});
              const bool gated = check_cardinality(s).passed() &&
                                 check_ghw_constraints(s, h.d, 9, budget).passed();
              const bool infeasible =
                  !solve_support_constrained(c, s, budget).feasible();
              return std::string(gated ? "gated " : "ungated ") +
                     (infeasible ? "infeasible" : "feasible");
          });

    r.run("cubic-gf5-hierarchy",
          "the 7-point GF(5) plane-cubic code has hierarchy (4,6,7) and is 2-MDS",
          "(4,6,7) 2-mds", [&] {
              const Field f = Field::make(5, 1);
              const auto pts = plane_cubic_points_off_line(f, gf5_cubic(), budget);
              const LinearCode c = cubic_line_code(f, gf5_cubic(), pts);
              const auto h = weight_hierarchy(c, GhwMethod::kAuto, budget);
              return hierarchy_str(h.d) +
                     (is_r_mds(c, 2, budget) ? " 2-mds" : " not-2-mds");
          });

    r.run("cubic-nonconcurrent-feasible",
          "three non-concurrent secant lines give a feasible zero pattern",
          "feasible", [&] {
              const Field f = Field::make(5, 1);
              const auto pts = plane_cubic_points_off_line(f, gf5_cubic(), budget);
              const LinearCode c = cubic_line_code(f, gf5_cubic(), pts);
              const SubsetSystem s(7, {{0, 1, 2}, {1, 5, 6}, {2, 4, 6}});
              return verdict(solve_support_constrained(c, s, budget));
          });

    r.run("cubic-concurrent-infeasible",
          "three secant lines through a common point give an infeasible pattern",
          "infeasible", [&] {
              const Field f = Field::make(5, 1);
              const auto pts = plane_cubic_points_off_line(f, gf5_cubic(), budget);
              const LinearCode c = cubic_line_code(f, gf5_cubic(), pts);
              const SubsetSystem s(7, {{0, 1, 2}, {1, 5, 6}, {1, 3, 4}});
              return verdict(solve_support_constrained(c, s, budget));
          });

    r.run("generator-zero-pattern-bound",
          "row zero sets of every bundled generator matrix satisfy the GHW "
          "support bound",
          "pass", [&] {
              std::vector<LinearCode> codes;
              codes.push_back(ecode);
              codes.push_back(reed_solomon(Field::make(7, 1), {0, 1, 2, 3, 4, 5}, 3));
              codes.push_back(reed_muller_1(Field::make(2, 1), 3, budget));
              const Field f5 = Field::make(5, 1);
              codes.push_back(cubic_line_code(
                  f5, gf5_cubic(), plane_cubic_points_off_line(f5, gf5_cubic(), budget)));
              for (const auto& c : codes)
                  if (!check_generator_support_bounds(c, budget).passed())
                      return std::string("fail");
              return std::string("pass");
          });

    return r.report;
}

}  // namespace ghwforge
