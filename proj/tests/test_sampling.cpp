#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ghwforge/families.hpp"
#include "ghwforge/rng.hpp"
#include "ghwforge/sampling.hpp"

using namespace ghwforge;

TEST_CASE("splitmix64 reference vectors") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("below is in range and deterministic") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t bound = 1 + (i % 17);
        const std::uint64_t x = a.below(bound);
        CHECK(x < bound);
        CHECK(x == b.below(bound));
    }
}

TEST_CASE("sample_subset yields sorted distinct elements of the right size") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const int size = static_cast<int>(rng.below(n + 1));
        const std::vector<int> s = sample_subset(rng, n, size);
        CHECK(static_cast<int>(s.size()) == size);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        for (int x : s) CHECK((0 <= x && x < n));
    }
}

TEST_CASE("falsify is reproducible for a fixed seed") {
    const auto [code, sets] = elliptic_f4_example();
    FalsifyConfig cfg;
    cfg.mode = GateMode::kGhw;
    cfg.seed = 5;
    cfg.trials = 10'000;
    const FalsifyResult a = falsify(code, cfg);
    const FalsifyResult b = falsify(code, cfg);
    CHECK(a.found == b.found);
    CHECK(a.trial == b.trial);
    CHECK(a.gated == b.gated);
    if (a.found) {
        CHECK(a.system->sets == b.system->sets);
        CHECK(a.outcome->witness == b.outcome->witness);
    }
}

TEST_CASE("falsify finds a GHW-gated counterexample on the elliptic code") {
    const auto [code, sets] = elliptic_f4_example();
    FalsifyConfig cfg;
    cfg.mode = GateMode::kGhw;
    cfg.seed = 5;
    cfg.trials = 10'000;
    const FalsifyResult r = falsify(code, cfg);
    REQUIRE(r.found);
    const auto h = weight_hierarchy(code);
    CHECK(check_ghw_constraints(*r.system, h.d, code.length()).passed());
    CHECK_FALSE(solve_support_constrained(code, *r.system).feasible());
    CHECK_FALSE(exhaustive_oracle(code, *r.system).feasible());
}

TEST_CASE("falsify finds cardinality+GHW counterexamples for RM codes") {
    FalsifyConfig cfg;
    cfg.mode = GateMode::kCardinalityGhw;
    cfg.seed = 11;
    cfg.trials = 10'000;

    const LinearCode rm23 = reed_muller_1(Field::make(2, 1), 3);
    const FalsifyResult a = falsify(rm23, cfg);
    REQUIRE(a.found);
    CHECK(check_cardinality(*a.system).passed());

    const LinearCode rm32 = reed_muller_1(Field::make(3, 1), 2);
    const FalsifyResult b = falsify(rm32, cfg);
    REQUIRE(b.found);
    CHECK(check_cardinality(*b.system).passed());
    const auto h = weight_hierarchy(rm32);
    CHECK(check_ghw_constraints(*b.system, h.d, 9).passed());
}

TEST_CASE("falsify exhausts trials on a verified-safe RS instance") {
    // GF(11), points {0,1,2,3,4,6}: every MDS-gated system is feasible
    // (exhaustively pre-verified), so the search must come up empty
    const Field f = Field::make(11, 1);
    const LinearCode rs = reed_solomon(f, {0, 1, 2, 3, 4, 6}, 3);
    FalsifyConfig cfg;
    cfg.mode = GateMode::kMds;
    cfg.seed = 3;
    cfg.trials = 2'000;
    const FalsifyResult r = falsify(rs, cfg);
    CHECK_FALSE(r.found);
    CHECK(r.gated > 0);
}

TEST_CASE("the parallel-line gap: gated yet infeasible affine system") {
    // documented counterexample to the unrestricted positive claim for
    // RM(1,2) over GF(3): zero sets of x, x+1, x+2
    const Field f = Field::make(3, 1);
    const LinearCode rm = reed_muller_1(f, 2);
    const SubsetSystem s(9, {affine_zero_set(f, 2, {0, 1, 0}),
                             affine_zero_set(f, 2, {2, 1, 0}),
                             affine_zero_set(f, 2, {1, 1, 0})});
    const auto h = weight_hierarchy(rm);
    CHECK(check_ghw_constraints(s, h.d, 9).passed());
    CHECK_FALSE(solve_support_constrained(rm, s).feasible());
    CHECK_FALSE(exhaustive_oracle(rm, s).feasible());
}

TEST_CASE("generic-position affine systems over GF(3)^2 are all feasible") {
    // the positive content behind the parallel-line gap: require every pair
    // of zero sets to actually meet (no parallel pair, no repeats); then the
    // functionals are independent and the solver always succeeds
    const Field f = Field::make(3, 1);
    const LinearCode rm = reed_muller_1(f, 2);
    const auto h = weight_hierarchy(rm);

    std::vector<std::vector<int>> zero_sets;
    for (int a0 = 0; a0 < 3; ++a0)
        for (int a1 = 0; a1 < 3; ++a1)
            for (int a2 = 0; a2 < 3; ++a2) {
                if (a1 == 0 && a2 == 0) continue;
                zero_sets.push_back(affine_zero_set(f, 2, {a0, a1, a2}));
            }

    auto meets = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(both));
        return !both.empty();
    };

    int scanned = 0;
    for (const auto& s1 : zero_sets)
        for (const auto& s2 : zero_sets)
            for (const auto& s3 : zero_sets) {
                if (s1 == s2 || s1 == s3 || s2 == s3) continue;
                if (!meets(s1, s2) || !meets(s1, s3) || !meets(s2, s3)) continue;
                const SubsetSystem s(9, {s1, s2, s3});
                if (!check_ghw_constraints(s, h.d, 9).passed()) continue;
                ++scanned;
                CHECK(solve_support_constrained(rm, s).feasible());
            }
    CHECK(scanned > 0);
}
