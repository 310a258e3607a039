#include <doctest.h>

#include <utility>
#include <vector>

#include "ghwforge/errors.hpp"
#include "ghwforge/field.hpp"

using namespace ghwforge;

TEST_CASE("canonical moduli are the lex-smallest monic irreducibles") {
    CHECK(Field::make(2, 1).modulus() == std::vector<int>{0, 1});
    CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});  // w^2+w+1
    CHECK(Field::make(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(Field::make(2, 4).modulus() == std::vector<int>{1, 0, 0, 1, 1});
    CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});  // x^2+1
    CHECK(Field::make(3, 3).modulus() == std::vector<int>{1, 0, 2, 1});
    CHECK(Field::make(5, 2).modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("modulus construction is deterministic") {
    for (auto [p, m] : {std::pair<long, int>{2, 4}, {3, 2}, {7, 1}, {5, 2}}) {
        const Field a = Field::make(p, m), b = Field::make(p, m);
        CHECK(a.modulus() == b.modulus());
        CHECK(a == b);
    }
}

TEST_CASE("GF(4) arithmetic matches w^2 + w + 1 = 0") {
    const Field f = Field::make(2, 2);
    const int w = 2, w2 = 3;
    CHECK(f.mul(w, w) == w2);  // w * w = w + 1
    CHECK(f.add(w, w) == 0);   // characteristic 2
    CHECK(f.inv(w) == w2);     // w * w^2 = w^3 = 1
    CHECK(f.mul(w, w2) == 1);
    CHECK(f.pow(w, 3) == 1);
    CHECK(f.pow(w, -1) == w2);
}

TEST_CASE("element enumeration is ascending and starts 0, 1") {
    CHECK(Field::make(2, 1).elements() == std::vector<int>{0, 1});
    CHECK(Field::make(2, 2).elements() == std::vector<int>{0, 1, 2, 3});
    CHECK(Field::make(5, 1).elements().size() == 5);
    const auto e9 = Field::make(3, 2).elements();
    CHECK(e9.size() == 9);
    CHECK(e9.front() == 0);
    CHECK(e9[1] == 1);
}

TEST_CASE("field axioms hold exhaustively for every field with q <= 64") {
    std::vector<std::pair<long, int>> specs;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L,
                   43L, 47L, 53L, 59L, 61L}) {
        long q = p;
        int m = 1;
        while (q <= 64) {
            specs.emplace_back(p, m);
            q *= p;
            ++m;
        }
    }
    for (const auto& [p, m] : specs) {
        const Field f = Field::make(p, m);
        const long q = f.size();
        const auto el = f.elements();
        for (int a : el) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.inv(f.inv(a)) == a);
                CHECK(f.pow(a, q - 1) == 1);
            }
        }
        for (int a : el)
            for (int b : el) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
        // associativity and distributivity: full cube for small q, strided
        // sample above that
        const int stride = q <= 16 ? 1 : 5;
        for (int a = 0; a < q; a += stride)
            for (int b = 0; b < q; b += stride)
                for (int c = 0; c < q; c += stride) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
    }
}

TEST_CASE("nonzero elements form a cyclic group of order q - 1") {
    for (auto [p, m] : {std::pair<long, int>{2, 2}, {2, 3}, {3, 2}, {5, 1},
                        {7, 1}, {2, 4}, {3, 3}, {13, 1}}) {
        const Field f = Field::make(p, m);
        const long q = f.size();
        long max_order = 0;
        for (int a = 1; a < q; ++a) {
            long order = 1;
            int cur = a;
            while (cur != 1) {
                cur = f.mul(cur, a);
                ++order;
                REQUIRE(order <= q);
            }
            max_order = std::max(max_order, order);
            CHECK((q - 1) % order == 0);
        }
        CHECK(max_order == q - 1);
    }
}

namespace {

// independent polynomial model over GF(2): carryless mul, then reduce
int poly_mul_gf2(int a, int b, const std::vector<int>& modulus) {
    const int m = static_cast<int>(modulus.size()) - 1;
    unsigned long long prod = 0;
    for (int i = 0; i < m; ++i)
        if (a & (1 << i)) prod ^= static_cast<unsigned long long>(b) << i;
    unsigned long long modbits = 0;
    for (int i = 0; i <= m; ++i)
        if (modulus[i]) modbits |= 1ull << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if (prod & (1ull << d)) prod ^= modbits << (d - m);
    return static_cast<int>(prod);
}

}  // namespace

TEST_CASE("table-backed multiplication matches direct polynomial arithmetic") {
    const Field f = Field::make(2, 8);  // q = 256 uses log/antilog tables
    const auto modulus = f.modulus();
    for (int a = 0; a < 256; a += 3)
        for (int b = 0; b < 256; b += 7)
            CHECK(f.mul(a, b) == poly_mul_gf2(a, b, modulus));
}

TEST_CASE("fields beyond the table threshold behave the same") {
    const Field f = Field::make(2, 17);  // q = 131072, direct path
    const int w = 2;
    CHECK(f.mul(w, f.inv(w)) == 1);
    CHECK(f.pow(w, f.size() - 1) == 1);
    CHECK(f.mul(3, 5) == poly_mul_gf2(3, 5, f.modulus()));
    CHECK(f.mul(40001, 99999) == poly_mul_gf2(40001, 99999, f.modulus()));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1), NotPrimeError);
    CHECK_THROWS_AS(Field::make(1, 1), NotPrimeError);
    CHECK_THROWS_AS(Field::make(2, 25), TooLargeError);
    CHECK_THROWS_AS(Field::make(2, 0), TooLargeError);
}

TEST_CASE("operation errors") {
    const Field f = Field::make(2, 2);
    CHECK_THROWS_AS(f.inv(0), DivisionByZeroError);
    CHECK_THROWS_AS(f.mul(1, 4), FieldMismatchError);  // 4 is not a GF(4) code
    CHECK_THROWS_AS(f.add(-1, 0), FieldMismatchError);
}
