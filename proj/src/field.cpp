#include "ghwforge/field.hpp"

#include <algorithm>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {
namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
// Leading zeros are allowed; degree() ignores them.

int poly_degree(const std::vector<int>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f mod g, g nonzero. Coefficients reduced mod p.
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g, long p) {
    const int dg = poly_degree(g);
    const long lead_inv = [&] {
        // inverse of g's leading coefficient mod p
        long a = g[dg] % p, r = 1;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
        }
        return r;
    }();
    for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
        const long c = f[df] * lead_inv % p;
        for (int i = 0; i <= dg; ++i) {
            long v = f[df - dg + i] - c * g[i] % p;
            f[df - dg + i] = static_cast<int>(((v % p) + p) % p);
        }
    }
    return f;
}

bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, long p) {
    return poly_degree(poly_rem(f, g, p)) < 0;
}

// Trial division by monic polynomials of degree 1..deg/2. Fine at desk
// scale since p^(deg/2) stays small under the cardinality cap.
bool is_irreducible(const std::vector<int>& f, long p) {
    const int deg = poly_degree(f);
    if (deg <= 1) return deg == 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            long t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m over GF(p),
// coefficient vectors compared constant term first.
std::vector<int> canonical_modulus(long p, int m) {
    std::vector<int> f(m + 1, 0);
    f[m] = 1;
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        long t = idx;
        for (int i = m - 1; i >= 0; --i) {  // f[0] is the most significant digit
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw InternalError("no irreducible polynomial found");  // unreachable
}

}  // namespace

struct Field::Impl {
    long p = 2;
    int m = 1;
    long q = 2;
    std::vector<int> modulus;

    bool has_tables = false;
    std::vector<int> log_table;   // size q, index 0 unused
    std::vector<int> exp_table;   // size q-1

    void check(int a) const {
        if (a < 0 || a >= q)
            throw FieldMismatchError("element code " + std::to_string(a) +
                                     " is not in GF(" + std::to_string(q) + ")");
    }

    int add(int a, int b) const {
        if (m == 1) return static_cast<int>((static_cast<long>(a) + b) % p);
        int out = 0;
        long place = 1;
        for (int i = 0; i < m; ++i) {
            const long da = (a / place) % p, db = (b / place) % p;
            out += static_cast<int>((da + db) % p * place);
            place *= p;
        }
        return out;
    }

    int neg(int a) const {
        if (m == 1) return static_cast<int>((p - a) % p);
        int out = 0;
        long place = 1;
        for (int i = 0; i < m; ++i) {
            const long da = (a / place) % p;
            out += static_cast<int>((p - da) % p * place);
            place *= p;
        }
        return out;
    }

    // Schoolbook product mod the modulus; reference path for the tables.
    int mul_slow(int a, int b) const {
        if (m == 1) return static_cast<int>(static_cast<long>(a) * b % p);
        std::vector<long> prod(2 * m - 1, 0);
        std::vector<int> da(m), db(m);
        long t = a;
        for (int i = 0; i < m; ++i) { da[i] = static_cast<int>(t % p); t /= p; }
        t = b;
        for (int i = 0; i < m; ++i) { db[i] = static_cast<int>(t % p); t /= p; }
        for (int i = 0; i < m; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + static_cast<long>(da[i]) * db[j]) % p;
        }
        // alpha^m = -(modulus[0] + ... + modulus[m-1] alpha^{m-1})
        for (int d = 2 * m - 2; d >= m; --d) {
            const long c = prod[d] % p;
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < m; ++i) {
                long v = prod[d - m + i] - c * modulus[i] % p;
                prod[d - m + i] = ((v % p) + p) % p;
            }
        }
        int out = 0;
        long place = 1;
        for (int i = 0; i < m; ++i) {
            out += static_cast<int>(prod[i] % p * place);
            place *= p;
        }
        return out;
    }

    int pow_slow(int a, long long e) const {
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            e >>= 1;
        }
        return r;
    }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables)
            return exp_table[(static_cast<long>(log_table[a]) + log_table[b]) % (q - 1)];
        return mul_slow(a, b);
    }

    int inv(int a) const {
        if (a == 0) throw DivisionByZeroError("inverse of 0");
        if (has_tables) return exp_table[(q - 1 - log_table[a]) % (q - 1)];
        return pow_slow(a, q - 2);
    }

    void build_tables() {
        // find a generator of the multiplicative group
        std::vector<long> prime_factors;
        long rest = q - 1;
        for (long d = 2; d * d <= rest; ++d) {
            if (rest % d == 0) {
                prime_factors.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        }
        if (rest > 1) prime_factors.push_back(rest);

        int gen = 1;
        for (int g = 2; g < q; ++g) {
            bool primitive = true;
            for (long f : prime_factors) {
                if (pow_slow(g, (q - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) { gen = g; break; }
        }
        if (q > 2 && gen == 1) throw InternalError("no generator found");

        exp_table.assign(q - 1, 1);
        log_table.assign(q, 0);
        int cur = 1;
        for (long i = 0; i < q - 1; ++i) {
            exp_table[i] = cur;
            log_table[cur] = static_cast<int>(i);
            cur = mul_slow(cur, gen);
        }
        if (cur != 1) throw InternalError("generator order mismatch");
        has_tables = true;
    }
};

Field Field::make(long p, int m) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw TooLargeError("extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxCardinality)
            throw TooLargeError("p^m exceeds the cardinality cap " +
                                std::to_string(kMaxCardinality));
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = q;
    impl->modulus = canonical_modulus(p, m);
    if (q <= (1 << 16)) impl->build_tables();
    return Field(std::move(impl));
}

long Field::characteristic() const { return impl_->p; }
int Field::degree() const { return impl_->m; }
long Field::size() const { return impl_->q; }
const std::vector<int>& Field::modulus() const { return impl_->modulus; }

int Field::add(int a, int b) const {
    impl_->check(a);
    impl_->check(b);
    return impl_->add(a, b);
}

int Field::sub(int a, int b) const {
    impl_->check(a);
    impl_->check(b);
    return impl_->add(a, impl_->neg(b));
}

int Field::neg(int a) const {
    impl_->check(a);
    return impl_->neg(a);
}

int Field::mul(int a, int b) const {
    impl_->check(a);
    impl_->check(b);
    return impl_->mul(a, b);
}

int Field::inv(int a) const {
    impl_->check(a);
    return impl_->inv(a);
}

int Field::pow(int a, long long e) const {
    impl_->check(a);
    if (e < 0) {
        a = impl_->inv(a);
        e = -e;
    }
    if (a == 0) return e == 0 ? 1 : 0;
    e %= impl_->q - 1;  // multiplicative group order
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = impl_->mul(r, base);
        base = impl_->mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> Field::elements() const {
    std::vector<int> out(impl_->q);
    for (long i = 0; i < impl_->q; ++i) out[i] = static_cast<int>(i);
    return out;
}

bool Field::operator==(const Field& other) const {
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m &&
           impl_->modulus == other.impl_->modulus;
}

}  // namespace ghwforge
