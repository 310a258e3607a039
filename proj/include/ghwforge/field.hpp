#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace ghwforge {

/* Field implements exact arithmetic in GF(p^m).
 *
 * Construction is canonical: the modulus is the lexicographically smallest
 * monic irreducible polynomial of degree m over GF(p), where coefficient
 * vectors are compared constant term first. Two constructions of GF(p^m)
 * therefore always agree, and serialized element codes are portable.
 *
 * Elements are integer codes in [0, q): the code sum(c_i * p^i) stands for
 * the residue sum(c_i * alpha^i) where alpha is a root of the modulus.
 * Code 0 is the additive identity and code 1 the multiplicative identity.
 *
 * For q <= 2^16 multiplication uses log/antilog tables built from a
 * generator of the multiplicative group; above that, arithmetic falls back
 * to direct polynomial multiplication mod the modulus. The two paths are
 * observationally identical.
 */
class Field {
public:
    static constexpr long kMaxCardinality = 1 << 20;

    // Canonical GF(p^m). Throws NotPrimeError / TooLargeError.
    static Field make(long p, int m);

    long characteristic() const;               // p
    int degree() const;                        // m
    long size() const;                         // q = p^m
    const std::vector<int>& modulus() const;   // length m+1, constant term first

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;                      // DivisionByZeroError on 0
    int pow(int a, long long e) const;         // negative e inverts first

    // All q element codes in ascending order; starts 0, 1.
    std::vector<int> elements() const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace ghwforge
