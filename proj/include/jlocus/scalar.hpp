#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jlocus {

enum class FieldKind : std::uint8_t { Rational, ModP };

// Identifies the coefficient field of a value: Q, or F_p for an odd prime p.
// Arithmetic between values with different tags is an error, never a coercion.
struct FieldTag {
    FieldKind kind{FieldKind::Rational};
    std::uint64_t p{0};  // modulus; 0 for rationals

    static FieldTag rational() { return FieldTag{FieldKind::Rational, 0}; }
    static FieldTag modp(std::uint64_t p);

    bool operator==(const FieldTag&) const = default;
    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

// Exact field element: an arbitrary-precision rational (always reduced, positive
// denominator) or a residue class in [0,p).
class Scalar {
  public:
    Scalar() : tag_(FieldTag::rational()) {}

    static Scalar rational(long num, long den = 1);
    static Scalar rational(const mpq_class& q);
    static Scalar modp(std::uint64_t v, std::uint64_t p);
    static Scalar zero(const FieldTag& tag);
    static Scalar one(const FieldTag& tag);
    // Embeds an integer into the field (reduces mod p for ModP tags).
    static Scalar integer(const mpz_class& z, const FieldTag& tag);

    const FieldTag& field() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;

    // Accessors; throw when the tag does not match.
    const mpq_class& rat() const;
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string str() const;

  private:
    FieldTag tag_;
    mpq_class q_;          // used for Rational
    std::uint64_t v_{0};   // used for ModP

    void check_same_field(const Scalar& rhs) const;
};

}  // namespace jlocus
