#include "jlocus/scalar.hpp"

namespace jlocus {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 17; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldTag FieldTag::modp(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("FieldTag::modp: modulus must be an odd prime, got " + std::to_string(p));
    if (p >= (1ull << 62)) throw std::invalid_argument("FieldTag::modp: modulus too large");
    return FieldTag{FieldKind::ModP, p};
}

std::string FieldTag::str() const {
    return kind == FieldKind::Rational ? "Q" : "F_" + std::to_string(p);
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("Scalar: division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("Scalar: element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar::rational: zero denominator");
    Scalar s;
    s.tag_ = FieldTag::rational();
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.tag_ = FieldTag::rational();
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::modp(std::uint64_t v, std::uint64_t p) {
    Scalar s;
    s.tag_ = FieldTag::modp(p);
    s.v_ = v % p;
    return s;
}

Scalar Scalar::zero(const FieldTag& tag) { return integer(0, tag); }

Scalar Scalar::one(const FieldTag& tag) { return integer(1, tag); }

Scalar Scalar::integer(const mpz_class& z, const FieldTag& tag) {
    Scalar s;
    s.tag_ = tag;
    if (tag.kind == FieldKind::Rational) {
        s.q_ = mpq_class(z);
    } else {
        mpz_class r = z % mpz_class(tag.p);
        if (r < 0) r += mpz_class(tag.p);
        s.v_ = r.get_ui();
    }
    return s;
}

bool Scalar::is_zero() const {
    return tag_.kind == FieldKind::Rational ? q_ == 0 : v_ == 0;
}

bool Scalar::is_one() const {
    return tag_.kind == FieldKind::Rational ? q_ == 1 : v_ == 1;
}

const mpq_class& Scalar::rat() const {
    if (tag_.kind != FieldKind::Rational) throw std::invalid_argument("Scalar::rat: not a rational value");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (tag_.kind != FieldKind::ModP) throw std::invalid_argument("Scalar::residue: not a mod-p value");
    return v_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (tag_ != rhs.tag_)
        throw std::invalid_argument("Scalar: field tag mismatch (" + tag_.str() + " vs " + rhs.tag_.str() + ")");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (tag_.kind == FieldKind::Rational) {
        s.q_ = -q_;
    } else {
        s.v_ = v_ == 0 ? 0 : tag_.p - v_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (tag_.kind == FieldKind::Rational) {
        q_ += rhs.q_;
    } else {
        v_ = (v_ + rhs.v_) % tag_.p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (tag_.kind == FieldKind::Rational) {
        q_ -= rhs.q_;
    } else {
        v_ = (v_ + tag_.p - rhs.v_) % tag_.p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (tag_.kind == FieldKind::Rational) {
        q_ *= rhs.q_;
    } else {
        v_ = mulmod_u64(v_, rhs.v_, tag_.p);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    if (tag_.kind == FieldKind::Rational) {
        if (rhs.q_ == 0) throw std::domain_error("Scalar: division by zero");
        q_ /= rhs.q_;
    } else {
        v_ = mulmod_u64(v_, invmod_u64(rhs.v_, tag_.p), tag_.p);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    Scalar s(*this);
    if (tag_.kind == FieldKind::Rational) {
        if (q_ == 0) throw std::domain_error("Scalar: inverse of zero");
        s.q_ = 1 / q_;
    } else {
        s.v_ = invmod_u64(v_, tag_.p);
    }
    return s;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar acc = Scalar::one(tag_);
    Scalar base(*this);
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (tag_ != rhs.tag_) return false;
    return tag_.kind == FieldKind::Rational ? q_ == rhs.q_ : v_ == rhs.v_;
}

std::string Scalar::str() const {
    return tag_.kind == FieldKind::Rational ? q_.get_str() : std::to_string(v_);
}

}  // namespace jlocus
