#pragma once

#include <array>
#include <stdexcept>

namespace jlocus {

// Exponent triple of a monomial in three variables.
struct Monomial3 {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }

    bool divides(const Monomial3& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }

    Monomial3 operator*(const Monomial3& m) const {
        return Monomial3{{e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]}};
    }

    Monomial3 operator/(const Monomial3& m) const {
        if (!m.divides(*this)) throw std::domain_error("Monomial3: non-exact quotient");
        return Monomial3{{e[0] - m.e[0], e[1] - m.e[1], e[2] - m.e[2]}};
    }

    bool operator==(const Monomial3&) const = default;
};

// Graded-lexicographic comparison with var0 > var1 > var2: total degree first,
// ties broken lexicographically on the exponent triple.
inline int grlex_cmp(const Monomial3& a, const Monomial3& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i < 3; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

struct GrlexDesc {
    bool operator()(const Monomial3& a, const Monomial3& b) const { return grlex_cmp(a, b) > 0; }
};

}  // namespace jlocus
