#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "laurent.hpp"

namespace qtk {

/// Laurent polynomial in the two commuting variables M and L with exact
/// rational coefficients. This is the target of the q -> 1 specialization of
/// quantum-torus operators and the home of the A-polynomial catalog.
class MLPoly {
public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (M exponent, L exponent)

    MLPoly() = default;

    static MLPoly monomial(Rat c, std::int64_t m_exp, std::int64_t l_exp);
    static MLPoly zero() { return MLPoly(); }
    static MLPoly one() { return monomial(Rat(1), 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }

    MLPoly& operator+=(const MLPoly& rhs);
    MLPoly& operator-=(const MLPoly& rhs);
    friend MLPoly operator+(MLPoly a, const MLPoly& b) { return a += b; }
    friend MLPoly operator-(MLPoly a, const MLPoly& b) { return a -= b; }
    friend MLPoly operator*(const MLPoly& a, const MLPoly& b);
    MLPoly operator-() const;

    std::int64_t min_l_exp() const;
    std::int64_t max_l_exp() const;

    /// Coefficient of L^l as a Laurent polynomial in M.
    LaurentPolyQ l_coeff(std::int64_t l_exp) const;

    std::complex<double> eval(std::complex<double> m, std::complex<double> l) const;

    /// Terms "c*M^a*L^b" joined by " + ", sorted by (L, M) exponent.
    std::string to_string() const;

    bool operator==(const MLPoly& rhs) const { return terms_ == rhs.terms_; }

private:
    void prune();

    std::map<Key, Rat> terms_;
};

/// Division in Q(M)[L^{+-1}]. When a leading M-coefficient of the divisor
/// does not divide exactly, the dividend is rescaled by it (pseudo-division)
/// and the accumulated power is reported in `denominator`, so that
///   numerator = quotient * divisor + remainder   with
///   denominator * dividend = numerator.
struct MLDivision {
    bool divisible = false;
    MLPoly quotient;
    MLPoly remainder;
    LaurentPolyQ denominator; // power of the divisor's leading M-coefficient
};

MLDivision divide_in_l(const MLPoly& dividend, const MLPoly& divisor);

} // namespace qtk
