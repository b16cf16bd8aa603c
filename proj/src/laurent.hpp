#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace qtk {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact Laurent polynomial in one variable with dense coefficient storage.
/// The variable is conventionally called t; exponents are 64-bit signed and
/// checked for overflow. Zero is represented by an empty coefficient span.
template <class C>
class BasicLaurent {
public:
    BasicLaurent() = default;

    /// Monomial c * t^e.
    static BasicLaurent monomial(C coeff, std::int64_t exp);
    static BasicLaurent zero() { return BasicLaurent(); }
    static BasicLaurent one() { return monomial(C(1), 0); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_exp() const { return min_exp_; }
    std::int64_t max_exp() const { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::int64_t span() const { return is_zero() ? 0 : max_exp() - min_exp() + 1; }

    /// Coefficient of t^e (zero outside the stored span).
    C coeff(std::int64_t e) const;

    BasicLaurent& operator+=(const BasicLaurent& rhs);
    BasicLaurent& operator-=(const BasicLaurent& rhs);
    friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
    friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }
    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) { return mul(a, b); }
    BasicLaurent& operator*=(const BasicLaurent& rhs) { return *this = mul(*this, rhs); }
    BasicLaurent operator-() const;

    static BasicLaurent mul(const BasicLaurent& a, const BasicLaurent& b);

    /// Multiply by the monomial c * t^e in place.
    void mul_monomial(const C& c, std::int64_t e);

    /// Exact quotient; throws Errc::non_divisible when a remainder is left.
    static BasicLaurent div_exact(const BasicLaurent& a, const BasicLaurent& b);

    /// t -> t^{-1}; an involution.
    BasicLaurent reversed() const;

    /// Substitute t -> t^m (m > 0), spreading exponents.
    BasicLaurent stretch(std::int64_t m) const;

    bool operator==(const BasicLaurent& rhs) const {
        return min_exp_ == rhs.min_exp_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const BasicLaurent& rhs) const { return !(*this == rhs); }

    /// Value at t = -exp(i*pi/2k), the level-k root. Exponents are reduced
    /// mod 4k with exact coefficient accumulation before any rounding.
    std::complex<double> eval_root_of_unity(std::int64_t k) const;

    /// Value at an arbitrary complex point (small spans only; used for
    /// Alexander-polynomial evaluation and test oracles).
    std::complex<double> eval(std::complex<double> t) const;

    /// Sum of all coefficients (the value at t = 1, exact).
    C value_at_one() const;

    /// Sparse text form "c*t^e + ...", ascending exponent; "0" when zero.
    std::string to_string() const;
    static BasicLaurent parse(const std::string& text);

    const std::vector<C>& coeffs() const { return coeffs_; }

private:
    void normalize();

    std::int64_t min_exp_ = 0;
    std::vector<C> coeffs_; // coeffs_[i] is the coefficient of t^(min_exp_ + i)
};

using LaurentPoly = BasicLaurent<Int>;
using LaurentPolyQ = BasicLaurent<Rat>;

LaurentPolyQ to_rational(const LaurentPoly& p);

/// q^n - q^{-n} written in t (q = t^2), i.e. t^{2n} - t^{-2n}.
LaurentPoly quantum_integer(std::int64_t n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Powers of the level-k root t = -exp(i*pi/2k); table[j] = t^j, j in [0, 4k).
class RootTable {
public:
    explicit RootTable(std::int64_t k);
    std::int64_t level() const { return k_; }
    std::complex<double> power(std::int64_t e) const {
        std::int64_t m = e % (4 * k_);
        if (m < 0) m += 4 * k_;
        return table_[static_cast<std::size_t>(m)];
    }
    /// q^e with q = t^2.
    std::complex<double> q_power(std::int64_t e) const { return power(2 * e); }

private:
    std::int64_t k_;
    std::vector<std::complex<double>> table_;
};

} // namespace qtk
