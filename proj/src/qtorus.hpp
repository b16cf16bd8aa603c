#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "jones.hpp"
#include "laurent.hpp"
#include "mlpoly.hpp"

namespace qtk {

/// Element of the quantum torus algebra: a finite sum of c(q) M^a L^b with
/// Laurent coefficients in q, kept in normal order (M before L). Composition
/// re-normalizes via L M = q M L.
class QTorusOp {
public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (M exponent, L exponent)

    QTorusOp() = default;

    /// c(q) * M^m L^l with c a Laurent polynomial in q.
    static QTorusOp term(LaurentPoly c_of_q, std::int64_t m_exp, std::int64_t l_exp);
    static QTorusOp identity() { return term(LaurentPoly::one(), 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, LaurentPoly>& terms() const { return terms_; }

    QTorusOp& operator+=(const QTorusOp& rhs);
    QTorusOp& operator-=(const QTorusOp& rhs);
    friend QTorusOp operator+(QTorusOp a, const QTorusOp& b) { return a += b; }
    friend QTorusOp operator-(QTorusOp a, const QTorusOp& b) { return a -= b; }
    /// Composition with the L M = q M L normal ordering pushed into q-powers.
    friend QTorusOp operator*(const QTorusOp& a, const QTorusOp& b);
    QTorusOp operator-() const;

    bool operator==(const QTorusOp& rhs) const { return terms_ == rhs.terms_; }

private:
    void prune();

    std::map<Key, LaurentPoly> terms_; // coefficients as Laurent polynomials in q
};

/// Sequence n -> polynomial in t, memoized; the carrier of the M, L action:
/// (M f)_n = q^n f_n and (L f)_n = f_{n+1} with q = t^2.
class PolySequence {
public:
    explicit PolySequence(std::function<LaurentPoly(std::int64_t)> fn) : fn_(std::move(fn)) {}

    PolySequence(PolySequence&& other) noexcept
        : fn_(std::move(other.fn_)), cache_(std::move(other.cache_)) {}
    PolySequence(const PolySequence&) = delete;
    PolySequence& operator=(const PolySequence&) = delete;

    LaurentPoly at(std::int64_t n) const;

    /// Spot-check of periodicity at level roots: f_{n+2k} and f_n agree at
    /// t = -e^{i pi/2k}. Returns the absolute deviation.
    double periodicity_defect(std::int64_t n, std::int64_t k) const;

private:
    std::function<LaurentPoly(std::int64_t)> fn_;
    mutable std::mutex mutex_;
    mutable std::map<std::int64_t, LaurentPoly> cache_;
};

/// Colored Jones sequence of a catalog knot extended to all of Z by
/// J_0 = 0 and J_{-n} = -J_n.
PolySequence jones_sequence(const KnotSpec& knot);

/// (op f)_n as an exact polynomial in t.
LaurentPoly apply_at(const QTorusOp& op, const PolySequence& f, std::int64_t n);

/// Laurent polynomial in the commuting triple (q, M, x), the parameter space
/// of the Habiro bracket machinery.
class QMXPoly {
public:
    using Key = std::array<std::int64_t, 3>; // exponents of (q, M, x)

    QMXPoly() = default;
    static QMXPoly monomial(Int c, std::int64_t q_exp, std::int64_t m_exp, std::int64_t x_exp);
    static QMXPoly zero() { return QMXPoly(); }
    static QMXPoly one() { return monomial(1, 0, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    QMXPoly& operator+=(const QMXPoly& rhs);
    QMXPoly& operator-=(const QMXPoly& rhs);
    friend QMXPoly operator+(QMXPoly a, const QMXPoly& b) { return a += b; }
    friend QMXPoly operator-(QMXPoly a, const QMXPoly& b) { return a -= b; }
    friend QMXPoly operator*(const QMXPoly& a, const QMXPoly& b);
    QMXPoly operator-() const;

    /// x -> q^2 x.
    QMXPoly shift_x_by_q2() const;

    /// M -> q^s M.
    QMXPoly shift_m_by_q(std::int64_t s) const;

    /// Substitute M = q^n, x = q^{2m}; the result is written in t via q = t^2.
    LaurentPoly eval_qn_q2m(std::int64_t n, std::int64_t m) const;

    /// Substitute M = q^n, x = 1 (the inhomogeneous R-term of the bracket
    /// identities), written in t.
    LaurentPoly eval_qn_x1(std::int64_t n) const;

private:
    void prune();

    std::map<Key, Int> terms_;
};

/// Habiro bracket <P>_n = sum_m ({n+m}!/({1}{n-m-1}!)) P(q, q^n, q^{2m}),
/// truncated at m = n-1 where the factor {0} = 0 kills the tail. Exact.
LaurentPoly habiro_bracket(const QMXPoly& p, std::int64_t n);

/// Residuals of the three shift identities of the bracket for an arbitrary
/// polynomial P: the relations tying <P>_{n+1}, <P>_n, <P>_{n-1} to brackets
/// of (curve-operator coefficients) * P(q, M, q^2 x). All three vanish
/// identically for every P.
std::array<LaurentPoly, 3> bracket_shift_residuals(const QMXPoly& p, std::int64_t n);

/// <x^j>_n sequences (j = 0 gives the figure-eight Jones sequence).
PolySequence bracket_sequence(const QMXPoly& p);

struct RecurrenceReport {
    std::string relation;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    bool all_zero = false;
    std::optional<std::int64_t> first_failure;
    std::string witness; // truncated text of the first nonzero residual
};

/// Exact residual check of the catalog q-difference relations. Relation ids:
/// "prop4.2:a,b", "prop4.3:b", "prop4.4:1", "prop4.4:x", "prop4.5", "prop4.6".
RecurrenceReport verify_recurrence(const std::string& relation_id, std::int64_t n_min, std::int64_t n_max);

/// q -> 1 specialization to a commutative (M, L) polynomial.
MLPoly epsilon(const QTorusOp& op);

/// Exact division of epsilon(op) by the knot's A-polynomial in Q(M)[L].
MLDivision aj_divisibility(const QTorusOp& op, const KnotSpec& knot);

/// The single figure-eight recurrence Q J^8 = R: the operator Q and the
/// inhomogeneity numerator (R times q - q^{-1}) as a (q, M) polynomial.
QTorusOp fig8_recurrence_op();
QMXPoly fig8_recurrence_rhs_numerator();

/// id - q^{2ab} M^{-2ab} L^{-2}, the homogeneous part of the two-step
/// recurrence for J^{a,b} (with Mtilde = q^{-1} M this is id - Mtilde^{-2ab} L^{-2}).
QTorusOp torus_recurrence_op(std::int64_t a, std::int64_t b);

/// Compose rhs-annihilation with an inhomogeneous relation: given Q f = R
/// with R_n = r(q, q^n)/(q - q^{-1}), returns [r(q,M) L - r(q,qM)] Q, which
/// annihilates f.
QTorusOp homogenize(const QTorusOp& q_op, const QMXPoly& rhs_numerator);

} // namespace qtk
