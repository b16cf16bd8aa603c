#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "laurent.hpp"
#include "mlpoly.hpp"

namespace qtk {

/// Closed knot catalog: the unknot, torus knots T(a,b) and the figure-eight
/// knot. Everything downstream (states, recurrences, asymptotics) is driven
/// by the closed formulas attached to these three families.
class KnotSpec {
public:
    enum class Kind { Unknot, Torus, FigureEight };

    static KnotSpec unknot() { return KnotSpec(Kind::Unknot, 0, 0); }
    static KnotSpec torus(std::int64_t a, std::int64_t b);
    static KnotSpec figure_eight() { return KnotSpec(Kind::FigureEight, 0, 0); }

    /// CLI-facing names: "unknot", "torus:a,b", "fig8".
    static KnotSpec parse(const std::string& name);
    std::string name() const;

    Kind kind() const { return kind_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

    bool operator==(const KnotSpec& rhs) const = default;

private:
    KnotSpec(Kind kind, std::int64_t a, std::int64_t b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_;
    std::int64_t a_;
    std::int64_t b_;
};

/// Exact colored Jones polynomial J_l in the variable t, normalized so that
/// J_1 = 1 for every knot. Colors l >= 1 only; use J_{-l} = -J_l upstream.
LaurentPoly colored_jones(const KnotSpec& knot, std::int64_t color);

/// J_l(-e^{i pi/2k}) in O(l) complex operations, without building the
/// polynomial. Agrees with evaluating colored_jones() at the same root.
std::complex<double> colored_jones_at_level(const KnotSpec& knot, std::int64_t color, std::int64_t k);

/// Standard normalization at the level root: Jtilde_l(e^{-2 i pi /k}),
/// extracted via J_l(t) = Jtilde_l(t^{-4}) (t^{2l}-t^{-2l})/(t^2-t^{-2}).
/// Throws Errc::degenerate_color when l = 0 mod k.
std::complex<double> normalize_tilde(const KnotSpec& knot, std::int64_t color, std::int64_t k);

/// Alexander polynomial, normalized so Delta(1) = 1 and Delta(t^-1) = Delta(t).
LaurentPoly alexander(const KnotSpec& knot);

std::complex<double> alexander_at(const KnotSpec& knot, std::complex<double> t);

/// Catalog A-polynomial: L-1 for the unknot, (L-1)(L M^{ab} + 1) for
/// torus knots with a = 2, (L-1)(L^2 M^{2ab} - 1) for other torus knots, and
/// (L-1)(L^2 M^4 + M^4 + L(-M^8 + M^6 + 2M^4 + M^2 - 1)) for the figure eight.
MLPoly a_polynomial(const KnotSpec& knot);

/// The A-polynomial with its abelian factor (L-1) removed (1 for the unknot).
MLPoly a_polynomial_nonabelian_factor(const KnotSpec& knot);

/// Color-ratio bound for the Melvin-Morton regime: the first circle root of
/// Delta_K or the first irreducible-locus obstruction, whichever is lower.
/// Catalog values: 1/(ab) for torus knots, 1/6 for the figure eight, and 1
/// (no obstruction below a full turn) for the unknot.
double mmr_delta_bound(const KnotSpec& knot);

} // namespace qtk
