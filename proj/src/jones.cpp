#include "jones.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qtk {

namespace {

constexpr double pi = std::numbers::pi;

LaurentPoly t_power(std::int64_t e) { return LaurentPoly::monomial(1, e); }

// (t^{2l} - t^{-2l}) / (t^2 - t^{-2}) expanded as a geometric sum.
LaurentPoly unknot_jones(std::int64_t l) {
    LaurentPoly p;
    for (std::int64_t j = 0; j < l; ++j) p += t_power(2 * l - 2 - 4 * j);
    return p;
}

LaurentPoly torus_jones(std::int64_t a, std::int64_t b, std::int64_t l) {
    // Sum over the half-integers r = s/2, s = 1-l, 3-l, ..., l-1; the
    // substitution keeps every exponent integral: 4ab r^2 = ab s^2.
    LaurentPoly sum;
    for (std::int64_t s = 1 - l; s <= l - 1; s += 2) {
        std::int64_t ss = checked_mul(s, s);
        std::int64_t e1 = checked_add(checked_mul(a * b, ss), 2 - 2 * (a + b) * s);
        std::int64_t e2 = checked_add(checked_mul(a * b, ss), -2 - 2 * (a - b) * s);
        sum += t_power(e1);
        sum -= t_power(e2);
    }
    std::int64_t pre = checked_mul(a * b, 1 - checked_mul(l, l));
    sum.mul_monomial(1, pre);
    return LaurentPoly::div_exact(sum, quantum_integer(1));
}

LaurentPoly figure_eight_jones(std::int64_t n) {
    // Habiro's sum truncated at m = n-1: the product below picks up the
    // factor {0} = 0 for every m >= n.
    LaurentPoly sum;
    LaurentPoly product = quantum_integer(n);
    for (std::int64_t m = 0; m < n; ++m) {
        if (m > 0) {
            product *= quantum_integer(n - m);
            product *= quantum_integer(n + m);
        }
        sum += LaurentPoly::div_exact(product, quantum_integer(1));
    }
    return sum;
}

std::complex<double> torus_jones_at_level(std::int64_t a, std::int64_t b, std::int64_t l, std::int64_t k) {
    RootTable roots(k);
    std::complex<double> sum = 0.0;
    std::int64_t pre = checked_mul(a * b, 1 - checked_mul(l, l));
    for (std::int64_t s = 1 - l; s <= l - 1; s += 2) {
        std::int64_t ss = checked_mul(s, s);
        std::int64_t e1 = checked_add(checked_mul(a * b, ss), 2 - 2 * (a + b) * s);
        std::int64_t e2 = checked_add(checked_mul(a * b, ss), -2 - 2 * (a - b) * s);
        sum += roots.power(checked_add(e1, pre)) - roots.power(checked_add(e2, pre));
    }
    std::complex<double> denom = roots.power(2) - roots.power(-2); // 2 i sin(pi/k)
    return sum / denom;
}

double figure_eight_jones_at_level(std::int64_t n, std::int64_t k) {
    // {j} at the level root is 2 i sin(pi j / k), so each Habiro term is the
    // real number (-4)^m prod sin(pi j / k) / sin(pi / k). A factor with
    // j = 0 mod k vanishes identically and stays inside every later window,
    // so the sum is truncated there; otherwise the rounded near-zero would be
    // amplified by the 4^m growth.
    if (n % k == 0) return 0.0;
    const double s1 = std::sin(pi / static_cast<double>(k));
    double term = std::sin(pi * static_cast<double>(n) / static_cast<double>(k)) / s1;
    double sum = term;
    for (std::int64_t m = 1; m < n; ++m) {
        if ((n - m) % k == 0 || (n + m) % k == 0) break;
        term *= -4.0 * std::sin(pi * static_cast<double>(n - m) / static_cast<double>(k)) *
                std::sin(pi * static_cast<double>(n + m) / static_cast<double>(k));
        sum += term;
    }
    return sum;
}

} // namespace

KnotSpec KnotSpec::torus(std::int64_t a, std::int64_t b) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        raise(Errc::invalid_argument, "torus knot needs coprime parameters a, b >= 2");
    return KnotSpec(Kind::Torus, a, b);
}

KnotSpec KnotSpec::parse(const std::string& name) {
    if (name == "unknot") return unknot();
    if (name == "fig8") return figure_eight();
    if (name.rfind("torus:", 0) == 0) {
        std::string params = name.substr(6);
        std::size_t comma = params.find(',');
        if (comma != std::string::npos) {
            try {
                std::int64_t a = std::stoll(params.substr(0, comma));
                std::int64_t b = std::stoll(params.substr(comma + 1));
                return torus(a, b);
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                // fall through to the catalog error below
            }
        }
    }
    raise(Errc::invalid_argument, "unknown knot '" + name + "' (catalog: unknot, torus:a,b, fig8)");
}

std::string KnotSpec::name() const {
    switch (kind_) {
        case Kind::Unknot: return "unknot";
        case Kind::FigureEight: return "fig8";
        case Kind::Torus: return "torus:" + std::to_string(a_) + "," + std::to_string(b_);
    }
    return {};
}

LaurentPoly colored_jones(const KnotSpec& knot, std::int64_t color) {
    if (color < 1)
        raise(Errc::unsupported_color, "color must be >= 1 (use J_{-l} = -J_l upstream)");
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot: return unknot_jones(color);
        case KnotSpec::Kind::Torus: return torus_jones(knot.a(), knot.b(), color);
        case KnotSpec::Kind::FigureEight: return figure_eight_jones(color);
    }
    raise(Errc::invalid_argument, "corrupt knot spec");
}

std::complex<double> colored_jones_at_level(const KnotSpec& knot, std::int64_t color, std::int64_t k) {
    if (color < 1)
        raise(Errc::unsupported_color, "color must be >= 1 (use J_{-l} = -J_l upstream)");
    if (k < 3) raise(Errc::invalid_argument, "level must be >= 3");
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot:
            return std::sin(pi * static_cast<double>(color) / static_cast<double>(k)) /
                   std::sin(pi / static_cast<double>(k));
        case KnotSpec::Kind::Torus: return torus_jones_at_level(knot.a(), knot.b(), color, k);
        case KnotSpec::Kind::FigureEight: return figure_eight_jones_at_level(color, k);
    }
    raise(Errc::invalid_argument, "corrupt knot spec");
}

std::complex<double> normalize_tilde(const KnotSpec& knot, std::int64_t color, std::int64_t k) {
    if (k < 3) raise(Errc::invalid_argument, "level must be >= 3");
    if (color % k == 0)
        raise(Errc::degenerate_color, "t^{2l} - t^{-2l} vanishes at l = 0 mod k");
    double ratio = std::sin(pi / static_cast<double>(k)) /
                   std::sin(pi * static_cast<double>(color) / static_cast<double>(k));
    return colored_jones_at_level(knot, color, k) * ratio;
}

LaurentPoly alexander(const KnotSpec& knot) {
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot: return LaurentPoly::one();
        case KnotSpec::Kind::FigureEight: {
            LaurentPoly p = LaurentPoly::monomial(3, 0);
            p -= LaurentPoly::monomial(1, 1);
            p -= LaurentPoly::monomial(1, -1);
            return p;
        }
        case KnotSpec::Kind::Torus: {
            const std::int64_t a = knot.a();
            const std::int64_t b = knot.b();
            LaurentPoly num = (t_power(1) - t_power(0)) * (t_power(a * b) - t_power(0));
            LaurentPoly den = (t_power(a) - t_power(0)) * (t_power(b) - t_power(0));
            LaurentPoly quot = LaurentPoly::div_exact(num, den);
            // (a-1)(b-1) is even for coprime a, b, so the balancing shift is integral.
            quot.mul_monomial(1, -((a - 1) * (b - 1)) / 2);
            return quot;
        }
    }
    raise(Errc::invalid_argument, "corrupt knot spec");
}

std::complex<double> alexander_at(const KnotSpec& knot, std::complex<double> t) {
    return alexander(knot).eval(t);
}

MLPoly a_polynomial(const KnotSpec& knot) {
    MLPoly l_minus_1 = MLPoly::monomial(1, 0, 1) - MLPoly::one();
    if (knot.kind() == KnotSpec::Kind::Unknot) return l_minus_1;
    return l_minus_1 * a_polynomial_nonabelian_factor(knot);
}

MLPoly a_polynomial_nonabelian_factor(const KnotSpec& knot) {
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot: return MLPoly::one();
        case KnotSpec::Kind::Torus: {
            const std::int64_t ab = knot.a() * knot.b();
            if (knot.a() == 2 || knot.b() == 2)
                return MLPoly::monomial(1, ab, 1) + MLPoly::one(); // L M^{ab} + 1
            return MLPoly::monomial(1, 2 * ab, 2) - MLPoly::one(); // L^2 M^{2ab} - 1
        }
        case KnotSpec::Kind::FigureEight: {
            MLPoly p = MLPoly::monomial(1, 4, 2); // L^2 M^4
            p += MLPoly::monomial(1, 4, 0);       // M^4
            p += MLPoly::monomial(-1, 8, 1);      // -L M^8
            p += MLPoly::monomial(1, 6, 1);       // L M^6
            p += MLPoly::monomial(2, 4, 1);       // 2 L M^4
            p += MLPoly::monomial(1, 2, 1);       // L M^2
            p += MLPoly::monomial(-1, 0, 1);      // -L
            return p;
        }
    }
    raise(Errc::invalid_argument, "corrupt knot spec");
}

double mmr_delta_bound(const KnotSpec& knot) {
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot: return 1.0;
        case KnotSpec::Kind::FigureEight: return 1.0 / 6.0;
        case KnotSpec::Kind::Torus: return 1.0 / static_cast<double>(knot.a() * knot.b());
    }
    raise(Errc::invalid_argument, "corrupt knot spec");
}

} // namespace qtk
