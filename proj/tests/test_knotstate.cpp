#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "knotstate.hpp"
#include "qtorus.hpp"

using namespace qtk;

namespace {

constexpr double pi = std::numbers::pi;

StateCoeffs state_from_sequence(const PolySequence& seq, std::int64_t k) {
    StateCoeffs state;
    state.k = k;
    state.c.resize(static_cast<std::size_t>(2 * k));
    double scale = std::sin(pi / double(k)) / std::sqrt(double(k));
    for (std::int64_t l = 0; l < 2 * k; ++l)
        state.c[static_cast<std::size_t>(l)] = scale * seq.at(l).eval_root_of_unity(k);
    return state;
}

} // namespace

TEST_SUITE_BEGIN("knotstate");

TEST_CASE("knot state coefficients") {
    for (const KnotSpec& knot :
         {KnotSpec::unknot(), KnotSpec::torus(2, 3), KnotSpec::figure_eight()}) {
        std::int64_t k = 10;
        StateCoeffs state = knot_state(knot, k);
        CHECK(state.c.size() == 20);
        CHECK(std::abs(state.c[0]) == 0.0);
        CHECK(std::abs(state.c[static_cast<std::size_t>(k)]) == 0.0);
        double scale = std::sin(pi / double(k)) / std::sqrt(double(k));
        for (std::int64_t l = 1; l < 2 * k; ++l) {
            if (l == k) {
                // J_k = -J_k at the level root, checked through the evaluator.
                CHECK(std::abs(colored_jones_at_level(knot, k, k)) < 1e-9);
                continue;
            }
            Complex expected = scale * colored_jones_at_level(knot, l, k);
            CHECK(std::abs(state.c[static_cast<std::size_t>(l)] - expected) < 1e-12);
            // alternating: c_{-l} = -c_l
            Complex neg = state.c[static_cast<std::size_t>((2 * k - l) % (2 * k))];
            CHECK(std::abs(neg + state.c[static_cast<std::size_t>(l)]) < 1e-15);
        }
    }
}

TEST_CASE("unknot state coefficients are sine values") {
    std::int64_t k = 24;
    StateCoeffs state = knot_state(KnotSpec::unknot(), k);
    for (std::int64_t l = 0; l < 2 * k; ++l) {
        double expected = std::sin(pi * double(l) / double(k)) / std::sqrt(double(k));
        CHECK(std::abs(state.c[static_cast<std::size_t>(l)] - expected) < 1e-12);
    }
    CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unknot state is the transformed-basis pair up to a global phase") {
    std::int64_t k = 12;
    QuantParams params(k);
    StateCoeffs state = knot_state(KnotSpec::unknot(), k);
    // Candidate: (Psi'_1 - Psi'_{-1})/sqrt(2) in the S-transformed basis.
    auto candidate = [&](double p, double q) {
        return (theta_basis_s_transformed(params, 1, p, q) -
                theta_basis_s_transformed(params, 2 * k - 1, p, q)) /
               std::sqrt(2.0);
    };
    // Fit the global phase at one point, then require agreement everywhere.
    Complex z0 = state_value(params, state, 0.13, 0.27);
    Complex c0 = candidate(0.13, 0.27);
    REQUIRE(std::abs(c0) > 1e-6);
    Complex phase = z0 / c0;
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-8);
    for (auto [p, q] : {std::pair{0.05, 0.81}, {0.4, 0.33}, {0.71, 0.09}, {0.9, 0.55}})
        CHECK(std::abs(state_value(params, state, p, q) - phase * candidate(p, q)) < 1e-8);
}

TEST_CASE("ground state") {
    std::int64_t k = 16;
    StateCoeffs z0 = ground_state(k);
    for (Complex c : z0.c) CHECK(std::abs(c - Complex(0.0, -0.5 / std::sqrt(double(k)))) == 0.0);
    CHECK(z0.norm_sq() == doctest::Approx(0.5).epsilon(1e-12));

    // Concentration on D_0 = {p in Z}.
    QuantParams params(150);
    SectionGrid grid = evaluate_grid(ground_state(150), params, 64, "ground");
    double on = 0.0, off = 0.0;
    for (int j = 0; j < grid.n; ++j)
        for (int i = 0; i < grid.n; ++i) {
            double p = (i + 0.5) / 64.0, dummy;
            double d = std::min(p, 1.0 - p);
            double norm = grid.cell(i, j, &dummy);
            if (d < 0.05) on = std::max(on, norm);
            if (d > 0.2) off = std::max(off, norm);
        }
    CHECK(off < 1e-6 * on);
}

TEST_CASE("parseval ties the grid to coefficient space") {
    std::int64_t k = 12;
    QuantParams params(k);
    StateCoeffs state = knot_state(KnotSpec::figure_eight(), k);
    SectionGrid grid = evaluate_grid(state, params, 128, "fig8");
    double quad = 0.0;
    for (double n : grid.norms) quad += n * n;
    quad *= 4.0 * pi / (128.0 * 128.0);
    CHECK(std::abs(quad / state.norm_sq() - 1.0) < 1e-6);
}

TEST_CASE("grid symmetry under the hyperelliptic involution") {
    std::int64_t k = 10;
    QuantParams params(k, Complex(0.3, 0.8));
    SectionGrid grid = evaluate_grid(knot_state(KnotSpec::torus(2, 3), k), params, 32, "t23");
    double max_norm = grid.max_norm();
    for (int j = 0; j < grid.n; ++j)
        for (int i = 0; i < grid.n; ++i) {
            double a, b;
            grid.cell(i, j, &a);
            grid.cell(grid.n - 1 - i, grid.n - 1 - j, &b);
            CHECK(std::abs(a - b) < 1e-10 * max_norm);
        }
}

TEST_CASE("zero state gives a zero grid") {
    StateCoeffs zero;
    zero.k = 8;
    zero.c.assign(16, Complex(0.0));
    SectionGrid grid = evaluate_grid(zero, QuantParams(8), 16, "zero");
    for (double n : grid.norms) CHECK(n == 0.0);
}

TEST_CASE("solid-torus profile of the unknot state") {
    // Along {p = 0}: norm/(k/2pi)^{1/4} -> sqrt(2) |sin(2 pi q)| |Omega_lambda|.
    for (std::int64_t k : {100, 200, 400}) {
        QuantParams params(k); // tau = i, |Omega_lambda| = (2 pi)^{-1/4}
        StateCoeffs state = knot_state(KnotSpec::unknot(), k);
        double frame_lambda = std::pow(2.0 * pi, -0.25);
        for (double q : {0.1, 0.22, 0.37}) {
            double norm = std::abs(state_value(params, state, 0.0, q)) * params.frame_norm();
            double predicted = std::pow(double(k) / (2.0 * pi), 0.25) * std::sqrt(2.0) *
                               std::abs(std::sin(2.0 * pi * q)) * frame_lambda;
            CHECK(std::abs(norm / predicted - 1.0) < 0.05);
        }
    }
}

TEST_CASE("sequence-space representation matches heisenberg translations") {
    std::int64_t k = 6;
    QuantParams params(k);
    PolySequence j = jones_sequence(KnotSpec::figure_eight());
    PolySequence mj([&](std::int64_t n) {
        LaurentPoly p = j.at(n);
        p.mul_monomial(1, 2 * n); // (M f)_n = q^n f_n
        return p;
    });
    PolySequence lj([&](std::int64_t n) { return j.at(n + 1); });

    StateCoeffs zf = state_from_sequence(j, k);
    StateCoeffs zmf = state_from_sequence(mj, k);
    StateCoeffs zlf = state_from_sequence(lj, k);

    Sampler zf_section = [&](double p, double q) { return state_value(params, zf, p, q); };
    Sampler t_mu = heisenberg_translate(params, 1.0 / (2.0 * double(k)), 0.0, zf_section);
    Sampler t_neg_lambda = heisenberg_translate(params, 0.0, -1.0 / (2.0 * double(k)), zf_section);

    for (auto [p, q] : {std::pair{0.17, 0.62}, {0.55, 0.21}, {0.88, 0.91}}) {
        CHECK(std::abs(t_mu(p, q) - state_value(params, zmf, p, q)) < 1e-9);
        CHECK(std::abs(t_neg_lambda(p, q) - state_value(params, zlf, p, q)) < 1e-9);
    }
}

TEST_CASE("support curve distances") {
    SupportCurves d0 = curves_d0();
    CHECK(d0.distance(0.0, 0.37) == doctest::Approx(0.0));
    CHECK(d0.distance(0.5, 0.9) == doctest::Approx(0.5));
    CHECK(d0.distance(0.98, 0.1) == doctest::Approx(0.02));

    // D_6 passes through the origin with direction (6, -1).
    SupportCurves d6;
    d6.lines.push_back(line_ds(6, false));
    CHECK(d6.distance(0.0, 0.0) == doctest::Approx(0.0));
    CHECK(d6.distance(6.0 / 37.0 * 0.5, 0.5 / 37.0) == doctest::Approx(0.5 / std::sqrt(37.0)));

    // The shifted copy passes through lambda/12.
    SupportCurves d6s;
    d6s.lines.push_back(line_ds(6, true));
    CHECK(d6s.distance(0.0, 1.0 / 12.0) == doctest::Approx(0.0).epsilon(1e-12));

    // Every sampled X_8 point satisfies the defining equation.
    auto x8 = x8_polyline(1 << 14);
    CHECK(!x8.empty());
    for (auto [p, q] : x8) {
        double lhs = std::cos(2.0 * pi * p) + 1.0;
        double rhs = std::cos(8.0 * pi * q) - std::cos(4.0 * pi * q);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("microsupport report at desk scale") {
    std::int64_t k = 60;
    QuantParams params(k);
    SectionGrid grid = evaluate_grid(knot_state(KnotSpec::figure_eight(), k), params, 64, "fig8");

    MicrosupportReport good =
        microsupport_report(grid, curves_for_knot(KnotSpec::figure_eight()), 0.15);
    CHECK(good.ratio < 1e-3);
    CHECK(good.on_count > 0);
    CHECK(good.off_count > 0);

    // Negative control: dropping X_8 must blow the ratio up.
    MicrosupportReport bad = microsupport_report(grid, curves_d0(), 0.15);
    CHECK(bad.ratio > 1e-1);

    CHECK_THROWS_AS(microsupport_report(grid, curves_d0(), 0.01), Error);  // below cell diagonal
    CHECK_THROWS_AS(microsupport_report(grid, curves_d0(), 0.49), Error);  // empty off side
}

TEST_CASE("abelian ratio test") {
    // Self-ratio of the unknot is exactly 1.
    for (double q : {0.07, 0.18, 0.31}) {
        AbelianSample s = abelian_ratio_sample(KnotSpec::unknot(), 40, q);
        CHECK(s.rho == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s.rel_error < 1e-12);
    }

    AbelianSample fig8 = abelian_ratio_sample(KnotSpec::figure_eight(), 300, 0.10);
    CHECK(fig8.rel_error < 0.10);

    AbelianSample t23 = abelian_ratio_sample(KnotSpec::torus(2, 3), 300, 0.05);
    CHECK(t23.rel_error < 0.10);

    CHECK_THROWS_AS(abelian_ratio_sample(KnotSpec::figure_eight(), 40, 0.25), Error);
    CHECK_THROWS_AS(abelian_ratio_sample(KnotSpec::torus(2, 3), 40, 1.0 / 12.0), Error);
    CHECK_THROWS_AS(abelian_ratio_sample(KnotSpec::unknot(), 40, 0.5), Error);
}

TEST_CASE("admissibility scan") {
    AdmissibilityScan unknot = admissibility_scan(KnotSpec::unknot(), {20, 40, 80});
    for (double n : unknot.norms) CHECK(n == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(unknot.growth_exponent) < 1e-6);

    AdmissibilityScan fig8 = admissibility_scan(KnotSpec::figure_eight(), {50, 100, 150});
    for (double n : fig8.norms) CHECK(std::isfinite(n));
    CHECK(std::isfinite(fig8.growth_exponent));

    AdmissibilityScan t23 = admissibility_scan(KnotSpec::torus(2, 3), {50, 100, 150});
    CHECK(std::isfinite(t23.growth_exponent));
}

TEST_CASE("grid emission formats") {
    std::int64_t k = 8;
    SectionGrid grid =
        evaluate_grid(knot_state(KnotSpec::unknot(), k), QuantParams(k), 16, "unknot");

    std::string csv = grid_csv_text(grid);
    CHECK(csv.rfind("p,q,re,im,norm\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16 * 16 + 1);
    // First row sits at the half-pixel offset.
    CHECK(csv.find("\n0.03125,0.03125,") != std::string::npos);

    std::string pgm = grid_pgm_bytes(grid);
    CHECK(pgm.rfind("P5\n16 16\n65535\n", 0) == 0);
    CHECK(pgm.size() == std::string("P5\n16 16\n65535\n").size() + 2u * 16u * 16u);

    // Determinism across thread counts.
    SectionGrid grid1 =
        evaluate_grid(knot_state(KnotSpec::unknot(), k), QuantParams(k), 16, "unknot", 1);
    SectionGrid grid4 =
        evaluate_grid(knot_state(KnotSpec::unknot(), k), QuantParams(k), 16, "unknot", 4);
    CHECK(grid_csv_text(grid1) == grid_csv_text(grid4));
    CHECK(grid_pgm_bytes(grid1) == grid_pgm_bytes(grid4));
    CHECK(grid_csv_text(grid1) == csv);
}

TEST_SUITE_END();
