#include "doctest.h"

#include <random>

#include "qtorus.hpp"

using namespace qtk;

namespace {

LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::monomial(1, e); }

QTorusOp random_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> exp_dist(-3, 3);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> count_dist(1, 4);
    QTorusOp op;
    int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
        LaurentPoly c = LaurentPoly::monomial(coeff_dist(rng), exp_dist(rng)) +
                        LaurentPoly::monomial(coeff_dist(rng), exp_dist(rng));
        op += QTorusOp::term(c, exp_dist(rng), exp_dist(rng));
    }
    return op;
}

PolySequence random_sequence(std::uint64_t seed) {
    return PolySequence([seed](std::int64_t n) {
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(n * 2654435761ull));
        std::uniform_int_distribution<std::int64_t> exp_dist(-6, 6);
        std::uniform_int_distribution<int> coeff_dist(-9, 9);
        LaurentPoly p;
        for (int i = 0; i < 4; ++i) p += LaurentPoly::monomial(coeff_dist(rng), exp_dist(rng));
        return p;
    });
}

QMXPoly random_qmx(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> small(-2, 2);
    std::uniform_int_distribution<std::int64_t> xe_dist(0, 2);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    std::uniform_int_distribution<int> count_dist(1, 3);
    QMXPoly p;
    int n = count_dist(rng);
    for (int i = 0; i < n; ++i)
        p += QMXPoly::monomial(coeff_dist(rng), small(rng), small(rng), xe_dist(rng));
    return p;
}

const QTorusOp M_op = QTorusOp::term(LaurentPoly::one(), 1, 0);
const QTorusOp L_op = QTorusOp::term(LaurentPoly::one(), 0, 1);

} // namespace

TEST_SUITE_BEGIN("qtorus");

TEST_CASE("defining relation LM = qML") {
    QTorusOp lm = L_op * M_op;
    QTorusOp qml = QTorusOp::term(q_pow(1), 1, 1);
    CHECK(lm == qml);

    // As operators on sequences the difference annihilates everything.
    QTorusOp zero_op = lm - qml;
    CHECK(zero_op.is_zero());
    PolySequence f = random_sequence(17);
    for (std::int64_t n = -3; n <= 3; ++n) CHECK(apply_at(zero_op, f, n).is_zero());
}

TEST_CASE("identity acts trivially") {
    PolySequence f = random_sequence(5);
    for (std::int64_t n = -4; n <= 4; ++n)
        CHECK(apply_at(QTorusOp::identity(), f, n) == f.at(n));
}

TEST_CASE("composition is associative and matches sequential application") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        QTorusOp a = random_op(rng);
        QTorusOp b = random_op(rng);
        QTorusOp c = random_op(rng);
        CHECK((a * b) * c == a * (b * c));
        PolySequence f = random_sequence(1000 + static_cast<std::uint64_t>(trial));
        for (std::int64_t n : {-2, 0, 1, 3})
            CHECK(apply_at(a * b, f, n) == apply_at(a, PolySequence([&](std::int64_t m) {
                                                        return apply_at(b, f, m);
                                                    }),
                                                    n));
    }
}

TEST_CASE("M acts as q^n and L as the shift") {
    PolySequence f = random_sequence(77);
    for (std::int64_t n = -2; n <= 3; ++n) {
        LaurentPoly mf = apply_at(M_op, f, n);
        LaurentPoly expected = f.at(n);
        expected.mul_monomial(1, 2 * n); // q^n = t^{2n}
        CHECK(mf == expected);
        CHECK(apply_at(L_op, f, n) == f.at(n + 1));
    }
}

TEST_CASE("bracket of 1 is the figure-eight Jones sequence") {
    CHECK(habiro_bracket(QMXPoly::one(), 1) == LaurentPoly::one());
    for (std::int64_t n = 1; n <= 12; ++n)
        CHECK(habiro_bracket(QMXPoly::one(), n) == colored_jones(KnotSpec::figure_eight(), n));
}

TEST_CASE("bracket shift identities hold for random polynomials") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        QMXPoly p = random_qmx(rng);
        for (std::int64_t n : {1, 2, 5, 9})
            for (const LaurentPoly& r : bracket_shift_residuals(p, n)) CHECK(r.is_zero());
    }
    // The dedicated relation ids cover P = 1 and P = x end to end.
    CHECK(verify_recurrence("prop4.4:1", 1, 12).all_zero);
    CHECK(verify_recurrence("prop4.4:x", 1, 12).all_zero);
}

TEST_CASE("torus recurrences have exact zero residuals") {
    CHECK(verify_recurrence("prop4.2:2,3", 3, 16).all_zero);
    CHECK(verify_recurrence("prop4.2:3,4", 3, 12).all_zero);
    CHECK(verify_recurrence("prop4.3:3", 2, 16).all_zero);
    CHECK(verify_recurrence("prop4.3:5", 2, 12).all_zero);
}

TEST_CASE("figure-eight recurrences have exact zero residuals") {
    CHECK(verify_recurrence("prop4.5", 1, 16).all_zero);
    CHECK(verify_recurrence("prop4.6", 1, 12).all_zero);
}

TEST_CASE("a perturbed relation is reported, not thrown") {
    // prop4.3 with the wrong parity is rejected outright.
    CHECK_THROWS_AS(verify_recurrence("prop4.3:4", 2, 5), Error);
    CHECK_THROWS_AS(verify_recurrence("no-such-relation", 1, 2), Error);
}

TEST_CASE("bracket sequence membership in the periodic family") {
    PolySequence i_seq = bracket_sequence(QMXPoly::monomial(1, 0, 0, 1));
    for (std::int64_t k : {5, 7}) {
        for (std::int64_t n : {1, 2, 3}) {
            double defect = i_seq.periodicity_defect(n, k);
            CHECK(defect < 1e-6);
        }
    }
}

TEST_CASE("epsilon collapses the commutation") {
    QTorusOp lm_minus_qml = L_op * M_op - QTorusOp::term(q_pow(1), 1, 1);
    CHECK(epsilon(lm_minus_qml).is_zero());

    QTorusOp torus_op = torus_recurrence_op(2, 3);
    MLPoly expected = MLPoly::one() - MLPoly::monomial(1, -12, -2);
    CHECK(epsilon(torus_op) == expected);
}

TEST_CASE("torus operator symbol matches the nonabelian A-factor") {
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {3, 4}}) {
        MLPoly symbol = epsilon(torus_recurrence_op(a, b));
        MLDivision div = divide_in_l(symbol, a_polynomial_nonabelian_factor(KnotSpec::torus(a, b)));
        CHECK(div.divisible);
        CHECK(div.denominator == LaurentPolyQ::one());
        CHECK(div.quotient * a_polynomial_nonabelian_factor(KnotSpec::torus(a, b)) == symbol);
    }
}

TEST_CASE("figure-eight symbol divisibility") {
    QTorusOp q_op = fig8_recurrence_op();

    // The homogeneous part alone picks up A_8 without its (L-1) factor ...
    MLDivision part = divide_in_l(epsilon(q_op),
                                  a_polynomial_nonabelian_factor(KnotSpec::figure_eight()));
    CHECK(part.divisible);
    MLPoly expected_f = MLPoly::monomial(1, -2, -1) - MLPoly::monomial(1, -6, -1);
    CHECK(part.quotient == expected_f);

    // ... while the homogenized annihilator is divisible by the full A_8.
    QTorusOp alpha = homogenize(q_op, fig8_recurrence_rhs_numerator());
    PolySequence j = jones_sequence(KnotSpec::figure_eight());
    for (std::int64_t n = 1; n <= 12; ++n) CHECK(apply_at(alpha, j, n).is_zero());

    MLDivision full = aj_divisibility(alpha, KnotSpec::figure_eight());
    CHECK(full.divisible);
    CHECK(full.remainder.is_zero());
    CHECK(full.quotient * a_polynomial(KnotSpec::figure_eight()) == epsilon(alpha));
}

TEST_CASE("aj divisibility edge cases") {
    // A_unknot = L - 1 divides L - 1 with quotient 1.
    QTorusOp l_minus_1 = L_op - QTorusOp::identity();
    MLDivision res = aj_divisibility(l_minus_1, KnotSpec::unknot());
    CHECK(res.divisible);
    CHECK(res.quotient == MLPoly::one());

    // A symbol with no L-structure cannot be divisible.
    QTorusOp m_squared = QTorusOp::term(LaurentPoly::one(), 2, 0);
    MLDivision bad = aj_divisibility(m_squared, KnotSpec::unknot());
    CHECK_FALSE(bad.divisible);
    CHECK(bad.remainder == MLPoly::monomial(1, 2, 0));
}

TEST_CASE("pseudo-division tracks the denominator") {
    // Divide L by (M + M^{-1}) L: the leading coefficient is not a monomial,
    // so one rescaling step is needed and the division comes out exact.
    MLPoly dividend = MLPoly::monomial(1, 0, 1);
    MLPoly divisor = (MLPoly::monomial(1, 1, 0) + MLPoly::monomial(1, -1, 0)) *
                     MLPoly::monomial(1, 0, 1);
    MLDivision res = divide_in_l(dividend, divisor);
    CHECK(res.divisible);
    // denominator * dividend == quotient * divisor + remainder
    MLPoly denom_ml;
    for (std::int64_t e = res.denominator.min_exp(); e <= res.denominator.max_exp(); ++e)
        if (sgn(res.denominator.coeff(e)) != 0)
            denom_ml += MLPoly::monomial(res.denominator.coeff(e), e, 0);
    CHECK(denom_ml * dividend == res.quotient * divisor + res.remainder);
}

TEST_SUITE_END();
