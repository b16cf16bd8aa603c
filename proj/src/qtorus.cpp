#include "qtorus.hpp"

#include <memory>
#include <vector>

namespace qtk {

namespace {

// q^e as a Laurent polynomial in q.
LaurentPoly q_mono(std::int64_t e) { return LaurentPoly::monomial(1, e); }

// Laurent-in-q polynomial rewritten in t via q = t^2.
LaurentPoly q_to_t(const LaurentPoly& p) { return p.stretch(2); }

// {n} = q^n - q^{-n} written in q.
LaurentPoly q_quantum_integer(std::int64_t n) { return q_mono(n) - q_mono(-n); }

// {n}/{1} = q^{n-1} + q^{n-3} + ... + q^{1-n} in t (n >= 0).
LaurentPoly quantum_integer_ratio_t(std::int64_t n) {
    LaurentPoly p;
    for (std::int64_t j = 0; j < n; ++j) p += LaurentPoly::monomial(1, 2 * (n - 1 - 2 * j));
    return p;
}

} // namespace

QTorusOp QTorusOp::term(LaurentPoly c_of_q, std::int64_t m_exp, std::int64_t l_exp) {
    QTorusOp op;
    if (!c_of_q.is_zero()) op.terms_[{m_exp, l_exp}] = std::move(c_of_q);
    return op;
}

void QTorusOp::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

QTorusOp& QTorusOp::operator+=(const QTorusOp& rhs) {
    for (const auto& [key, c] : rhs.terms_) terms_[key] += c;
    prune();
    return *this;
}

QTorusOp& QTorusOp::operator-=(const QTorusOp& rhs) {
    for (const auto& [key, c] : rhs.terms_) terms_[key] -= c;
    prune();
    return *this;
}

QTorusOp QTorusOp::operator-() const {
    QTorusOp op(*this);
    for (auto& [key, c] : op.terms_) c = -c;
    return op;
}

QTorusOp operator*(const QTorusOp& a, const QTorusOp& b) {
    // (c1 M^{m1} L^{l1})(c2 M^{m2} L^{l2}) = c1 c2 q^{l1 m2} M^{m1+m2} L^{l1+l2}
    QTorusOp p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            LaurentPoly c = ca * cb;
            c.mul_monomial(1, checked_mul(ka.second, kb.first));
            p.terms_[{checked_add(ka.first, kb.first), checked_add(ka.second, kb.second)}] += c;
        }
    p.prune();
    return p;
}

LaurentPoly PolySequence::at(std::int64_t n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }
    LaurentPoly value = fn_(n);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(n, std::move(value)).first->second;
}

double PolySequence::periodicity_defect(std::int64_t n, std::int64_t k) const {
    std::complex<double> a = at(n).eval_root_of_unity(k);
    std::complex<double> b = at(n + 2 * k).eval_root_of_unity(k);
    return std::abs(a - b);
}

PolySequence jones_sequence(const KnotSpec& knot) {
    return PolySequence([knot](std::int64_t n) -> LaurentPoly {
        if (n == 0) return LaurentPoly::zero();
        if (n < 0) return -colored_jones(knot, -n);
        return colored_jones(knot, n);
    });
}

LaurentPoly apply_at(const QTorusOp& op, const PolySequence& f, std::int64_t n) {
    LaurentPoly acc;
    for (const auto& [key, c_of_q] : op.terms()) {
        const auto [m_exp, l_exp] = key;
        LaurentPoly c = q_to_t(c_of_q);
        c.mul_monomial(1, checked_mul(2 * m_exp, n)); // q^{m n} with q = t^2
        acc += c * f.at(n + l_exp);
    }
    return acc;
}

QMXPoly QMXPoly::monomial(Int c, std::int64_t q_exp, std::int64_t m_exp, std::int64_t x_exp) {
    QMXPoly p;
    if (sgn(c) != 0) p.terms_[{q_exp, m_exp, x_exp}] = std::move(c);
    return p;
}

void QMXPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

QMXPoly& QMXPoly::operator+=(const QMXPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) terms_[key] += c;
    prune();
    return *this;
}

QMXPoly& QMXPoly::operator-=(const QMXPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) terms_[key] -= c;
    prune();
    return *this;
}

QMXPoly QMXPoly::operator-() const {
    QMXPoly p(*this);
    for (auto& [key, c] : p.terms_) c = -c;
    return p;
}

QMXPoly operator*(const QMXPoly& a, const QMXPoly& b) {
    QMXPoly p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            QMXPoly::Key key = {checked_add(ka[0], kb[0]), checked_add(ka[1], kb[1]),
                                checked_add(ka[2], kb[2])};
            p.terms_[key] += ca * cb;
        }
    p.prune();
    return p;
}

QMXPoly QMXPoly::shift_x_by_q2() const {
    QMXPoly p;
    for (const auto& [key, c] : terms_)
        p.terms_[{checked_add(key[0], 2 * key[2]), key[1], key[2]}] = c;
    return p;
}

QMXPoly QMXPoly::shift_m_by_q(std::int64_t s) const {
    QMXPoly p;
    for (const auto& [key, c] : terms_)
        p.terms_[{checked_add(key[0], checked_mul(s, key[1])), key[1], key[2]}] = c;
    return p;
}

LaurentPoly QMXPoly::eval_qn_q2m(std::int64_t n, std::int64_t m) const {
    LaurentPoly acc;
    for (const auto& [key, c] : terms_) {
        std::int64_t t_exp = checked_add(checked_add(2 * key[0], checked_mul(2 * n, key[1])),
                                         checked_mul(4 * m, key[2]));
        acc += LaurentPoly::monomial(c, t_exp);
    }
    return acc;
}

LaurentPoly QMXPoly::eval_qn_x1(std::int64_t n) const {
    return eval_qn_q2m(n, 0);
}

LaurentPoly habiro_bracket(const QMXPoly& p, std::int64_t n) {
    if (n < 0) raise(Errc::invalid_argument, "bracket defined for n >= 0");
    LaurentPoly sum;
    LaurentPoly weight; // {n+m}! / ({1} {n-m-1}!) as a product form, in t
    for (std::int64_t m = 0; m < n; ++m) {
        if (m == 0) {
            weight = LaurentPoly::div_exact(quantum_integer(n), quantum_integer(1));
        } else {
            weight *= quantum_integer(n - m);
            weight *= quantum_integer(n + m);
        }
        sum += weight * p.eval_qn_q2m(n, m);
    }
    return sum;
}

PolySequence bracket_sequence(const QMXPoly& p) {
    return PolySequence([p](std::int64_t n) -> LaurentPoly {
        if (n <= 0) return LaurentPoly::zero();
        return habiro_bracket(p, n);
    });
}

MLPoly epsilon(const QTorusOp& op) {
    MLPoly out;
    for (const auto& [key, c_of_q] : op.terms())
        out += MLPoly::monomial(Rat(c_of_q.value_at_one()), key.first, key.second);
    return out;
}

MLDivision aj_divisibility(const QTorusOp& op, const KnotSpec& knot) {
    return divide_in_l(epsilon(op), a_polynomial(knot));
}

QTorusOp fig8_recurrence_op() {
    // Q = (q^{-1}M^2 - qM^{-2}) L + (qM^2 - q^{-1}M^{-2}) L^{-1}
    //   + (M^2 - M^{-2})(-M^4 - M^{-4} + M^2 + M^{-2} + q^2 + q^{-2})
    QTorusOp q;
    q += QTorusOp::term(q_mono(-1), 2, 1);
    q -= QTorusOp::term(q_mono(1), -2, 1);
    q += QTorusOp::term(q_mono(1), 2, -1);
    q -= QTorusOp::term(q_mono(-1), -2, -1);
    QTorusOp factor = QTorusOp::term(LaurentPoly::one(), 2, 0) - QTorusOp::term(LaurentPoly::one(), -2, 0);
    QTorusOp inner;
    inner -= QTorusOp::term(LaurentPoly::one(), 4, 0);
    inner -= QTorusOp::term(LaurentPoly::one(), -4, 0);
    inner += QTorusOp::term(LaurentPoly::one(), 2, 0);
    inner += QTorusOp::term(LaurentPoly::one(), -2, 0);
    inner += QTorusOp::term(q_mono(2) + q_mono(-2), 0, 0);
    q += factor * inner;
    return q;
}

QMXPoly fig8_recurrence_rhs_numerator() {
    // (q - q^{-1}) R = M^5 + M^{-5} + M^3 + M^{-3} - (q^2 + q^{-2})(M + M^{-1})
    QMXPoly r;
    r += QMXPoly::monomial(1, 0, 5, 0);
    r += QMXPoly::monomial(1, 0, -5, 0);
    r += QMXPoly::monomial(1, 0, 3, 0);
    r += QMXPoly::monomial(1, 0, -3, 0);
    QMXPoly qq = QMXPoly::monomial(1, 2, 0, 0) + QMXPoly::monomial(1, -2, 0, 0);
    QMXPoly mm = QMXPoly::monomial(1, 0, 1, 0) + QMXPoly::monomial(1, 0, -1, 0);
    r -= qq * mm;
    return r;
}

QTorusOp torus_recurrence_op(std::int64_t a, std::int64_t b) {
    const std::int64_t ab = checked_mul(a, b);
    return QTorusOp::identity() - QTorusOp::term(q_mono(2 * ab), -2 * ab, -2);
}

QTorusOp homogenize(const QTorusOp& q_op, const QMXPoly& rhs_numerator) {
    // r(q, M) and r(q, qM) as quantum-torus multipliers (L-degree zero).
    QTorusOp r_m, r_qm;
    for (const auto& [key, c] : rhs_numerator.terms()) {
        if (key[2] != 0) raise(Errc::invalid_argument, "rhs numerator must not involve x");
        r_m += QTorusOp::term(LaurentPoly::monomial(c, key[0]), key[1], 0);
        r_qm += QTorusOp::term(LaurentPoly::monomial(c, checked_add(key[0], key[1])), key[1], 0);
    }
    QTorusOp l_op = QTorusOp::term(LaurentPoly::one(), 0, 1);
    return (r_m * l_op - r_qm) * q_op;
}

namespace {

LaurentPoly t_mono(std::int64_t e) { return LaurentPoly::monomial(1, e); }

// Prop. 4.2 residual, cleared of the (1 - t^{-4}) denominator:
// (1 - t^{-4})(J_l - t^{4ab(1-l)} J_{l-2})
//   - t^{2(ab-a-b)(1-l)} (1 - t^{4a(1-l)-4} - t^{4b(1-l)-4} + t^{4(a+b)(1-l)})
LaurentPoly torus_two_step_residual(const PolySequence& j, std::int64_t a, std::int64_t b,
                                    std::int64_t l) {
    const std::int64_t ab = a * b;
    LaurentPoly lhs = j.at(l);
    LaurentPoly shifted = j.at(l - 2);
    shifted.mul_monomial(1, checked_mul(4 * ab, 1 - l));
    lhs -= shifted;
    lhs *= (t_mono(0) - t_mono(-4));
    LaurentPoly rhs = t_mono(0) - t_mono(4 * a * (1 - l) - 4) - t_mono(4 * b * (1 - l) - 4) +
                      t_mono(checked_mul(4 * (a + b), 1 - l));
    rhs.mul_monomial(1, checked_mul(2 * (ab - a - b), 1 - l));
    return lhs - rhs;
}

// Prop. 4.3 residual (a = 2, b odd):
// J_l + q^{b(1-2l)} J_{l-1} - q^{b(1-l)} {2l-1}/{1}
LaurentPoly torus_one_step_residual(const PolySequence& j, std::int64_t b, std::int64_t l) {
    LaurentPoly res = j.at(l);
    LaurentPoly shifted = j.at(l - 1);
    shifted.mul_monomial(1, checked_mul(2 * b, 1 - 2 * l)); // q^{b(1-2l)} in t
    res += shifted;
    LaurentPoly inhom = quantum_integer_ratio_t(2 * l - 1);
    inhom.mul_monomial(1, checked_mul(2 * b, 1 - l));
    return res - inhom;
}

} // namespace

// The three shift identities, stated for an arbitrary Laurent polynomial P.
// The x-slot of P is advanced by q^2 throughout; the two L-shifted lines also
// advance the M-slot of P by q^{+-1} (for the M-free polynomials the bracket
// machinery is actually used with, that shift is invisible):
//   <P>_n     = <(M^2 + M^{-2} - q^2 x - q^{-2} x^{-1}) P(q,M,q^2 x)>_n
//               + {n} P(q,q^n,1)/{1}
//   <P>_{n+1} = <(q^3 M^2 x + q^{-3} M^{-2} x^{-1} - q - q^{-1}) P(q,qM,q^2 x)>_n
//               + {n+1} P(q,q^{n+1},1)/{1}
//   <P>_{n-1} = <(q^3 M^{-2} x + q^{-3} M^2 x^{-1} - q - q^{-1}) P(q,q^{-1}M,q^2 x)>_n
//               + {n-1} P(q,q^{n-1},1)/{1}
std::array<LaurentPoly, 3> bracket_shift_residuals(const QMXPoly& p, std::int64_t n) {
    const QMXPoly shifted = p.shift_x_by_q2();
    auto mono = [](Int c, std::int64_t qe, std::int64_t me, std::int64_t xe) {
        return QMXPoly::monomial(std::move(c), qe, me, xe);
    };
    QMXPoly a0 = mono(1, 0, 2, 0) + mono(1, 0, -2, 0) - mono(1, 2, 0, 1) - mono(1, -2, 0, -1);
    QMXPoly a1 = mono(1, 3, 2, 1) + mono(1, -3, -2, -1) - mono(1, 1, 0, 0) - mono(1, -1, 0, 0);
    QMXPoly a2 = mono(1, 3, -2, 1) + mono(1, -3, 2, -1) - mono(1, 1, 0, 0) - mono(1, -1, 0, 0);

    auto inhom = [&](std::int64_t shift) {
        return quantum_integer_ratio_t(n + shift) * p.eval_qn_x1(n + shift);
    };
    std::array<LaurentPoly, 3> res;
    res[0] = habiro_bracket(p, n) - habiro_bracket(a0 * shifted, n) - inhom(0);
    res[1] = habiro_bracket(p, n + 1) - habiro_bracket(a1 * shifted.shift_m_by_q(1), n) - inhom(1);
    res[2] =
        habiro_bracket(p, n - 1) - habiro_bracket(a2 * shifted.shift_m_by_q(-1), n) - inhom(-1);
    return res;
}

namespace {

// Q J^8_n - R_n, exact.
LaurentPoly fig8_single_residual(const PolySequence& j, std::int64_t n) {
    LaurentPoly lhs = apply_at(fig8_recurrence_op(), j, n);
    LaurentPoly rhs =
        LaurentPoly::div_exact(fig8_recurrence_rhs_numerator().eval_qn_x1(n), quantum_integer(1));
    return lhs - rhs;
}

// The 2x2 system for (J_n, I_n) = (<1>_n, <x>_n).
std::array<LaurentPoly, 2> fig8_system_residuals(const PolySequence& j, const PolySequence& i,
                                                 std::int64_t n) {
    auto mono = [](Int c, std::int64_t qe, std::int64_t me) {
        return QMXPoly::monomial(std::move(c), qe, me, 0);
    };
    QMXPoly a11 = mono(1, -1, -4) - mono(1, -1, -2) - mono(1, 1, 0);
    QMXPoly a12 = mono(1, 3, 2) - mono(1, 1, -2);
    QMXPoly a21 = mono(1, -1, -2) - mono(1, 1, 2);
    QMXPoly a22 = mono(1, 3, 4) - mono(1, 1, 2) - mono(1, 1, 0);
    QMXPoly v1 = mono(1, 1, 1) - mono(1, -1, -3);
    QMXPoly v2 = mono(1, 1, 3) - mono(1, -1, -1);

    auto inhom = [&](const QMXPoly& v) {
        return LaurentPoly::div_exact(v.eval_qn_x1(n), quantum_integer(1));
    };
    std::array<LaurentPoly, 2> res;
    res[0] = j.at(n + 1) - a11.eval_qn_x1(n) * j.at(n) - a12.eval_qn_x1(n) * i.at(n) - inhom(v1);
    res[1] = i.at(n + 1) - a21.eval_qn_x1(n) * j.at(n) - a22.eval_qn_x1(n) * i.at(n) - inhom(v2);
    return res;
}

struct RelationSpec {
    std::int64_t lowest_n;
    std::function<std::vector<LaurentPoly>(std::int64_t)> residuals;
};

RelationSpec make_relation(const std::string& id) {
    if (id.rfind("prop4.2:", 0) == 0) {
        std::string params = id.substr(8);
        std::size_t comma = params.find(',');
        if (comma == std::string::npos) raise(Errc::invalid_argument, "expected prop4.2:a,b");
        std::int64_t a = std::stoll(params.substr(0, comma));
        std::int64_t b = std::stoll(params.substr(comma + 1));
        auto j = std::make_shared<PolySequence>(jones_sequence(KnotSpec::torus(a, b)));
        return {3, [j, a, b](std::int64_t n) {
                    return std::vector<LaurentPoly>{torus_two_step_residual(*j, a, b, n)};
                }};
    }
    if (id.rfind("prop4.3:", 0) == 0) {
        std::int64_t b = std::stoll(id.substr(8));
        if (b % 2 == 0) raise(Errc::invalid_argument, "prop4.3 needs odd b");
        auto j = std::make_shared<PolySequence>(jones_sequence(KnotSpec::torus(2, b)));
        return {2, [j, b](std::int64_t n) {
                    return std::vector<LaurentPoly>{torus_one_step_residual(*j, b, n)};
                }};
    }
    if (id == "prop4.4:1" || id == "prop4.4:x") {
        QMXPoly p = (id.back() == 'x') ? QMXPoly::monomial(1, 0, 0, 1) : QMXPoly::one();
        return {1, [p](std::int64_t n) {
                    auto arr = bracket_shift_residuals(p, n);
                    return std::vector<LaurentPoly>(arr.begin(), arr.end());
                }};
    }
    if (id == "prop4.5") {
        auto j = std::make_shared<PolySequence>(jones_sequence(KnotSpec::figure_eight()));
        return {1, [j](std::int64_t n) {
                    return std::vector<LaurentPoly>{fig8_single_residual(*j, n)};
                }};
    }
    if (id == "prop4.6") {
        auto j = std::make_shared<PolySequence>(bracket_sequence(QMXPoly::one()));
        auto i = std::make_shared<PolySequence>(bracket_sequence(QMXPoly::monomial(1, 0, 0, 1)));
        return {1, [j, i](std::int64_t n) {
                    auto arr = fig8_system_residuals(*j, *i, n);
                    return std::vector<LaurentPoly>(arr.begin(), arr.end());
                }};
    }
    raise(Errc::invalid_argument, "unknown relation '" + id + "'");
}

} // namespace

RecurrenceReport verify_recurrence(const std::string& relation_id, std::int64_t n_min,
                                   std::int64_t n_max) {
    RelationSpec spec = make_relation(relation_id);
    RecurrenceReport report;
    report.relation = relation_id;
    report.n_min = std::max(n_min, spec.lowest_n);
    report.n_max = n_max;
    report.all_zero = true;
    for (std::int64_t n = report.n_min; n <= n_max; ++n) {
        for (const LaurentPoly& res : spec.residuals(n)) {
            if (res.is_zero()) continue;
            report.all_zero = false;
            if (!report.first_failure) {
                report.first_failure = n;
                std::string text = res.to_string();
                if (text.size() > 200) text = text.substr(0, 200) + "...";
                report.witness = text;
            }
        }
    }
    return report;
}

} // namespace qtk
