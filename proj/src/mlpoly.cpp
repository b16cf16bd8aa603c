#include "mlpoly.hpp"

#include <sstream>

namespace qtk {

MLPoly MLPoly::monomial(Rat c, std::int64_t m_exp, std::int64_t l_exp) {
    MLPoly p;
    if (sgn(c) != 0) p.terms_[{m_exp, l_exp}] = std::move(c);
    return p;
}

void MLPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

MLPoly& MLPoly::operator+=(const MLPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) terms_[key] += c;
    prune();
    return *this;
}

MLPoly& MLPoly::operator-=(const MLPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) terms_[key] -= c;
    prune();
    return *this;
}

MLPoly MLPoly::operator-() const {
    MLPoly p(*this);
    for (auto& [key, c] : p.terms_) c = -c;
    return p;
}

MLPoly operator*(const MLPoly& a, const MLPoly& b) {
    MLPoly p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            p.terms_[{checked_add(ka.first, kb.first), checked_add(ka.second, kb.second)}] += ca * cb;
    p.prune();
    return p;
}

std::int64_t MLPoly::min_l_exp() const {
    if (is_zero()) raise(Errc::invalid_argument, "L-degree of the zero polynomial");
    std::int64_t m = terms_.begin()->first.second;
    for (const auto& [key, c] : terms_) m = std::min(m, key.second);
    return m;
}

std::int64_t MLPoly::max_l_exp() const {
    if (is_zero()) raise(Errc::invalid_argument, "L-degree of the zero polynomial");
    std::int64_t m = terms_.begin()->first.second;
    for (const auto& [key, c] : terms_) m = std::max(m, key.second);
    return m;
}

LaurentPolyQ MLPoly::l_coeff(std::int64_t l_exp) const {
    LaurentPolyQ out;
    for (const auto& [key, c] : terms_)
        if (key.second == l_exp) out += LaurentPolyQ::monomial(c, key.first);
    return out;
}

std::complex<double> MLPoly::eval(std::complex<double> m, std::complex<double> l) const {
    std::complex<double> acc = 0.0;
    for (const auto& [key, c] : terms_)
        acc += c.get_d() * std::pow(m, static_cast<double>(key.first)) *
               std::pow(l, static_cast<double>(key.second));
    return acc;
}

std::string MLPoly::to_string() const {
    if (is_zero()) return "0";
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> by_l;
    for (const auto& [key, c] : terms_) by_l[{key.second, key.first}] = c;
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : by_l) {
        if (!first) out << " + ";
        out << c.get_str() << "*M^" << key.second << "*L^" << key.first;
        first = false;
    }
    return out.str();
}

MLDivision divide_in_l(const MLPoly& dividend, const MLPoly& divisor) {
    if (divisor.is_zero()) raise(Errc::invalid_argument, "division by the zero polynomial");
    MLDivision result;
    result.denominator = LaurentPolyQ::one();
    if (dividend.is_zero()) {
        result.divisible = true;
        return result;
    }
    const std::int64_t div_top = divisor.max_l_exp();
    const std::int64_t div_span = div_top - divisor.min_l_exp();
    const LaurentPolyQ lead = divisor.l_coeff(div_top);
    MLPoly lead_ml;
    for (std::int64_t e = lead.min_exp(); e <= lead.max_exp(); ++e)
        if (sgn(lead.coeff(e)) != 0) lead_ml += MLPoly::monomial(lead.coeff(e), e, 0);

    MLPoly rem = dividend;
    MLPoly quot;
    while (!rem.is_zero() && rem.max_l_exp() - rem.min_l_exp() >= div_span) {
        const std::int64_t top = rem.max_l_exp();
        LaurentPolyQ top_coeff = rem.l_coeff(top);
        LaurentPolyQ q;
        bool exact = true;
        try {
            q = LaurentPolyQ::div_exact(top_coeff, lead);
        } catch (const Error&) {
            exact = false;
        }
        if (!exact) {
            // Pseudo-division step: rescale everything by the leading
            // coefficient so the next top-term division is exact.
            rem = rem * lead_ml;
            quot = quot * lead_ml;
            result.denominator *= lead;
            continue;
        }
        MLPoly q_ml;
        for (std::int64_t e = q.min_exp(); !q.is_zero() && e <= q.max_exp(); ++e)
            if (sgn(q.coeff(e)) != 0) q_ml += MLPoly::monomial(q.coeff(e), e, top - div_top);
        quot += q_ml;
        rem -= q_ml * divisor;
    }
    result.quotient = quot;
    result.remainder = rem;
    result.divisible = rem.is_zero();
    return result;
}

} // namespace qtk
