#include "laurent.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qtk {

namespace {

bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }

// Exact coefficient quotient; false when the division does not come out even.
bool coeff_div(const Int& num, const Int& den, Int& out) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return true;
}
bool coeff_div(const Rat& num, const Rat& den, Rat& out) {
    out = num / den;
    return true;
}

double coeff_to_double(const Int& c) { return c.get_d(); }
double coeff_to_double(const Rat& c) { return c.get_d(); }

Int coeff_from_string(const std::string& s, const Int*) { return Int(s); }
Rat coeff_from_string(const std::string& s, const Rat*) {
    Rat r(s);
    r.canonicalize();
    return r;
}

std::string coeff_to_string(const Int& c) { return c.get_str(); }
std::string coeff_to_string(const Rat& c) { return c.get_str(); }

} // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) raise(Errc::overflow, "exponent overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) raise(Errc::overflow, "exponent overflow in multiplication");
    return r;
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::monomial(C coeff, std::int64_t exp) {
    BasicLaurent p;
    if (!coeff_is_zero(coeff)) {
        p.min_exp_ = exp;
        p.coeffs_.push_back(std::move(coeff));
    }
    return p;
}

template <class C>
C BasicLaurent<C>::coeff(std::int64_t e) const {
    if (is_zero() || e < min_exp_ || e > max_exp()) return C(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

template <class C>
void BasicLaurent<C>::normalize() {
    std::size_t lead = coeffs_.size();
    while (lead > 0 && coeff_is_zero(coeffs_[lead - 1])) --lead;
    coeffs_.resize(lead);
    std::size_t tail = 0;
    while (tail < coeffs_.size() && coeff_is_zero(coeffs_[tail])) ++tail;
    if (tail > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
        min_exp_ = checked_add(min_exp_, static_cast<std::int64_t>(tail));
    }
    if (coeffs_.empty()) min_exp_ = 0;
}

template <class C>
BasicLaurent<C>& BasicLaurent<C>::operator+=(const BasicLaurent& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    std::int64_t lo = std::min(min_exp_, rhs.min_exp_);
    std::int64_t hi = std::max(max_exp(), rhs.max_exp());
    std::vector<C> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(rhs.min_exp_ - lo) + i] += rhs.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

template <class C>
BasicLaurent<C>& BasicLaurent<C>::operator-=(const BasicLaurent& rhs) {
    return *this += -rhs;
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::operator-() const {
    BasicLaurent p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::mul(const BasicLaurent& a, const BasicLaurent& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    BasicLaurent p;
    p.min_exp_ = checked_add(a.min_exp_, b.min_exp_);
    checked_add(a.max_exp(), b.max_exp()); // overflow probe for the top exponent
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (coeff_is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.normalize();
    return p;
}

template <class C>
void BasicLaurent<C>::mul_monomial(const C& c, std::int64_t e) {
    if (coeff_is_zero(c)) {
        *this = zero();
        return;
    }
    min_exp_ = checked_add(min_exp_, e);
    if (c != C(1))
        for (auto& a : coeffs_) a *= c;
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::div_exact(const BasicLaurent& a, const BasicLaurent& b) {
    if (b.is_zero()) raise(Errc::invalid_argument, "division by the zero polynomial");
    if (a.is_zero()) return zero();
    if (a.span() < b.span()) raise(Errc::non_divisible, "quotient span would be negative");
    BasicLaurent rem = a;
    BasicLaurent quot;
    quot.min_exp_ = a.min_exp_ - b.min_exp_;
    quot.coeffs_.assign(static_cast<std::size_t>(a.span() - b.span() + 1), C(0));
    const C& blead = b.coeffs_.back();
    while (!rem.is_zero() && rem.span() >= b.span()) {
        C q;
        if (!coeff_div(rem.coeffs_.back(), blead, q))
            raise(Errc::non_divisible, "leading coefficient not divisible");
        std::int64_t shift = rem.max_exp() - b.max_exp();
        quot.coeffs_[static_cast<std::size_t>(shift - quot.min_exp_)] = q;
        BasicLaurent sub = b;
        sub.mul_monomial(q, shift);
        rem -= sub;
    }
    if (!rem.is_zero()) raise(Errc::non_divisible, "nonzero remainder");
    quot.normalize();
    return quot;
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::reversed() const {
    if (is_zero()) return zero();
    BasicLaurent p;
    p.min_exp_ = -max_exp();
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return p;
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::stretch(std::int64_t m) const {
    if (m <= 0) raise(Errc::invalid_argument, "stretch factor must be positive");
    if (is_zero()) return zero();
    BasicLaurent p;
    p.min_exp_ = checked_mul(min_exp_, m);
    p.coeffs_.assign(static_cast<std::size_t>((span() - 1) * m + 1), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p.coeffs_[i * static_cast<std::size_t>(m)] = coeffs_[i];
    p.normalize();
    return p;
}

template <class C>
std::complex<double> BasicLaurent<C>::eval_root_of_unity(std::int64_t k) const {
    if (k < 1) raise(Errc::invalid_argument, "level must be >= 1");
    const std::int64_t period = 4 * k;
    std::vector<C> buckets(static_cast<std::size_t>(period), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t e = (min_exp_ + static_cast<std::int64_t>(i)) % period;
        if (e < 0) e += period;
        buckets[static_cast<std::size_t>(e)] += coeffs_[i];
    }
    RootTable roots(k);
    std::complex<double> acc = 0.0;
    for (std::int64_t j = 0; j < period; ++j)
        if (!coeff_is_zero(buckets[static_cast<std::size_t>(j)]))
            acc += coeff_to_double(buckets[static_cast<std::size_t>(j)]) * roots.power(j);
    return acc;
}

template <class C>
std::complex<double> BasicLaurent<C>::eval(std::complex<double> t) const {
    if (is_zero()) return 0.0;
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * t + coeff_to_double(coeffs_[i]);
    return acc * std::pow(t, static_cast<double>(min_exp_));
}

template <class C>
C BasicLaurent<C>::value_at_one() const {
    C acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

template <class C>
std::string BasicLaurent<C>::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeff_is_zero(coeffs_[i])) continue;
        if (!first) out << " + ";
        out << coeff_to_string(coeffs_[i]) << "*t^" << (min_exp_ + static_cast<std::int64_t>(i));
        first = false;
    }
    return out.str();
}

template <class C>
BasicLaurent<C> BasicLaurent<C>::parse(const std::string& text) {
    BasicLaurent acc;
    std::string stripped;
    stripped.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
    if (stripped.empty()) raise(Errc::parse_error, "empty polynomial text");
    if (stripped == "0") return zero();
    std::size_t pos = 0;
    while (pos < stripped.size()) {
        std::size_t next = pos;
        // Term separator is '+' at top level; a leading sign belongs to the term.
        next = stripped.find('+', pos + 1);
        while (next != std::string::npos && (stripped[next - 1] == '^' || stripped[next - 1] == '*'))
            next = stripped.find('+', next + 1);
        std::string term = stripped.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::size_t star = term.find("*t^");
        if (star == std::string::npos || star == 0)
            raise(Errc::parse_error, "malformed term '" + term + "' (expected c*t^e)");
        std::string cs = term.substr(0, star);
        std::string es = term.substr(star + 3);
        if (es.empty()) raise(Errc::parse_error, "missing exponent in '" + term + "'");
        C c;
        std::int64_t e = 0;
        try {
            c = coeff_from_string(cs, static_cast<const C*>(nullptr));
            e = std::stoll(es);
        } catch (const std::exception&) {
            raise(Errc::parse_error, "malformed term '" + term + "'");
        }
        acc += monomial(std::move(c), e);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return acc;
}

template class BasicLaurent<Int>;
template class BasicLaurent<Rat>;

LaurentPolyQ to_rational(const LaurentPoly& p) {
    LaurentPolyQ out;
    for (std::int64_t e = p.min_exp(); !p.is_zero() && e <= p.max_exp(); ++e) {
        Int c = p.coeff(e);
        if (sgn(c) != 0) out += LaurentPolyQ::monomial(Rat(c), e);
    }
    return out;
}

LaurentPoly quantum_integer(std::int64_t n) {
    return LaurentPoly::monomial(1, 2 * n) - LaurentPoly::monomial(1, -2 * n);
}

RootTable::RootTable(std::int64_t k) : k_(k) {
    if (k < 1) raise(Errc::invalid_argument, "level must be >= 1");
    table_.resize(static_cast<std::size_t>(4 * k));
    for (std::int64_t j = 0; j < 4 * k; ++j) {
        double angle = std::numbers::pi * static_cast<double>(j) / (2.0 * static_cast<double>(k));
        std::complex<double> w = std::polar(1.0, angle);
        table_[static_cast<std::size_t>(j)] = (j % 2 == 0) ? w : -w;
    }
}

} // namespace qtk
