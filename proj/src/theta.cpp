#include "theta.hpp"

#include <cmath>
#include <numbers>

namespace qtk {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double tail_efolds = 40.0; // e^{-40} ~ 4e-18, below double precision

} // namespace

double QuantParams::frame_norm() const { return std::pow(beta() / (2.0 * pi), 0.25); }

Complex theta_series_value(std::int64_t k, Complex tau, double p, double q) {
    const double beta = tau.imag();
    const Complex z = p + tau * q;
    const double kd = static_cast<double>(k);
    const double decay = 2.0 * pi * kd * beta;

    auto term = [&](double n) {
        // exp(2 i pi k (z (q + 2n) + n^2 tau)); modulus e^{-2 pi k beta (q+n)^2}
        Complex exponent = Complex(0.0, 2.0 * pi * kd) * (z * (q + 2.0 * n) + (n * n) * tau);
        return std::exp(exponent);
    };

    const double n_star = std::round(-q);
    const double peak = (q + n_star) * (q + n_star);
    Complex sum = term(n_star);
    for (double n = n_star + 1.0;; n += 1.0) {
        double d = q + n;
        if (decay * (d * d - peak) > tail_efolds) break;
        sum += term(n);
    }
    for (double n = n_star - 1.0;; n -= 1.0) {
        double d = q + n;
        if (decay * (d * d - peak) > tail_efolds) break;
        sum += term(n);
    }
    return std::pow(kd / (2.0 * pi), 0.25) * sum;
}

Complex theta_basis_raw(const QuantParams& params, std::int64_t ell, double p, double q) {
    const double shift = static_cast<double>(ell) / (2.0 * static_cast<double>(params.k));
    Complex phase = std::polar(1.0, pi * static_cast<double>(ell) * p);
    return phase * theta_series_value(params.k, params.tau, p, q + shift);
}

SectionValue theta_basis_value(const QuantParams& params, std::int64_t ell, double p, double q) {
    Complex v = theta_basis_raw(params, ell, p, q);
    return {v, std::abs(v) * params.frame_norm()};
}

std::vector<Complex> theta_basis_all(const QuantParams& params, double p, double q) {
    std::vector<Complex> out(static_cast<std::size_t>(2 * params.k));
    for (std::int64_t ell = 0; ell < 2 * params.k; ++ell)
        out[static_cast<std::size_t>(ell)] = theta_basis_raw(params, ell, p, q);
    return out;
}

Sampler heisenberg_translate(const QuantParams& params, double p0, double q0, Sampler section) {
    const double kd = static_cast<double>(params.k);
    return [=, section = std::move(section)](double p, double q) {
        double omega = 4.0 * pi * (p0 * q - q0 * p);
        return std::polar(1.0, -0.5 * kd * omega) * section(p0 + p, q0 + q);
    };
}

Complex inner_product(const QuantParams& params, const Sampler& a, const Sampler& b, int n_quad) {
    if (n_quad < 64) raise(Errc::invalid_argument, "quadrature needs at least 64 points per side");
    Complex acc = 0.0;
    for (int j = 0; j < n_quad; ++j) {
        double q = (j + 0.5) / static_cast<double>(n_quad);
        for (int i = 0; i < n_quad; ++i) {
            double p = (i + 0.5) / static_cast<double>(n_quad);
            acc += a(p, q) * std::conj(b(p, q));
        }
    }
    double frame2 = params.frame_norm() * params.frame_norm();
    return acc * (4.0 * pi * frame2 / (static_cast<double>(n_quad) * static_cast<double>(n_quad)));
}

std::vector<Complex> alternating_project(const std::vector<Complex>& coeffs) {
    const std::size_t dim = coeffs.size();
    if (dim == 0 || dim % 2 != 0)
        raise(Errc::invalid_argument, "coefficient vector must have size 2k");
    std::vector<Complex> out(dim);
    for (std::size_t l = 0; l < dim; ++l) {
        std::size_t neg = (dim - l) % dim;
        out[l] = 0.5 * (coeffs[l] - coeffs[neg]);
    }
    return out;
}

Complex theta_basis_s_transformed(const QuantParams& params, std::int64_t ell, double p, double q) {
    // Basis (lambda, -mu): coordinates p' = q, q' = -p, parameter -1/tau and
    // frame Omega_lambda = tau^{-1/2} Omega_mu (sign handled by the caller).
    const Complex tau_s = -1.0 / params.tau;
    const double shift = static_cast<double>(ell) / (2.0 * static_cast<double>(params.k));
    const double pp = q;
    const double qp = -p;
    Complex phase = std::polar(1.0, pi * static_cast<double>(ell) * pp);
    Complex frame = std::pow(params.tau, -0.5);
    return frame * phase * theta_series_value(params.k, tau_s, pp, qp + shift);
}

Complex theta_basis_t_transformed(const QuantParams& params, std::int64_t ell, double p, double q) {
    // Basis (mu, mu + lambda): coordinates p'' = p - q, q'' = q, parameter
    // tau + 1, same frame Omega_mu.
    const Complex tau_t = params.tau + 1.0;
    const double shift = static_cast<double>(ell) / (2.0 * static_cast<double>(params.k));
    Complex phase = std::polar(1.0, pi * static_cast<double>(ell) * (p - q));
    return phase * theta_series_value(params.k, tau_t, p - q, q + shift);
}

namespace {

std::vector<std::pair<double, double>> sample_points() {
    std::vector<std::pair<double, double>> pts;
    pts.emplace_back(0.0, 0.0);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            pts.emplace_back(0.07 + 0.19 * i, 0.11 + 0.17 * j);
    return pts;
}

double signed_max_deviation(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
    double dev_plus = 0.0, dev_minus = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        dev_plus = std::max(dev_plus, std::abs(lhs[i] - rhs[i]));
        dev_minus = std::max(dev_minus, std::abs(lhs[i] + rhs[i]));
    }
    return std::min(dev_plus, dev_minus);
}

} // namespace

double s_transform_check(const QuantParams& params) {
    std::vector<Complex> lhs, rhs;
    for (auto [p, q] : sample_points()) {
        lhs.push_back(theta_basis_s_transformed(params, 0, p, q));
        Complex sum = 0.0;
        for (std::int64_t ell = 0; ell < 2 * params.k; ++ell)
            sum += theta_basis_raw(params, ell, p, q);
        rhs.push_back(std::polar(1.0, -pi / 4.0) * sum /
                      std::sqrt(2.0 * static_cast<double>(params.k)));
    }
    return signed_max_deviation(lhs, rhs);
}

double t_transform_check(const QuantParams& params) {
    std::vector<Complex> lhs, rhs;
    for (auto [p, q] : sample_points()) {
        lhs.push_back(theta_basis_t_transformed(params, 0, p, q));
        rhs.push_back(theta_basis_raw(params, 0, p, q));
    }
    return signed_max_deviation(lhs, rhs);
}

} // namespace qtk
