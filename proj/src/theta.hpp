#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace qtk {

using Complex = std::complex<double>;

/// Level and complex structure for the quantization of the torus E/R.
/// Points are stored in the coordinates (p, q) dual to the lattice basis
/// (mu, lambda); the symplectic form is omega(x, y) = 4 pi (p_x q_y - q_x p_y).
struct QuantParams {
    QuantParams(std::int64_t level, Complex tau_param = Complex(0.0, 1.0))
        : k(level), tau(tau_param) {
        if (k < 1) raise(Errc::invalid_argument, "level must be >= 1");
        if (!(tau.imag() > 0.0))
            raise(Errc::invalid_argument, "tau must have positive imaginary part");
    }

    std::int64_t k;
    Complex tau;

    double beta() const { return tau.imag(); }
    /// Pointwise norm of the half-form frame Omega_mu: (beta/2pi)^{1/4}.
    double frame_norm() const;
};

/// Section value in the global trivialization, with the half-form component
/// expressed in the frame Omega_mu.
struct SectionValue {
    Complex value;
    double norm; // |value| * frame_norm
};

/// The Psi_0-shaped series for an arbitrary modular parameter:
/// (k/2pi)^{1/4} Theta(p + tau q, tau) exp(2 i pi k (p + tau q) q), with the
/// level-k theta series truncated once a term falls 40 e-folds below the peak.
Complex theta_series_value(std::int64_t k, Complex tau, double p, double q);

/// Psi_ell(p, q) in the Omega_mu frame: e^{i pi ell p} Psi_0(p, q + ell/2k).
Complex theta_basis_raw(const QuantParams& params, std::int64_t ell, double p, double q);

SectionValue theta_basis_value(const QuantParams& params, std::int64_t ell, double p, double q);

/// All 2k basis values at one point, indexed by ell in Z/2kZ.
std::vector<Complex> theta_basis_all(const QuantParams& params, double p, double q);

using Sampler = std::function<Complex(double, double)>;

/// Pull-back by the Heisenberg action of (x0, 1):
/// (T*_{x0} S)(y) = exp(-i (k/2) omega(x0, y)) S(x0 + y).
Sampler heisenberg_translate(const QuantParams& params, double p0, double q0, Sampler section);

/// Scalar product by midpoint quadrature over the fundamental square [0,1)^2,
/// N x N points, |omega| = 4 pi dp dq, including the half-form frame factor.
Complex inner_product(const QuantParams& params, const Sampler& a, const Sampler& b, int n_quad);

/// Antisymmetrization in the Psi basis: c_ell -> (c_ell - c_{-ell})/2.
std::vector<Complex> alternating_project(const std::vector<Complex>& coeffs);

/// Basis vector of the transformed bases entering the modular checks,
/// expressed in the Omega_mu frame of the reference basis (mu, lambda):
///  - S: basis (lambda, -mu), parameter -1/tau, frame Omega_lambda;
///  - T: basis (mu, mu + lambda), parameter tau + 1, frame Omega_mu.
Complex theta_basis_s_transformed(const QuantParams& params, std::int64_t ell, double p, double q);
Complex theta_basis_t_transformed(const QuantParams& params, std::int64_t ell, double p, double q);

/// Max pointwise deviation (over a deterministic sample grid, sign optimized)
/// of the Poisson-summation identity
///   Psi'_0 = +- e^{-i pi/4} (2k)^{-1/2} sum_ell Psi_ell.
double s_transform_check(const QuantParams& params);

/// Max pointwise deviation of Psi_0(mu, mu+lambda) = +- Psi_0(mu, lambda).
double t_transform_check(const QuantParams& params);

} // namespace qtk
