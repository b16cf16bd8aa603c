#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jones.hpp"
#include "theta.hpp"

namespace qtk {

/// Coefficients of a state in the Psi basis, indexed by ell in Z/2kZ.
/// Knot states carry c_ell = (sin(pi/k)/sqrt(k)) J_ell(-e^{i pi/2k}); the
/// alternating symmetry c_{-ell} = -c_ell is built in.
struct StateCoeffs {
    std::int64_t k = 0;
    std::vector<Complex> c;

    double norm_sq() const; // Parseval sum of |c_ell|^2
};

StateCoeffs knot_state(const KnotSpec& knot, std::int64_t k);

/// The equal-weight state (2i sqrt k)^{-1} sum_ell Psi_ell.
StateCoeffs ground_state(std::int64_t k);

/// Section value sum_ell c_ell Psi_ell(p, q) in the Omega_mu frame.
Complex state_value(const QuantParams& params, const StateCoeffs& state, double p, double q);

/// Sampled values and pointwise norms over the fundamental square, cells at
/// half-pixel offsets ((i+1/2)/N, (j+1/2)/N), row-major with q as the outer
/// loop. Evaluation is data-parallel over rows; thread count 0 means the
/// QTK_THREADS environment variable or the hardware default.
struct SectionGrid {
    int n = 0;
    std::int64_t k = 0;
    Complex tau;
    std::string label;
    std::vector<Complex> values;
    std::vector<double> norms;

    double max_norm() const;
    double cell(int i, int j, double* norm_out = nullptr) const;
};

SectionGrid evaluate_grid(const StateCoeffs& state, const QuantParams& params, int n,
                          const std::string& label, int threads = 0);

/// Curve primitives in (p, q) coordinates. A line stores an integer normal
/// direction and offset: distance = dist(np*p + nq*q - offset, Z)/|(np,nq)|,
/// which folds in all lattice translates.
struct LineCurve {
    double np, nq, offset;
};

struct SupportCurves {
    std::vector<LineCurve> lines;
    std::vector<std::pair<double, double>> polyline; // dense samples, torus-wrapped

    double distance(double p, double q) const;
    bool empty() const { return lines.empty() && polyline.empty(); }
};

/// D_0 = R lambda + Z mu, the abelian line {p in Z}.
SupportCurves curves_d0();
/// D_s = (s mu - lambda) R + R_lattice, optionally shifted by lambda/(2s).
LineCurve line_ds(std::int64_t s, bool shifted);
/// Dense polyline of the figure-eight curve cos(2 pi p) + 1 = cos(8 pi q) - cos(4 pi q).
std::vector<std::pair<double, double>> x8_polyline(int samples = 4096);
/// The microsupport curve system of a catalog knot.
SupportCurves curves_for_knot(const KnotSpec& knot);

struct MicrosupportReport {
    double margin = 0.0;
    double on_max = 0.0;
    double off_max = 0.0; // 99.9th percentile of off-support norms
    double ratio = 0.0;
    std::int64_t on_count = 0;
    std::int64_t off_count = 0;
};

/// Partition the grid by distance to the curve set and compare the bright
/// set against the complement. Throws Errc::empty_partition when the margin
/// swallows everything, Errc::invalid_argument when it is below the cell
/// diagonal.
MicrosupportReport microsupport_report(const SectionGrid& grid, const SupportCurves& curves,
                                       double margin);

struct AbelianSample {
    double q = 0.0;
    double rho = 0.0;      // |Z_k^K(q lambda)| / |Z_k^unknot(q lambda)|
    double target = 0.0;   // 1/|Delta_K(e^{4 i pi q})|
    double rel_error = 0.0;
};

/// Unknot-normalized amplitude test on the abelian line; the normalization
/// cancels every frame and phase factor, leaving 1/|Delta_K|.
AbelianSample abelian_ratio_sample(const KnotSpec& knot, std::int64_t k, double q,
                                   Complex tau = Complex(0.0, 1.0));

struct AdmissibilityScan {
    std::vector<std::int64_t> levels;
    std::vector<double> norms;
    double growth_exponent = 0.0; // least-squares slope of log|Z| vs log k
};

AdmissibilityScan admissibility_scan(const KnotSpec& knot, const std::vector<std::int64_t>& levels);

/// CSV: header p,q,re,im,norm; 17 significant digits; q outer loop.
void write_grid_csv(const SectionGrid& grid, const std::string& path);
std::string grid_csv_text(const SectionGrid& grid);

/// Binary PGM (P5, maxval 65535), 8-decade log scale, row 0 at q near 1.
void write_grid_pgm(const SectionGrid& grid, const std::string& path);
std::string grid_pgm_bytes(const SectionGrid& grid);

} // namespace qtk
