#include "knotstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <thread>

namespace qtk {

namespace {

constexpr double pi = std::numbers::pi;

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QTK_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

double fractional_distance(double x) {
    double f = x - std::floor(x);
    return std::min(f, 1.0 - f);
}

} // namespace

double StateCoeffs::norm_sq() const {
    double acc = 0.0;
    for (Complex v : c) acc += std::norm(v);
    return acc;
}

StateCoeffs knot_state(const KnotSpec& knot, std::int64_t k) {
    if (k < 3) raise(Errc::invalid_argument, "level must be >= 3");
    StateCoeffs state;
    state.k = k;
    state.c.assign(static_cast<std::size_t>(2 * k), Complex(0.0));
    const double scale = std::sin(pi / static_cast<double>(k)) / std::sqrt(static_cast<double>(k));
    for (std::int64_t l = 1; l < k; ++l) {
        Complex v = scale * colored_jones_at_level(knot, l, k);
        state.c[static_cast<std::size_t>(l)] = v;
        state.c[static_cast<std::size_t>(2 * k - l)] = -v; // J_{-l} = -J_l
    }
    // c_0 and c_k vanish: antisymmetry for the former, J_k = -J_k at the
    // level root for the latter.
    return state;
}

StateCoeffs ground_state(std::int64_t k) {
    if (k < 3) raise(Errc::invalid_argument, "level must be >= 3");
    StateCoeffs state;
    state.k = k;
    state.c.assign(static_cast<std::size_t>(2 * k),
                   Complex(0.0, -0.5 / std::sqrt(static_cast<double>(k))));
    return state;
}

Complex state_value(const QuantParams& params, const StateCoeffs& state, double p, double q) {
    if (params.k != state.k) raise(Errc::invalid_argument, "level mismatch");
    Complex acc = 0.0;
    for (std::int64_t l = 0; l < 2 * state.k; ++l) {
        Complex c = state.c[static_cast<std::size_t>(l)];
        if (c == Complex(0.0)) continue;
        acc += c * theta_basis_raw(params, l, p, q);
    }
    return acc;
}

double SectionGrid::max_norm() const {
    double m = 0.0;
    for (double v : norms) m = std::max(m, v);
    return m;
}

double SectionGrid::cell(int i, int j, double* norm_out) const {
    std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(i);
    if (norm_out) *norm_out = norms[idx];
    return norms[idx];
}

SectionGrid evaluate_grid(const StateCoeffs& state, const QuantParams& params, int n,
                          const std::string& label, int threads) {
    if (n < 16) raise(Errc::invalid_argument, "grid resolution must be >= 16");
    SectionGrid grid;
    grid.n = n;
    grid.k = params.k;
    grid.tau = params.tau;
    grid.label = label;
    grid.values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Complex(0.0));
    grid.norms.assign(grid.values.size(), 0.0);

    const double frame = params.frame_norm();
    auto run_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            double q = (j + 0.5) / static_cast<double>(n);
            for (int i = 0; i < n; ++i) {
                double p = (i + 0.5) / static_cast<double>(n);
                Complex v = state_value(params, state, p, q);
                std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(i);
                grid.values[idx] = v;
                grid.norms[idx] = std::abs(v) * frame;
            }
        }
    };

    int workers = std::min(resolve_threads(threads), n);
    if (workers <= 1) {
        run_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        int rows_per = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int j0 = w * rows_per;
            int j1 = std::min(n, j0 + rows_per);
            if (j0 >= j1) break;
            pool.emplace_back(run_rows, j0, j1);
        }
        for (auto& t : pool) t.join();
    }
    return grid;
}

double SupportCurves::distance(double p, double q) const {
    double best = std::numeric_limits<double>::infinity();
    for (const LineCurve& line : lines) {
        double value = line.np * p + line.nq * q - line.offset;
        double d = fractional_distance(value) / std::hypot(line.np, line.nq);
        best = std::min(best, d);
    }
    for (const auto& [cp, cq] : polyline) {
        double dp = fractional_distance(p - cp);
        double dq = fractional_distance(q - cq);
        best = std::min(best, std::hypot(dp, dq));
    }
    return best;
}

SupportCurves curves_d0() {
    SupportCurves curves;
    curves.lines.push_back({1.0, 0.0, 0.0});
    return curves;
}

LineCurve line_ds(std::int64_t s, bool shifted) {
    // Points of (s mu - lambda) R + lattice satisfy p + s q = 0 mod 1; the
    // lambda/(2s) translate moves the offset to 1/2.
    return {1.0, static_cast<double>(s), shifted ? 0.5 : 0.0};
}

std::vector<std::pair<double, double>> x8_polyline(int samples) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        double q = (j + 0.5) / static_cast<double>(samples);
        double g = std::cos(8.0 * pi * q) - std::cos(4.0 * pi * q) - 1.0;
        if (g < -1.0 || g > 1.0) continue;
        double p = std::acos(g) / (2.0 * pi); // in [0, 1/2]
        pts.emplace_back(p, q);
        pts.emplace_back(1.0 - p, q);
    }
    return pts;
}

SupportCurves curves_for_knot(const KnotSpec& knot) {
    SupportCurves curves = curves_d0();
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot: break;
        case KnotSpec::Kind::Torus: {
            std::int64_t s = knot.a() * knot.b();
            curves.lines.push_back(line_ds(s, false));
            curves.lines.push_back(line_ds(s, true));
            break;
        }
        case KnotSpec::Kind::FigureEight:
            curves.polyline = x8_polyline();
            break;
    }
    return curves;
}

MicrosupportReport microsupport_report(const SectionGrid& grid, const SupportCurves& curves,
                                       double margin) {
    if (curves.empty()) raise(Errc::invalid_argument, "no curves given");
    double cell_diagonal = std::numbers::sqrt2 / static_cast<double>(grid.n);
    if (margin <= cell_diagonal)
        raise(Errc::invalid_argument, "margin must exceed the grid cell diagonal");

    MicrosupportReport report;
    report.margin = margin;
    std::vector<double> off_norms;
    off_norms.reserve(grid.norms.size());
    for (int j = 0; j < grid.n; ++j) {
        double q = (j + 0.5) / static_cast<double>(grid.n);
        for (int i = 0; i < grid.n; ++i) {
            double p = (i + 0.5) / static_cast<double>(grid.n);
            std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.n) +
                              static_cast<std::size_t>(i);
            if (curves.distance(p, q) <= margin) {
                report.on_max = std::max(report.on_max, grid.norms[idx]);
                ++report.on_count;
            } else {
                off_norms.push_back(grid.norms[idx]);
                ++report.off_count;
            }
        }
    }
    if (off_norms.empty() || report.on_count == 0)
        raise(Errc::empty_partition, "margin leaves one side of the partition empty");

    // 99.9th percentile rather than the raw max, to shrug off isolated cells.
    std::sort(off_norms.begin(), off_norms.end());
    std::size_t idx = static_cast<std::size_t>(0.999 * static_cast<double>(off_norms.size() - 1));
    report.off_max = off_norms[idx];
    report.ratio = report.on_max > 0.0 ? report.off_max / report.on_max
                                       : std::numeric_limits<double>::infinity();
    return report;
}

namespace {

void check_regular_point(const KnotSpec& knot, double q) {
    Complex delta = alexander_at(knot, std::polar(1.0, 4.0 * pi * q));
    if (std::abs(delta) < 1e-9)
        raise(Errc::irregular_point, "Alexander polynomial vanishes at e^{4 i pi q}");
    // The unknot normalization degenerates where sin(2 pi q) = 0.
    if (fractional_distance(2.0 * q) < 1e-6)
        raise(Errc::irregular_point, "q lies on the degenerate set of the unknot amplitude");
    switch (knot.kind()) {
        case KnotSpec::Kind::Unknot: break;
        case KnotSpec::Kind::FigureEight:
            if (!(q > 0.0 && q < 0.25))
                raise(Errc::irregular_point, "q outside the regular interval (0, 1/4)");
            break;
        case KnotSpec::Kind::Torus: {
            double step = 1.0 / (2.0 * static_cast<double>(knot.a() * knot.b()));
            double nearest = std::round(q / step) * step;
            if (std::abs(q - nearest) < 1e-9)
                raise(Errc::irregular_point, "q lies in (1/2ab) N");
            break;
        }
    }
}

} // namespace

AbelianSample abelian_ratio_sample(const KnotSpec& knot, std::int64_t k, double q, Complex tau) {
    check_regular_point(knot, q);
    QuantParams params(k, tau);
    StateCoeffs state = knot_state(knot, k);
    StateCoeffs reference = knot_state(KnotSpec::unknot(), k);
    double num = std::abs(state_value(params, state, 0.0, q));
    double den = std::abs(state_value(params, reference, 0.0, q));
    if (den == 0.0) raise(Errc::irregular_point, "reference state vanishes at the sample point");
    AbelianSample sample;
    sample.q = q;
    sample.rho = num / den;
    double delta = std::abs(alexander_at(knot, std::polar(1.0, 4.0 * pi * q)));
    sample.target = 1.0 / delta;
    sample.rel_error = std::abs(sample.rho * delta - 1.0);
    return sample;
}

AdmissibilityScan admissibility_scan(const KnotSpec& knot, const std::vector<std::int64_t>& levels) {
    AdmissibilityScan scan;
    for (std::int64_t k : levels) {
        scan.levels.push_back(k);
        scan.norms.push_back(std::sqrt(knot_state(knot, k).norm_sq()));
    }
    // Least-squares slope of log norm against log k.
    const std::size_t n = scan.levels.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double x = std::log(static_cast<double>(scan.levels[i]));
            double y = std::log(std::max(scan.norms[i], 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double denom = static_cast<double>(n) * sxx - sx * sx;
        scan.growth_exponent = denom != 0.0 ? (static_cast<double>(n) * sxy - sx * sy) / denom : 0.0;
    }
    return scan;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

std::string grid_csv_text(const SectionGrid& grid) {
    std::string out = "p,q,re,im,norm\n";
    for (int j = 0; j < grid.n; ++j) {
        double q = (j + 0.5) / static_cast<double>(grid.n);
        for (int i = 0; i < grid.n; ++i) {
            double p = (i + 0.5) / static_cast<double>(grid.n);
            std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.n) +
                              static_cast<std::size_t>(i);
            append_double(out, p);
            out += ',';
            append_double(out, q);
            out += ',';
            append_double(out, grid.values[idx].real());
            out += ',';
            append_double(out, grid.values[idx].imag());
            out += ',';
            append_double(out, grid.norms[idx]);
            out += '\n';
        }
    }
    return out;
}

std::string grid_pgm_bytes(const SectionGrid& grid) {
    std::string out = "P5\n" + std::to_string(grid.n) + " " + std::to_string(grid.n) + "\n65535\n";
    const double max_norm = grid.max_norm();
    for (int r = 0; r < grid.n; ++r) {
        int j = grid.n - 1 - r; // row 0 sits at q near 1
        for (int i = 0; i < grid.n; ++i) {
            std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.n) +
                              static_cast<std::size_t>(i);
            double level = 0.0;
            if (max_norm > 0.0 && grid.norms[idx] > 0.0) {
                level = 1.0 + std::log10(grid.norms[idx] / max_norm) / 8.0;
                level = std::clamp(level, 0.0, 1.0);
            }
            auto pixel = static_cast<unsigned>(std::lround(65535.0 * level));
            out.push_back(static_cast<char>((pixel >> 8) & 0xff));
            out.push_back(static_cast<char>(pixel & 0xff));
        }
    }
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(Errc::io_error, "short write to '" + path + "'");
}

} // namespace

void write_grid_csv(const SectionGrid& grid, const std::string& path) {
    write_file(path, grid_csv_text(grid));
}

void write_grid_pgm(const SectionGrid& grid, const std::string& path) {
    write_file(path, grid_pgm_bytes(grid));
}

} // namespace qtk
