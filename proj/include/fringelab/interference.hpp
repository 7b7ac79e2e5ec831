#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/numeric.hpp"

namespace fringelab {

struct DoubleSlitGeometry {
    double wavelength_m = 660e-9;
    double slit_spacing_m = 125e-6;   // center-to-center
    double slit_width_m = 4e-6;
    double screen_distance_m = 0.315;
    double screen_extent_m = 12e-3;   // total width, centered on the axis
    int screen_samples = 1024;

    bool operator==(const DoubleSlitGeometry&) const = default;
};

inline void validate(const DoubleSlitGeometry& g) {
    if (!(g.wavelength_m > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    if (!(g.slit_width_m > 0.0)) throw std::invalid_argument("slit width must be > 0");
    if (!(g.slit_width_m < g.slit_spacing_m))
        throw std::invalid_argument("slit width must be smaller than slit spacing");
    if (!(g.screen_distance_m >= 100.0 * g.slit_spacing_m))
        throw std::invalid_argument("screen distance must be >= 100x slit spacing (far field)");
    if (!(g.screen_extent_m > 0.0)) throw std::invalid_argument("screen extent must be > 0");
    if (g.screen_samples < 16) throw std::invalid_argument("need at least 16 screen samples");
}

struct PathConfig {
    double p1_m = 0.0;              // short fiber path
    double p2_m = 0.0;              // long fiber path
    double refractive_index = 1.0;
    double split_ratio = 0.5;       // fraction of power into the short path

    bool operator==(const PathConfig&) const = default;
};

inline void validate(const PathConfig& p) {
    if (!(p.p1_m >= 0.0)) throw std::invalid_argument("p1 must be >= 0");
    if (!(p.p2_m >= p.p1_m)) throw std::invalid_argument("p2 must be >= p1");
    if (!(p.refractive_index >= 1.0)) throw std::invalid_argument("refractive index must be >= 1");
    if (!(p.split_ratio > 0.0 && p.split_ratio < 1.0))
        throw std::invalid_argument("split ratio must lie strictly between 0 and 1");
}

// Highest visibility two beams of power ratio r:(1-r) can produce.
inline double splitter_visibility_bound(double split_ratio) {
    if (!(split_ratio > 0.0 && split_ratio < 1.0))
        throw std::invalid_argument("split ratio must lie strictly between 0 and 1");
    return 2.0 * std::sqrt(split_ratio * (1.0 - split_ratio));
}

inline double fringe_spacing(const DoubleSlitGeometry& g) {
    validate(g);
    return g.wavelength_m * g.screen_distance_m / g.slit_spacing_m;
}

// Half-width of the single-slit diffraction envelope's central lobe.
inline double central_lobe_halfwidth(const DoubleSlitGeometry& g) {
    validate(g);
    return g.wavelength_m * g.screen_distance_m / (2.0 * g.slit_width_m);
}

inline std::vector<double> screen_grid(const DoubleSlitGeometry& g) {
    validate(g);
    return linspace(-0.5 * g.screen_extent_m, 0.5 * g.screen_extent_m,
                    static_cast<std::size_t>(g.screen_samples));
}

// Accumulated second moments of the two slit amplitudes over a time window.
// Enough to reconstruct the window-averaged screen intensity: the pattern is
// linear in <|e1|^2>, <|e2|^2> and <e1 conj(e2)>.
struct TwoBeamMoments {
    double s1 = 0.0;
    double s2 = 0.0;
    std::complex<double> s12{0.0, 0.0};
    std::size_t count = 0;

    void add(std::complex<double> e1, std::complex<double> e2) {
        s1 += std::norm(e1);
        s2 += std::norm(e2);
        s12 += e1 * std::conj(e2);
        ++count;
    }
    void merge(const TwoBeamMoments& other) {
        s1 += other.s1;
        s2 += other.s2;
        s12 += other.s12;
        count += other.count;
    }
};

inline TwoBeamMoments accumulate_moments(std::span<const std::complex<double>> e1,
                                         std::span<const std::complex<double>> e2) {
    if (e1.size() != e2.size())
        throw std::invalid_argument("accumulate_moments: beam sample counts differ");
    TwoBeamMoments m;
    for (std::size_t i = 0; i < e1.size(); ++i) m.add(e1[i], e2[i]);
    return m;
}

struct TimeWindow {
    double begin_s = 0.0;
    double end_s = 0.0;
};

struct FringePattern {
    std::vector<double> x_m;
    std::vector<double> intensity;
    double visibility = 0.0;
    TimeWindow window;
};

namespace detail {

// Contrast within the central diffraction lobe: the global maximum there,
// against the minimum within one fringe period of that maximum. Restricting
// the minimum to one period keeps the slowly varying diffraction envelope
// from masquerading as fringe contrast when only one beam is lit.
inline double pattern_visibility(std::span<const double> x, std::span<const double> intensity,
                                 double lobe_halfwidth_m, double fringe_spacing_m) {
    std::size_t best = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) >= lobe_halfwidth_m) continue;
        if (best == x.size() || intensity[i] > intensity[best]) best = i;
    }
    if (best == x.size()) return 0.0;
    const double i_max = intensity[best];
    double i_min = i_max;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) >= lobe_halfwidth_m) continue;
        if (std::abs(x[i] - x[best]) > fringe_spacing_m) continue;
        i_min = std::min(i_min, intensity[i]);
    }
    const double denom = i_max + i_min;
    if (!(denom > 0.0)) return 0.0;
    return std::clamp((i_max - i_min) / denom, 0.0, 1.0);
}

}  // namespace detail

// Window-averaged Fraunhofer double-slit pattern. Slit j contributes
// amplitude u_j(x) = sinc(pi a (x - s_j) / (lambda d)) with quadratic phase
// phi_j(x) = pi (x - s_j)^2 / (lambda d); slits sit at s = -w/2 (beam 1) and
// +w/2 (beam 2). eta in [0,1] scales the interference term (polarization
// overlap), default fully overlapped.
inline FringePattern fringe_pattern(const DoubleSlitGeometry& g, const TwoBeamMoments& m,
                                    TimeWindow window, double eta = 1.0) {
    validate(g);
    if (m.count == 0) throw std::invalid_argument("fringe_pattern: empty averaging window");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("fringe_pattern: overlap factor must lie in [0,1]");

    const double inv = 1.0 / static_cast<double>(m.count);
    const double s1 = m.s1 * inv;
    const double s2 = m.s2 * inv;
    const std::complex<double> s12 = m.s12 * inv;

    const double ld = g.wavelength_m * g.screen_distance_m;
    const double slit1 = -0.5 * g.slit_spacing_m;
    const double slit2 = +0.5 * g.slit_spacing_m;

    FringePattern out;
    out.window = window;
    out.x_m = screen_grid(g);
    out.intensity.resize(out.x_m.size());
    for (std::size_t i = 0; i < out.x_m.size(); ++i) {
        const double x = out.x_m[i];
        const double u1 = sinc(pi * g.slit_width_m * (x - slit1) / ld);
        const double u2 = sinc(pi * g.slit_width_m * (x - slit2) / ld);
        const double dphi =
            pi * ((x - slit1) * (x - slit1) - (x - slit2) * (x - slit2)) / ld;
        const double cross =
            2.0 * eta * u1 * u2 * (s12 * std::polar(1.0, dphi)).real();
        out.intensity[i] = std::max(s1 * u1 * u1 + s2 * u2 * u2 + cross, 0.0);
    }
    out.visibility = detail::pattern_visibility(out.x_m, out.intensity,
                                                central_lobe_halfwidth(g), fringe_spacing(g));
    return out;
}

// Instantaneous pattern for fixed slit amplitudes.
inline FringePattern fringe_pattern(const DoubleSlitGeometry& g, std::complex<double> e1,
                                    std::complex<double> e2, double eta = 1.0) {
    TwoBeamMoments m;
    m.add(e1, e2);
    return fringe_pattern(g, m, TimeWindow{0.0, 0.0}, eta);
}

// Mean distance between adjacent bright-fringe peaks. Peaks are strict local
// maxima at or above half the global maximum, refined by a three-point
// parabola fit. Needs at least two such peaks.
inline double measure_fringe_spacing(const FringePattern& p) {
    const auto& x = p.x_m;
    const auto& y = p.intensity;
    if (x.size() < 3) throw EstimationError("measure_fringe_spacing: too few samples");
    const double y_max = *std::max_element(y.begin(), y.end());
    if (!(y_max > 0.0)) throw EstimationError("measure_fringe_spacing: dark pattern");

    // A peak is a rise followed by a fall; ties are treated as one plateau so a
    // crest sampled symmetrically between two grid points is still found once.
    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        if (!(y[i] > y[i - 1])) continue;
        std::size_t j = i;
        while (j + 1 < x.size() && y[j + 1] == y[i]) ++j;
        if (j + 1 >= x.size() || y[j + 1] > y[i]) continue;
        if (y[i] < 0.5 * y_max) continue;
        const double dl = y[i - 1] - y[i];
        const double dr = y[j + 1] - y[i];
        const double xl = x[i - 1] - x[i];
        const double xr = x[j + 1] - x[i];
        const double den = dl * xr - dr * xl;
        double refined = 0.5 * (x[i] + x[j]);
        if (den != 0.0) refined = x[i] + 0.5 * (dl * xr * xr - dr * xl * xl) / den;
        peaks.push_back(refined);
        i = j;
    }
    if (peaks.size() < 2)
        throw EstimationError("measure_fringe_spacing: fewer than two fringe peaks");
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

}  // namespace fringelab
