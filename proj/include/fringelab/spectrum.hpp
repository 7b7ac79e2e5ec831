#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/numeric.hpp"

namespace fringelab {

enum class SpectrumKind { sampled, line_list };

// Profile attached to finite-width lines when a line-list spectrum is
// rendered onto a grid or transformed to a coherence function.
enum class LineShape { gaussian, lorentzian };

struct SpectralLine {
    double freq_hz = 0.0;
    double power = 0.0;    // integrated line power, arbitrary units
    double fwhm_hz = 0.0;  // 0 means an ideal delta line
};

// Optical power spectrum, either sampled density over a frequency grid or a
// finite list of lines. Exactly one of the two representations is populated.
struct PowerSpectrum {
    SpectrumKind kind = SpectrumKind::sampled;
    std::vector<double> freq_hz;   // sampled: strictly increasing grid
    std::vector<double> density;   // sampled: power density per sample
    std::vector<SpectralLine> lines;
    LineShape line_shape = LineShape::gaussian;
    // When the spectrum came from a wavelength CSV, the original column is
    // kept so re-emission reproduces the input bytes (nu = c/lambda does not
    // round-trip through doubles).
    std::vector<double> source_wavelength_nm;
};

inline void validate(const PowerSpectrum& s) {
    if (s.kind == SpectrumKind::sampled) {
        if (s.freq_hz.size() < 2)
            throw std::invalid_argument("sampled spectrum needs at least 2 samples");
        if (s.freq_hz.size() != s.density.size())
            throw std::invalid_argument("sampled spectrum grid/density size mismatch");
        if (!strictly_increasing(s.freq_hz))
            throw std::invalid_argument("sampled spectrum grid must be strictly increasing");
        for (double d : s.density)
            if (!(d >= 0.0)) throw std::invalid_argument("spectral density must be >= 0");
    } else {
        if (s.lines.empty())
            throw std::invalid_argument("line-list spectrum needs at least one line");
        for (const auto& ln : s.lines) {
            if (!(ln.power >= 0.0)) throw std::invalid_argument("line power must be >= 0");
            if (!(ln.fwhm_hz >= 0.0)) throw std::invalid_argument("line FWHM must be >= 0");
        }
        auto sorted = s.lines;
        std::sort(sorted.begin(), sorted.end(),
                  [](const SpectralLine& a, const SpectralLine& b) { return a.freq_hz < b.freq_hz; });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i].freq_hz == sorted[i - 1].freq_hz)
                throw std::invalid_argument("line-list frequencies must be pairwise distinct");
    }
}

inline double total_power(const PowerSpectrum& s) {
    if (s.kind == SpectrumKind::sampled) return trapezoid(s.freq_hz, s.density);
    double sum = 0.0;
    for (const auto& ln : s.lines) sum += ln.power;
    return sum;
}

// Parametric N-mode laser: modes sit at nu0 + n*k*c/(2L) with n symmetric
// about zero (integer offsets for odd N, half-integer for even N).
struct ModeComb {
    double nu0_hz = 0.0;
    double cavity_length_m = 0.0;
    int k = 1;
    int n_modes = 1;
    std::vector<double> amplitudes;
    double mode_linewidth_hz = 0.0;
};

inline void validate(const ModeComb& c) {
    if (c.n_modes < 1) throw std::invalid_argument("mode count must be >= 1");
    if (c.k < 1) throw std::invalid_argument("mode-order multiplier k must be >= 1");
    if (!(c.cavity_length_m > 0.0)) throw std::invalid_argument("cavity length must be > 0");
    if (!(c.nu0_hz > 0.0)) throw std::invalid_argument("center frequency must be > 0");
    if (!(c.mode_linewidth_hz >= 0.0)) throw std::invalid_argument("mode linewidth must be >= 0");
    if (c.amplitudes.size() != static_cast<std::size_t>(c.n_modes))
        throw std::invalid_argument("amplitudes must have exactly one entry per mode");
    bool any = false;
    for (double a : c.amplitudes) {
        if (!(a >= 0.0)) throw std::invalid_argument("mode amplitudes must be >= 0");
        if (a > 0.0) any = true;
    }
    if (!any) throw std::invalid_argument("mode amplitudes must not all be zero");
}

inline ModeComb make_uniform_comb(double nu0_hz, double cavity_length_m, int k, int n_modes,
                                  double mode_linewidth_hz = 0.0, double p0 = 1.0) {
    ModeComb c;
    c.nu0_hz = nu0_hz;
    c.cavity_length_m = cavity_length_m;
    c.k = k;
    c.n_modes = n_modes;
    c.amplitudes.assign(static_cast<std::size_t>(std::max(n_modes, 0)), p0);
    c.mode_linewidth_hz = mode_linewidth_hz;
    validate(c);
    return c;
}

inline double mode_spacing(double cavity_length_m, int k) {
    if (!(cavity_length_m > 0.0)) throw std::invalid_argument("cavity length must be > 0");
    if (k < 1) throw std::invalid_argument("mode-order multiplier k must be >= 1");
    return static_cast<double>(k) * speed_of_light / (2.0 * cavity_length_m);
}

// Baseband offsets of each mode from nu0, ascending. The offsets are
// symmetric about zero: ..., -1, 0, +1, ... times k*c/2L for odd N and
// half-odd multiples for even N.
inline std::vector<double> mode_offsets_hz(const ModeComb& c) {
    validate(c);
    const double spacing = mode_spacing(c.cavity_length_m, c.k);
    std::vector<double> offsets(static_cast<std::size_t>(c.n_modes));
    for (int i = 0; i < c.n_modes; ++i)
        offsets[static_cast<std::size_t>(i)] =
            (static_cast<double>(i) - 0.5 * static_cast<double>(c.n_modes - 1)) * spacing;
    return offsets;
}

// Widest baseband frequency reached by any mode; 0 for a single mode.
inline double comb_half_span_hz(const ModeComb& c) {
    return 0.5 * static_cast<double>(c.n_modes - 1) * mode_spacing(c.cavity_length_m, c.k);
}

inline double gaussian_profile(double nu, double nu0, double fwhm) {
    const double u = 2.0 * std::sqrt(ln2) * (nu - nu0) / fwhm;
    return std::exp(-u * u);
}

inline PowerSpectrum gaussian_spectrum(double nu0_hz, double fwhm_hz, double p0,
                                       std::span<const double> grid) {
    if (!(fwhm_hz > 0.0)) throw std::invalid_argument("gaussian_spectrum: FWHM must be > 0");
    if (!(p0 >= 0.0)) throw std::invalid_argument("gaussian_spectrum: peak power must be >= 0");
    if (grid.size() < 2 || !strictly_increasing(grid))
        throw std::invalid_argument("gaussian_spectrum: grid must be strictly increasing with >= 2 samples");
    if (grid.front() > nu0_hz - 3.0 * fwhm_hz || grid.back() < nu0_hz + 3.0 * fwhm_hz)
        throw std::invalid_argument("gaussian_spectrum: grid must cover nu0 +- 3*FWHM");
    PowerSpectrum s;
    s.kind = SpectrumKind::sampled;
    s.freq_hz.assign(grid.begin(), grid.end());
    s.density.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        s.density[i] = p0 * gaussian_profile(grid[i], nu0_hz, fwhm_hz);
    return s;
}

inline PowerSpectrum comb_spectrum(const ModeComb& c, LineShape shape = LineShape::gaussian) {
    validate(c);
    const auto offsets = mode_offsets_hz(c);
    PowerSpectrum s;
    s.kind = SpectrumKind::line_list;
    s.line_shape = shape;
    s.lines.resize(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i)
        s.lines[i] = SpectralLine{c.nu0_hz + offsets[i], c.amplitudes[i], c.mode_linewidth_hz};
    return s;
}

// Renders a line-list spectrum onto a sampled grid. Every line must carry a
// positive FWHM; the profile integrates to the line power.
inline PowerSpectrum render_to_sampled(const PowerSpectrum& s, std::span<const double> grid) {
    validate(s);
    if (s.kind != SpectrumKind::line_list)
        throw std::invalid_argument("render_to_sampled: input must be a line-list spectrum");
    if (grid.size() < 2 || !strictly_increasing(grid))
        throw std::invalid_argument("render_to_sampled: grid must be strictly increasing with >= 2 samples");
    PowerSpectrum out;
    out.kind = SpectrumKind::sampled;
    out.freq_hz.assign(grid.begin(), grid.end());
    out.density.assign(grid.size(), 0.0);
    for (const auto& ln : s.lines) {
        if (!(ln.fwhm_hz > 0.0))
            throw std::invalid_argument("render_to_sampled: every line needs FWHM > 0");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double nu = grid[i];
            if (s.line_shape == LineShape::gaussian) {
                const double peak = ln.power * 2.0 * std::sqrt(ln2 / pi) / ln.fwhm_hz;
                out.density[i] += peak * gaussian_profile(nu, ln.freq_hz, ln.fwhm_hz);
            } else {
                const double half = 0.5 * ln.fwhm_hz;
                const double d = nu - ln.freq_hz;
                out.density[i] += ln.power * half / (pi * (d * d + half * half));
            }
        }
    }
    return out;
}

struct EnvelopeWidth {
    double fwhm_hz = 0.0;
    double centroid_hz = 0.0;
    double fwhm_wavelength_m = 0.0;      // delta-lambda = c * delta-nu / nu_centroid^2
    double centroid_wavelength_m = 0.0;  // c / nu_centroid
};

// FWHM of a sampled spectrum's outer envelope: the outermost crossings of
// half the peak density, located by linear interpolation. Requires the peak
// region to be resolved (>= 2 samples above half max) and both flanks to
// cross below half max.
inline EnvelopeWidth envelope_linewidth(const PowerSpectrum& s) {
    validate(s);
    if (s.kind != SpectrumKind::sampled)
        throw std::invalid_argument("envelope_linewidth: input must be a sampled spectrum");
    const auto& f = s.freq_hz;
    const auto& p = s.density;
    const std::size_t n = f.size();

    const double peak = *std::max_element(p.begin(), p.end());
    if (!(peak > 0.0)) throw EstimationError("envelope_linewidth: spectrum is all zero");
    const double half = 0.5 * peak;

    std::size_t above = 0;
    for (double v : p)
        if (v >= half) ++above;
    if (above < 2)
        throw EstimationError("envelope_linewidth: peak region not resolved (fewer than 2 samples above half max)");

    std::size_t lo = 0;
    while (lo < n && p[lo] < half) ++lo;
    std::size_t hi = n;
    while (hi > 0 && p[hi - 1] < half) --hi;
    --hi;  // hi: last index at or above half
    if (lo == 0 || hi == n - 1)
        throw EstimationError("envelope_linewidth: spectrum does not fall below half max on both sides");

    const auto interp = [&](std::size_t below, std::size_t at) {
        return f[below] + (half - p[below]) * (f[at] - f[below]) / (p[at] - p[below]);
    };
    const double left = interp(lo - 1, lo);
    // Right flank interpolates from the last above-half sample down to the
    // next sample; reuse the two-point formula with the roles swapped.
    const double right = f[hi] + (half - p[hi]) * (f[hi + 1] - f[hi]) / (p[hi + 1] - p[hi]);

    EnvelopeWidth w;
    w.fwhm_hz = right - left;

    double norm = 0.0, first = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double wgt = trapezoid_weight(f, i) * p[i];
        norm += wgt;
        first += wgt * f[i];
    }
    w.centroid_hz = first / norm;
    w.centroid_wavelength_m = speed_of_light / w.centroid_hz;
    w.fwhm_wavelength_m = speed_of_light * w.fwhm_hz / (w.centroid_hz * w.centroid_hz);
    return w;
}

}  // namespace fringelab
