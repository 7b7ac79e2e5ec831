#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/numeric.hpp"
#include "fringelab/spectrum.hpp"

namespace fringelab {

// Complex degree of coherence gamma sampled over nonnegative delay.
struct CoherenceFunction {
    std::vector<double> tau_s;                 // starts at 0, strictly increasing
    std::vector<std::complex<double>> gamma;   // |gamma(0)| = 1, |gamma| <= 1
    std::string source;                        // human-readable provenance note
};

inline void validate(const CoherenceFunction& g) {
    if (g.tau_s.empty() || g.tau_s.size() != g.gamma.size())
        throw std::invalid_argument("coherence function delay/value size mismatch");
    if (g.tau_s.front() != 0.0)
        throw std::invalid_argument("coherence delay grid must start at 0");
    if (!strictly_increasing(g.tau_s))
        throw std::invalid_argument("coherence delay grid must be strictly increasing");
    if (std::abs(std::abs(g.gamma.front()) - 1.0) > 1e-9)
        throw std::invalid_argument("|gamma(0)| must be 1 after normalization");
    for (const auto& v : g.gamma)
        if (std::abs(v) > 1.0 + 1e-9)
            throw std::invalid_argument("|gamma| must not exceed 1");
}

// Modulus of the normalized transform of a unit-power line at delay tau:
// gaussian FWHM f -> exp[-(pi*tau*f)^2 / (4 ln2)], lorentzian -> exp(-pi*f*|tau|).
// Zero width means an ideal line (envelope 1).
inline double line_envelope(double tau_s, double fwhm_hz, LineShape shape) {
    if (fwhm_hz <= 0.0) return 1.0;
    if (shape == LineShape::gaussian) {
        const double u = pi * tau_s * fwhm_hz;
        return std::exp(-u * u / (4.0 * ln2));
    }
    return std::exp(-pi * fwhm_hz * std::abs(tau_s));
}

// gamma(tau) = Int P(nu) e^{+i 2 pi nu tau} dnu / Int P(nu) dnu at one delay.
// Line lists are summed in closed form; sampled spectra use a trapezoid-
// weighted discrete transform. Both normalize by the same weighted sum they
// transform, so gamma(0) is exactly 1.
inline std::complex<double> gamma_at_delay(const PowerSpectrum& s, double tau_s) {
    std::complex<double> acc{0.0, 0.0};
    double norm = 0.0;
    if (s.kind == SpectrumKind::line_list) {
        for (const auto& ln : s.lines) {
            acc += ln.power * line_envelope(tau_s, ln.fwhm_hz, s.line_shape) *
                   std::polar(1.0, two_pi * ln.freq_hz * tau_s);
            norm += ln.power;
        }
    } else {
        for (std::size_t i = 0; i < s.freq_hz.size(); ++i) {
            const double w = trapezoid_weight(s.freq_hz, i) * s.density[i];
            acc += w * std::polar(1.0, two_pi * s.freq_hz[i] * tau_s);
            norm += w;
        }
    }
    if (!(norm > 0.0)) throw std::invalid_argument("gamma_at_delay: zero total power");
    return acc / norm;
}

inline CoherenceFunction coherence_from_spectrum(const PowerSpectrum& s, double tau_max_s,
                                                 int n_tau) {
    validate(s);
    if (!(tau_max_s > 0.0)) throw std::invalid_argument("tau_max must be > 0");
    if (n_tau < 2) throw std::invalid_argument("need at least 2 delay samples");

    CoherenceFunction out;
    out.source = s.kind == SpectrumKind::line_list
                     ? "line-list spectrum, " + std::to_string(s.lines.size()) + " lines"
                     : "sampled spectrum, " + std::to_string(s.freq_hz.size()) + " samples";
    out.tau_s = linspace(0.0, tau_max_s, static_cast<std::size_t>(n_tau));
    out.gamma.resize(out.tau_s.size());
    for (std::size_t t = 0; t < out.tau_s.size(); ++t)
        out.gamma[t] = gamma_at_delay(s, out.tau_s[t]);
    validate(out);
    return out;
}

// V(tau) = exp[-(pi tau fwhm)^2 / (4 ln2)] for a Gaussian line. Even in tau.
inline double gaussian_visibility(double tau_s, double fwhm_hz) {
    if (!(fwhm_hz > 0.0)) throw std::invalid_argument("gaussian_visibility: FWHM must be > 0");
    const double u = pi * tau_s * fwhm_hz;
    return std::exp(-u * u / (4.0 * ln2));
}

// The 0.624 prefactor and the plain c/linewidth form disagree in common
// usage; both are always reported so callers can quote either.
inline constexpr double coherence_length_prefactor = 0.624;

struct CoherenceLengths {
    double prefactored_m = 0.0;    // 0.624 * c / dnu == 0.624 * lambda^2 / dlambda
    double unprefactored_m = 0.0;  // c / dnu == lambda^2 / dlambda
};

inline CoherenceLengths coherence_length_gaussian(double fwhm_hz) {
    if (!(fwhm_hz > 0.0))
        throw std::invalid_argument("coherence_length_gaussian: FWHM must be > 0");
    const double base = speed_of_light / fwhm_hz;
    return {coherence_length_prefactor * base, base};
}

inline CoherenceLengths coherence_length_from_wavelength(double lambda_m, double dlambda_m) {
    if (!(lambda_m > 0.0) || !(dlambda_m > 0.0))
        throw std::invalid_argument("coherence_length_from_wavelength: inputs must be > 0");
    const double base = lambda_m * lambda_m / dlambda_m;
    return {coherence_length_prefactor * base, base};
}

// |sin(k N pi dl / 2L) / (N sin(k pi dl / 2L))| for an N-mode uniform comb.
// At multiples of 2L/k the ratio is a removable singularity with limit 1
// (comb revival). Result clamped to [0, 1].
inline double comb_coherence_modulus(double delta_l_m, int n_modes, int k,
                                     double cavity_length_m) {
    if (n_modes < 1) throw std::invalid_argument("mode count must be >= 1");
    if (k < 1) throw std::invalid_argument("mode-order multiplier k must be >= 1");
    if (!(cavity_length_m > 0.0)) throw std::invalid_argument("cavity length must be > 0");
    if (!(delta_l_m >= 0.0)) throw std::invalid_argument("path difference must be >= 0");
    // Arguments are reduced per half period before the sines are taken, so the
    // ratio stays fully accurate arbitrarily close to the revivals where both
    // factors vanish together.
    const double cycles = static_cast<double>(k) * delta_l_m / (2.0 * cavity_length_m);
    const double frac = cycles - std::round(cycles);
    const double den = std::abs(std::sin(pi * frac));
    if (den < 1e-12) return 1.0;
    double num_cycles = static_cast<double>(n_modes) * frac;
    num_cycles -= std::round(num_cycles);
    const double v =
        std::abs(std::sin(pi * num_cycles)) / (static_cast<double>(n_modes) * den);
    return std::min(v, 1.0);
}

struct VisibilityCurve {
    std::vector<double> delta_l_m;
    std::vector<double> visibility;
};

struct GaussianSource {
    double fwhm_hz = 0.0;
};

struct CombSource {
    int n_modes = 1;
    int k = 1;
    double cavity_length_m = 0.0;
};

namespace detail {
inline std::vector<double> curve_range(double dl_min_m, double dl_max_m, int n_points) {
    if (n_points < 2) throw std::invalid_argument("visibility_curve: need at least 2 points");
    if (!(dl_min_m >= 0.0) || !(dl_max_m > dl_min_m))
        throw std::invalid_argument("visibility_curve: empty or negative delay range");
    return linspace(dl_min_m, dl_max_m, static_cast<std::size_t>(n_points));
}
}  // namespace detail

inline VisibilityCurve visibility_curve(const GaussianSource& src, double dl_min_m,
                                        double dl_max_m, int n_points) {
    VisibilityCurve curve;
    curve.delta_l_m = detail::curve_range(dl_min_m, dl_max_m, n_points);
    curve.visibility.reserve(curve.delta_l_m.size());
    for (double dl : curve.delta_l_m)
        curve.visibility.push_back(gaussian_visibility(dl / speed_of_light, src.fwhm_hz));
    return curve;
}

inline VisibilityCurve visibility_curve(const CombSource& src, double dl_min_m, double dl_max_m,
                                        int n_points) {
    VisibilityCurve curve;
    curve.delta_l_m = detail::curve_range(dl_min_m, dl_max_m, n_points);
    curve.visibility.reserve(curve.delta_l_m.size());
    for (double dl : curve.delta_l_m)
        curve.visibility.push_back(
            comb_coherence_modulus(dl, src.n_modes, src.k, src.cavity_length_m));
    return curve;
}

// Tabulates |gamma| against path difference dl = c * tau.
inline VisibilityCurve visibility_curve(const CoherenceFunction& g) {
    validate(g);
    VisibilityCurve curve;
    curve.delta_l_m.reserve(g.tau_s.size());
    curve.visibility.reserve(g.tau_s.size());
    for (std::size_t i = 0; i < g.tau_s.size(); ++i) {
        curve.delta_l_m.push_back(speed_of_light * g.tau_s[i]);
        curve.visibility.push_back(std::abs(g.gamma[i]));
    }
    return curve;
}

}  // namespace fringelab
