#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/rng.hpp"
#include "fringelab/spectrum.hpp"

namespace fringelab {

// Baseband analytic-signal envelope of the laser output, sampled at dt.
// Sample j holds the field at t = j*dt relative to the carrier nu0.
struct FieldTrace {
    double dt_s = 0.0;
    std::vector<std::complex<double>> samples;
    ModeComb comb;
    std::uint64_t seed = 0;
};

// Sampling must resolve the full baseband comb width (N-1)*k*c/2L.
inline double max_field_dt(const ModeComb& c) {
    const double span = static_cast<double>(c.n_modes - 1) * mode_spacing(c.cavity_length_m, c.k);
    if (span == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * span);
}

inline void validate(const FieldTrace& t) {
    validate(t.comb);
    if (!(t.dt_s > 0.0)) throw std::invalid_argument("field trace dt must be > 0");
    if (t.samples.size() < 2) throw std::invalid_argument("field trace needs at least 2 samples");
    if (!(t.dt_s < max_field_dt(t.comb)))
        throw std::invalid_argument("field trace dt violates the comb Nyquist bound");
}

// E(t) = sum_n sqrt(a_n) exp(i 2 pi nu'_n t + i phi_n(t)), nu'_n the
// baseband mode offsets. Each phi_n starts uniform on [0, 2pi) and random-
// walks with per-step variance 2 pi linewidth dt, which gives the mode a
// Lorentzian line of FWHM mode_linewidth. Same seed, same trace, bit for bit.
inline FieldTrace synthesize_field(const ModeComb& comb, double duration_s, double dt_s,
                                   std::uint64_t seed) {
    validate(comb);
    if (!(dt_s > 0.0)) throw std::invalid_argument("synthesize_field: dt must be > 0");
    if (!(dt_s < max_field_dt(comb)))
        throw std::invalid_argument("synthesize_field: dt violates the comb Nyquist bound");
    if (!(duration_s >= 10.0 * dt_s))
        throw std::invalid_argument("synthesize_field: duration must be at least 10 steps");

    const auto n_samples = static_cast<std::size_t>(std::llround(duration_s / dt_s));
    const std::size_t n_modes = comb.amplitudes.size();
    const auto offsets = mode_offsets_hz(comb);

    std::vector<double> amp(n_modes), omega(n_modes), phase(n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
        amp[m] = std::sqrt(comb.amplitudes[m]);
        omega[m] = two_pi * offsets[m];
    }

    GaussianRng rng(seed);
    for (std::size_t m = 0; m < n_modes; ++m) phase[m] = two_pi * rng.uniform();
    const double sigma = std::sqrt(two_pi * comb.mode_linewidth_hz * dt_s);

    FieldTrace trace;
    trace.dt_s = dt_s;
    trace.comb = comb;
    trace.seed = seed;
    trace.samples.resize(n_samples);
    for (std::size_t j = 0; j < n_samples; ++j) {
        const double t = static_cast<double>(j) * dt_s;
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = 0; m < n_modes; ++m)
            acc += amp[m] * std::polar(1.0, omega[m] * t + phase[m]);
        trace.samples[j] = acc;
        if (sigma > 0.0 && j + 1 < n_samples)
            for (std::size_t m = 0; m < n_modes; ++m) phase[m] += sigma * rng.gaussian();
    }
    return trace;
}

// The source trace routed through the two fiber arms: arm i delays by
// n*p_i/c (rounded to whole samples) and scales by its splitter share.
// Indices below each arm's arrival hold zero. The inter-beam delay is
// rounded as one quantity so the realized delay differs from the exact one
// by at most dt/2; the carrier phase for the exact delay is kept as a unit
// factor on the delayed beam.
struct TwoBeamTrace {
    double dt_s = 0.0;
    std::vector<std::complex<double>> e1;
    std::vector<std::complex<double>> e2;
    std::size_t overlap_begin = 0;      // first index where both beams are lit
    double delay_exact_s = 0.0;         // n (p2 - p1) / c
    double delay_realized_s = 0.0;      // rounded to whole dt steps
    double rounding_error_s = 0.0;      // realized - exact
    std::complex<double> carrier{1.0, 0.0};
};

inline TwoBeamTrace delayed_two_beam(const FieldTrace& trace, const PathConfig& paths) {
    validate(trace);
    validate(paths);

    const std::size_t n = trace.samples.size();
    const double t1 = paths.refractive_index * paths.p1_m / speed_of_light;
    const double delay = paths.refractive_index * (paths.p2_m - paths.p1_m) / speed_of_light;
    const auto arm1 = static_cast<std::size_t>(std::llround(t1 / trace.dt_s));
    const auto delay_steps = static_cast<std::size_t>(std::llround(delay / trace.dt_s));
    const std::size_t arm2 = arm1 + delay_steps;
    if (arm2 >= n)
        throw EmptyOverlapError("delayed_two_beam: trace ends before the delayed beam arrives");

    TwoBeamTrace out;
    out.dt_s = trace.dt_s;
    out.delay_exact_s = delay;
    out.delay_realized_s = static_cast<double>(delay_steps) * trace.dt_s;
    out.rounding_error_s = out.delay_realized_s - delay;
    out.carrier = std::polar(1.0, -two_pi * trace.comb.nu0_hz * delay);
    out.overlap_begin = arm2;

    const double amp1 = std::sqrt(paths.split_ratio);
    const double amp2 = std::sqrt(1.0 - paths.split_ratio);
    out.e1.assign(n, {0.0, 0.0});
    out.e2.assign(n, {0.0, 0.0});
    for (std::size_t j = arm1; j < n; ++j) out.e1[j] = amp1 * trace.samples[j - arm1];
    for (std::size_t j = arm2; j < n; ++j)
        out.e2[j] = amp2 * out.carrier * trace.samples[j - arm2];
    return out;
}

}  // namespace fringelab
