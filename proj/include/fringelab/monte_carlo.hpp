#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fringelab/field.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/numeric.hpp"
#include "fringelab/rng.hpp"

namespace fringelab {

struct VisibilityEstimate {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    int n_seeds = 0;
    double delay_exact_s = 0.0;
    double delay_realized_s = 0.0;
};

// Ensemble average of the full-duration fringe visibility. Each trial
// synthesizes one field realization, routes it through the two arms and
// averages the pattern over every sample where both beams are lit. Trials
// use seeds derived from base_seed, so the estimate is reproducible.
inline VisibilityEstimate time_averaged_visibility(const ModeComb& comb, const PathConfig& paths,
                                                   const DoubleSlitGeometry& geometry,
                                                   double duration_s, double dt_s, int n_seeds,
                                                   std::uint64_t base_seed = 1, double eta = 1.0) {
    validate(geometry);
    validate(paths);
    if (n_seeds < 1) throw std::invalid_argument("time_averaged_visibility: need n_seeds >= 1");

    VisibilityEstimate est;
    est.n_seeds = n_seeds;
    std::vector<double> vis;
    vis.reserve(static_cast<std::size_t>(n_seeds));
    for (int s = 0; s < n_seeds; ++s) {
        const FieldTrace trace =
            synthesize_field(comb, duration_s, dt_s,
                             derive_stream_seed(base_seed, static_cast<std::uint64_t>(s)));
        const TwoBeamTrace beams = delayed_two_beam(trace, paths);
        est.delay_exact_s = beams.delay_exact_s;
        est.delay_realized_s = beams.delay_realized_s;

        TwoBeamMoments m;
        for (std::size_t j = beams.overlap_begin; j < beams.e1.size(); ++j)
            m.add(beams.e1[j], beams.e2[j]);
        const TimeWindow window{static_cast<double>(beams.overlap_begin) * dt_s,
                                static_cast<double>(beams.e1.size()) * dt_s};
        vis.push_back(fringe_pattern(geometry, m, window, eta).visibility);
    }
    const MeanStderr ms = mean_stderr(vis);
    est.mean = ms.mean;
    est.stderr_of_mean = ms.stderr_of_mean;
    return est;
}

struct VisibilityStats {
    double threshold = 0.0;
    double occurrence_probability = 0.0;  // fraction of windows at or above threshold
    double occurrence_stderr = 0.0;       // over trials
    double mean_duration_s = 0.0;         // mean above-threshold run length, 0 if none
    int n_trials = 0;
    double window_s = 0.0;
};

// Windowed visibility statistics over the two-beam overlap. Each trial is
// chopped into consecutive non-overlapping windows; a window's instantaneous
// visibility is the splitter bound 2 sqrt(r(1-r)) times the normalized
// cross-correlation |<e1 conj(e2)>| / sqrt(<|e1|^2><|e2|^2>) accumulated over
// that window, i.e. the contrast an ideal fringe readout would see. The
// Cauchy-Schwarz inequality keeps it at or below the bound.
inline VisibilityStats visibility_statistics(const ModeComb& comb, const PathConfig& paths,
                                             const DoubleSlitGeometry& geometry, double threshold,
                                             double window_s, double duration_s, double dt_s,
                                             int n_seeds, std::uint64_t base_seed = 1) {
    validate(geometry);
    validate(paths);
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("visibility_statistics: threshold must lie in (0,1)");
    if (!(window_s >= 10.0 * dt_s))
        throw std::invalid_argument("visibility_statistics: window must span at least 10 steps");
    if (n_seeds < 1) throw std::invalid_argument("visibility_statistics: need n_seeds >= 1");

    const auto window_steps = static_cast<std::size_t>(std::llround(window_s / dt_s));
    const double bound = splitter_visibility_bound(paths.split_ratio);

    std::vector<double> occurrence;
    occurrence.reserve(static_cast<std::size_t>(n_seeds));
    std::vector<std::size_t> run_lengths;

    for (int s = 0; s < n_seeds; ++s) {
        const FieldTrace trace =
            synthesize_field(comb, duration_s, dt_s,
                             derive_stream_seed(base_seed, static_cast<std::uint64_t>(s)));
        const TwoBeamTrace beams = delayed_two_beam(trace, paths);

        const std::size_t n = beams.e1.size();
        std::size_t above = 0, total = 0, run = 0;
        for (std::size_t start = beams.overlap_begin; start + window_steps <= n;
             start += window_steps) {
            TwoBeamMoments m;
            for (std::size_t j = start; j < start + window_steps; ++j)
                m.add(beams.e1[j], beams.e2[j]);
            const double denom = std::sqrt(m.s1 * m.s2);
            const double v = denom > 0.0 ? bound * std::abs(m.s12) / denom : 0.0;
            ++total;
            if (v >= threshold) {
                ++above;
                ++run;
            } else {
                if (run > 0) run_lengths.push_back(run);
                run = 0;
            }
        }
        if (run > 0) run_lengths.push_back(run);
        if (total == 0)
            throw std::invalid_argument(
                "visibility_statistics: overlap shorter than one window");
        occurrence.push_back(static_cast<double>(above) / static_cast<double>(total));
    }

    VisibilityStats stats;
    stats.threshold = threshold;
    stats.window_s = window_s;
    stats.n_trials = n_seeds;
    const MeanStderr ms = mean_stderr(occurrence);
    stats.occurrence_probability = ms.mean;
    stats.occurrence_stderr = ms.stderr_of_mean;
    if (!run_lengths.empty()) {
        double sum = 0.0;
        for (std::size_t r : run_lengths) sum += static_cast<double>(r);
        stats.mean_duration_s = sum / static_cast<double>(run_lengths.size()) * window_s;
    }
    return stats;
}

}  // namespace fringelab
