#pragma once

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fringelab/coherence.hpp"
#include "fringelab/config.hpp"
#include "fringelab/constants.hpp"
#include "fringelab/emit.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/monte_carlo.hpp"
#include "fringelab/spectrum.hpp"
#include "fringelab/spectrum_io.hpp"
#include "fringelab/svg.hpp"
#include "fringelab/timing.hpp"

namespace fringelab {
namespace cli_detail {

// Console figures are trimmed to six significant digits; the CSV files keep
// the full round-trip representation.
inline std::string with_unit(double value, double scale, const char* unit) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value * scale);
    return std::string(buf) + " " + unit;
}

inline std::filesystem::path out_file(const RunConfig& cfg, const char* name) {
    return cfg.output.directory / name;
}

inline void maybe_svg(const RunConfig& cfg, const std::filesystem::path& csv_path,
                      std::span<const double> x, std::span<const double> y,
                      const std::string& x_label, const std::string& y_label) {
    if (!cfg.output.svg) return;
    std::filesystem::path p = csv_path;
    p.replace_extension(".svg");
    write_svg_chart(p, x, y, x_label, y_label);
    std::cout << "wrote " << p.string() << '\n';
}

inline void print_coherence_lengths(const CoherenceLengths& lc) {
    std::cout << "coherence length, 0.624*c/fwhm:              " << with_unit(lc.prefactored_m, 1e6, "um")
              << " (" << with_unit(lc.prefactored_m, 1e3, "mm") << ")\n";
    std::cout << "coherence length, c/fwhm (= lambda^2/dlambda): " << with_unit(lc.unprefactored_m, 1e6, "um")
              << " (" << with_unit(lc.unprefactored_m, 1e3, "mm") << ")\n";
}

struct CoherenceArgs {
    double gaussian_fwhm_nm = 0.0;
    double gaussian_fwhm_hz = 0.0;
    double lambda_nm = 660.0;
    std::string csv;
    bool comb = false;
    double dl_max_m = 0.0;  // 0: pick a sensible span per source
    int points = 512;
};

// --csv wins; otherwise the config's source.csv_path, if any.
inline std::string effective_csv(const RunConfig& cfg, const std::string& flag) {
    if (!flag.empty()) return flag;
    if (cfg.source.csv_path) return cfg.source.csv_path->string();
    return {};
}

inline void run_coherence(const RunConfig& cfg, const CoherenceArgs& a) {
    const auto curve_path = out_file(cfg, "coherence_curve.csv");
    const std::string csv = effective_csv(cfg, a.csv);
    VisibilityCurve curve;

    if (a.gaussian_fwhm_nm > 0.0 || a.gaussian_fwhm_hz > 0.0) {
        const double lambda_m = a.lambda_nm * 1e-9;
        const double fwhm_hz = a.gaussian_fwhm_hz > 0.0
                                   ? a.gaussian_fwhm_hz
                                   : speed_of_light * (a.gaussian_fwhm_nm * 1e-9) /
                                         (lambda_m * lambda_m);
        const double fwhm_nm =
            a.gaussian_fwhm_nm > 0.0
                ? a.gaussian_fwhm_nm
                : 1e9 * fwhm_hz * lambda_m * lambda_m / speed_of_light;
        std::cout << "gaussian line: fwhm = " << with_unit(fwhm_hz, 1.0, "Hz") << " ("
                  << with_unit(fwhm_nm, 1.0, "nm") << " at " << with_unit(a.lambda_nm, 1.0, "nm")
                  << ")\n";
        const CoherenceLengths lc = a.gaussian_fwhm_nm > 0.0
                                        ? coherence_length_from_wavelength(lambda_m, fwhm_nm * 1e-9)
                                        : coherence_length_gaussian(fwhm_hz);
        print_coherence_lengths(lc);
        const double dl_max = a.dl_max_m > 0.0 ? a.dl_max_m : 3.0 * lc.unprefactored_m;
        curve = visibility_curve(GaussianSource{fwhm_hz}, 0.0, dl_max, a.points);
    } else if (!csv.empty()) {
        const PowerSpectrum s = load_spectrum_csv(csv);
        const EnvelopeWidth env = envelope_linewidth(s);
        std::cout << "envelope fwhm = " << with_unit(env.fwhm_hz, 1.0, "Hz") << " ("
                  << with_unit(env.fwhm_wavelength_m, 1e9, "nm") << " at "
                  << with_unit(env.centroid_wavelength_m, 1e9, "nm") << ")\n";
        print_coherence_lengths(coherence_length_gaussian(env.fwhm_hz));
        const double lc = speed_of_light / env.fwhm_hz;
        const double dl_max = a.dl_max_m > 0.0 ? a.dl_max_m : 3.0 * lc;
        const CoherenceFunction g =
            coherence_from_spectrum(s, dl_max / speed_of_light, a.points);
        curve = visibility_curve(g);
    } else {
        const ModeComb comb = cfg.source.to_comb();
        const double spacing = mode_spacing(comb.cavity_length_m, comb.k);
        const double revival = 2.0 * comb.cavity_length_m / static_cast<double>(comb.k);
        std::cout << "mode comb: N = " << comb.n_modes << ", spacing = "
                  << with_unit(spacing, 1e-9, "GHz") << ", revival period = "
                  << with_unit(revival, 1e3, "mm") << ", first zero = "
                  << with_unit(revival / comb.n_modes, 1e3, "mm") << '\n';
        const double dl_max = a.dl_max_m > 0.0 ? a.dl_max_m : 2.5 * revival;
        const CoherenceFunction g = coherence_from_spectrum(
            comb_spectrum(comb, LineShape::lorentzian), dl_max / speed_of_light, a.points);
        curve = visibility_curve(g);
    }

    write_curve_csv(curve_path, curve);
    std::cout << "wrote " << curve_path.string() << '\n';
    maybe_svg(cfg, curve_path, curve.delta_l_m, curve.visibility, "path difference [m]",
              "visibility");
}

struct FringesArgs {
    double dl_m = 0.0;  // long-arm excess over the short arm
    double eta = 1.0;
};

inline void run_fringes(const RunConfig& cfg, const FringesArgs& a) {
    PathConfig paths = cfg.paths;
    paths.p2_m = paths.p1_m + a.dl_m;
    validate(paths);

    const double tau = paths.refractive_index * a.dl_m / speed_of_light;
    const std::complex<double> gamma =
        gamma_at_delay(comb_spectrum(cfg.source.to_comb(), LineShape::lorentzian), tau);
    const double r = paths.split_ratio;

    TwoBeamMoments m;
    m.s1 = r;
    m.s2 = 1.0 - r;
    m.s12 = std::sqrt(r * (1.0 - r)) * gamma;
    m.count = 1;
    const FringePattern pattern = fringe_pattern(cfg.geometry, m, TimeWindow{0.0, 0.0}, a.eta);

    std::cout << "predicted fringe spacing (lambda d / w): "
              << with_unit(fringe_spacing(cfg.geometry), 1e3, "mm") << '\n';
    try {
        std::cout << "measured fringe spacing:                 "
                  << with_unit(measure_fringe_spacing(pattern), 1e3, "mm") << '\n';
    } catch (const EstimationError&) {
        std::cout << "measured fringe spacing:                 no measurable fringes\n";
    }
    std::cout << "visibility: " << format_double(pattern.visibility)
              << " (splitter bound " << format_double(splitter_visibility_bound(r)) << ")\n";

    const auto path = out_file(cfg, "fringe_pattern.csv");
    write_fringe_csv(path, pattern);
    std::cout << "wrote " << path.string() << '\n';
    maybe_svg(cfg, path, pattern.x_m, pattern.intensity, "screen position [m]", "intensity");
}

struct SimulateArgs {
    bool visibility_sweep = false;
    std::vector<int> n_list{1, 2, 3, 5, 9};
    std::vector<double> delays_m{0.0, 0.01, 0.02, 0.034, 0.05, 0.1, 0.15, 0.2};
};

inline void run_simulate(const RunConfig& cfg, const SimulateArgs& a) {
    const ModeComb base = cfg.source.to_comb();
    const SimulationConfig& sim = cfg.simulation;

    if (a.visibility_sweep) {
        VisibilityCurve measured, predicted;
        const double bound = splitter_visibility_bound(cfg.paths.split_ratio);
        std::cout << "delta_l_m,mean_visibility,stderr,predicted\n";
        for (double dl : a.delays_m) {
            PathConfig paths = cfg.paths;
            paths.p2_m = paths.p1_m + dl;
            validate(paths);
            const VisibilityEstimate est =
                time_averaged_visibility(base, paths, cfg.geometry, sim.duration_s, sim.dt_s,
                                         sim.n_seeds, sim.seed);
            const double pred =
                bound * std::abs(gamma_at_delay(comb_spectrum(base, LineShape::lorentzian),
                                                est.delay_realized_s));
            measured.delta_l_m.push_back(dl);
            measured.visibility.push_back(est.mean);
            predicted.delta_l_m.push_back(dl);
            predicted.visibility.push_back(pred);
            std::cout << format_double(dl) << ',' << format_double(est.mean) << ','
                      << format_double(est.stderr_of_mean) << ',' << format_double(pred) << '\n';
        }
        const auto mpath = out_file(cfg, "visibility_measured.csv");
        const auto ppath = out_file(cfg, "visibility_predicted.csv");
        write_curve_csv(mpath, measured);
        write_curve_csv(ppath, predicted);
        std::cout << "wrote " << mpath.string() << " and " << ppath.string() << '\n';
        maybe_svg(cfg, mpath, measured.delta_l_m, measured.visibility, "path difference [m]",
                  "mean visibility");
        return;
    }

    std::vector<StatsRow> rows;
    std::cout << "N,occurrence_probability,mean_duration_s,stderr\n";
    for (int n : a.n_list) {
        ModeComb comb = base;
        comb.n_modes = n;
        comb.amplitudes.assign(static_cast<std::size_t>(n), cfg.source.amplitude);
        // Wide combs need a finer step than the configured one; halving the
        // Nyquist limit keeps the run valid without touching the config.
        double dt = sim.dt_s;
        const double dt_limit = max_field_dt(comb);
        if (!(dt < dt_limit)) {
            dt = 0.5 * dt_limit;
            std::cerr << "note: N = " << n << " needs a finer time step, using "
                      << with_unit(dt, 1e12, "ps") << " instead of "
                      << with_unit(sim.dt_s, 1e12, "ps") << '\n';
        }
        const VisibilityStats stats =
            visibility_statistics(comb, cfg.paths, cfg.geometry, sim.threshold, sim.window_s,
                                  sim.duration_s, dt, sim.n_seeds, sim.seed);
        rows.push_back(StatsRow{n, stats.occurrence_probability, stats.mean_duration_s,
                                stats.occurrence_stderr});
        std::cout << n << ',' << format_double(stats.occurrence_probability) << ','
                  << format_double(stats.mean_duration_s) << ','
                  << format_double(stats.occurrence_stderr) << '\n';
    }
    const auto path = out_file(cfg, "visibility_stats.csv");
    write_stats_csv(path, rows);
    std::cout << "wrote " << path.string() << '\n';
    if (cfg.output.svg) {
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
            xs.push_back(static_cast<double>(r.n_modes));
            ys.push_back(r.occurrence_probability);
        }
        std::filesystem::path p = path;
        p.replace_extension(".svg");
        write_svg_chart(p, xs, ys, "mode count N", "occurrence probability");
        std::cout << "wrote " << p.string() << '\n';
    }
}

struct TimingArgs {
    double dl_m = -1.0;              // < 0: keep config paths
    double refractive_index = 0.0;   // <= 0: keep config value
    bool no_interference = false;
};

inline void run_timing(const RunConfig& cfg, const TimingArgs& a) {
    RunSchedule schedule = cfg.to_schedule();
    if (a.dl_m >= 0.0) schedule.paths.p2_m = schedule.paths.p1_m + a.dl_m;
    if (a.refractive_index > 0.0) schedule.paths.refractive_index = a.refractive_index;
    validate(schedule);

    const PropagationDelays d = propagation_delays(schedule.paths);
    std::cout << "t1 = " << with_unit(d.t1_s, 1e6, "us") << ", t2 = "
              << with_unit(d.t2_s, 1e6, "us") << '\n';
    std::cout << "delta_t = n*(p2-p1)/c = " << with_unit(d.delta_t_s, 1e6, "us") << '\n';
    std::cout << "note: reports quoting ~10x larger delays for these fiber lengths are a known\n"
                 "      inconsistency; see README (known quirks). The formula above is literal.\n";

    const LogicTrace trace = simulate_run(schedule, !a.no_interference);
    if (trace.degenerate_overlap)
        std::cout << "degenerate overlap: the switch-on time is shorter than delta_t, the beams "
                     "never coexist\n";
    const auto windows = measure_delta_t(trace);
    std::cout << "and=1 windows:";
    for (double w : windows) std::cout << ' ' << with_unit(w, 1e6, "us");
    if (windows.empty()) std::cout << " none";
    std::cout << '\n';
    std::cout << "xor=1 total (interference time): "
              << with_unit(measure_interference_duration(trace), 1e6, "us") << '\n';

    const auto path = out_file(cfg, "logic_trace.csv");
    write_trace_csv(path, trace);
    std::cout << "wrote " << path.string() << '\n';
    if (cfg.output.svg && trace.events.size() >= 2) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < trace.events.size(); ++i) {
            const auto& e = trace.events[i];
            if (i > 0) {
                xs.push_back(e.t_s);
                ys.push_back(trace.events[i - 1].xor_out ? 1.0 : 0.0);
            }
            xs.push_back(e.t_s);
            ys.push_back(e.xor_out ? 1.0 : 0.0);
        }
        std::filesystem::path p = path;
        p.replace_extension(".svg");
        write_svg_chart(p, xs, ys, "time [s]", "xor gate");
        std::cout << "wrote " << p.string() << '\n';
    }
}

struct SpectrumArgs {
    std::string csv;
    int grid_points = 4096;
};

inline void run_spectrum(const RunConfig& cfg, const SpectrumArgs& a) {
    const std::string csv = effective_csv(cfg, a.csv);
    if (!csv.empty()) {
        const PowerSpectrum s = load_spectrum_csv(csv);
        std::cout << "samples: " << s.freq_hz.size() << ", frequency span "
                  << with_unit(s.freq_hz.front(), 1e-12, "THz") << " .. "
                  << with_unit(s.freq_hz.back(), 1e-12, "THz") << '\n';
        const EnvelopeWidth env = envelope_linewidth(s);
        std::cout << "envelope fwhm = " << with_unit(env.fwhm_hz, 1.0, "Hz") << " ("
                  << with_unit(env.fwhm_wavelength_m, 1e9, "nm") << " at "
                  << with_unit(env.centroid_wavelength_m, 1e9, "nm") << ")\n";
        print_coherence_lengths(coherence_length_gaussian(env.fwhm_hz));
        return;
    }

    const ModeComb comb = cfg.source.to_comb();
    const PowerSpectrum lines = comb_spectrum(comb, LineShape::lorentzian);
    std::cout << "mode,frequency_hz,power,fwhm_hz\n";
    for (std::size_t i = 0; i < lines.lines.size(); ++i)
        std::cout << i << ',' << format_double(lines.lines[i].freq_hz) << ','
                  << format_double(lines.lines[i].power) << ','
                  << format_double(lines.lines[i].fwhm_hz) << '\n';
    if (!(comb.mode_linewidth_hz > 0.0)) {
        std::cout << "mode linewidth is zero: ideal lines, nothing to render to a sampled grid\n";
        return;
    }

    const double spacing = mode_spacing(comb.cavity_length_m, comb.k);
    const double pad = std::max(4.0 * comb.mode_linewidth_hz, 0.5 * spacing);
    const auto grid = linspace(lines.lines.front().freq_hz - pad,
                               lines.lines.back().freq_hz + pad,
                               static_cast<std::size_t>(a.grid_points));
    const PowerSpectrum sampled = render_to_sampled(lines, grid);
    const auto path = out_file(cfg, "spectrum.csv");
    write_spectrum_csv(path, sampled);
    std::cout << "wrote " << path.string() << '\n';
    maybe_svg(cfg, path, sampled.freq_hz, sampled.density, "frequency [Hz]", "power density");
}

}  // namespace cli_detail

// Command-line entry point. Exit codes: 0 success, 1 runtime failure,
// 2 usage error.
inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"multi-mode laser coherence and double-slit interference toolkit"};
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
    std::uint64_t seed_override = 0;
    auto* seed_opt = app.add_option("--seed", seed_override, "base random seed")
                         ->envname("FRINGELAB_SEED");
    std::string out_override;
    app.add_option("--out", out_override, "output directory (default: out)");
    bool svg = false;
    app.add_flag("--svg", svg, "also render SVG charts next to the CSV outputs");
    bool print_conf = false;
    app.add_flag("--print-config", print_conf, "dump the effective configuration and exit");

    auto* coh = app.add_subcommand("coherence",
                                   "coherence function, coherence lengths, visibility curve");
    cli_detail::CoherenceArgs coh_args;
    coh->add_option("--gaussian-fwhm-nm", coh_args.gaussian_fwhm_nm,
                    "gaussian line FWHM in wavelength terms [nm]");
    coh->add_option("--gaussian-fwhm-hz", coh_args.gaussian_fwhm_hz, "gaussian line FWHM [Hz]");
    coh->add_option("--lambda-nm", coh_args.lambda_nm, "center wavelength [nm]")->capture_default_str();
    coh->add_option("--csv", coh_args.csv, "measured spectrum CSV (wavelength_nm,power)")
        ->check(CLI::ExistingFile);
    coh->add_flag("--comb", coh_args.comb, "use the configured mode comb");
    coh->add_option("--dl-max-m", coh_args.dl_max_m, "path-difference range end [m]");
    coh->add_option("--points", coh_args.points, "curve points")->capture_default_str();

    auto* fri = app.add_subcommand("fringes", "time-averaged double-slit pattern");
    cli_detail::FringesArgs fri_args;
    fri->add_option("--dl-m", fri_args.dl_m, "long-arm excess path [m]")->capture_default_str();
    fri->add_option("--eta", fri_args.eta, "polarization overlap factor in [0,1]")->capture_default_str();

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo visibility statistics");
    cli_detail::SimulateArgs sim_args;
    sim->add_flag("--visibility-sweep", sim_args.visibility_sweep,
                  "sweep mean visibility over path differences instead of mode counts");
    sim->add_option("--n-list", sim_args.n_list, "mode counts for the statistics table")
        ->delimiter(',');
    sim->add_option("--delays-m", sim_args.delays_m, "path differences for the sweep [m]")
        ->delimiter(',');

    auto* tim = app.add_subcommand("timing", "switch/detector logic trace and delta_t");
    cli_detail::TimingArgs tim_args;
    tim->add_option("--dl", tim_args.dl_m, "path-length difference p2-p1 [m]");
    tim->add_option("--n", tim_args.refractive_index, "fiber refractive index");
    tim->add_flag("--no-interference", tim_args.no_interference,
                  "screen stays uniform during the two-beam phase");

    auto* spe = app.add_subcommand("spectrum", "synthesize or inspect power spectra");
    cli_detail::SpectrumArgs spe_args;
    spe->add_option("--csv", spe_args.csv, "measured spectrum CSV to inspect")
        ->check(CLI::ExistingFile);
    spe->add_option("--grid-points", spe_args.grid_points, "rendering grid size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config(config_path);
        if (seed_opt->count() > 0) cfg.simulation.seed = seed_override;
        if (!out_override.empty()) cfg.output.directory = out_override;
        if (svg) cfg.output.svg = true;

        if (print_conf) {
            std::cout << print_config(cfg);
            return 0;
        }
        if (*coh)
            cli_detail::run_coherence(cfg, coh_args);
        else if (*fri)
            cli_detail::run_fringes(cfg, fri_args);
        else if (*sim)
            cli_detail::run_simulate(cfg, sim_args);
        else if (*tim)
            cli_detail::run_timing(cfg, tim_args);
        else if (*spe)
            cli_detail::run_spectrum(cfg, spe_args);
        else {
            std::cout << app.help();
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace fringelab
