#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "fringelab/constants.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/spectrum.hpp"
#include "fringelab/timing.hpp"

namespace fringelab {

// Laser source description. Either a parametric mode comb (the default) or
// a measured spectrum CSV; the comb parameters stay available either way for
// operations that need a time-domain source.
struct SourceConfig {
    std::optional<std::filesystem::path> csv_path;
    double center_wavelength_m = 660e-9;
    double cavity_length_m = 0.05;
    int k = 1;
    int n_modes = 5;
    double mode_linewidth_hz = 1e8;
    double amplitude = 1.0;  // uniform per-mode power

    ModeComb to_comb() const {
        return make_uniform_comb(speed_of_light / center_wavelength_m, cavity_length_m, k,
                                 n_modes, mode_linewidth_hz, amplitude);
    }

    bool operator==(const SourceConfig&) const = default;
};

struct ScheduleConfig {
    double t_on_s = 0.0;
    double t_off_s = 1e-5;
    double t0_s = 0.0;

    bool operator==(const ScheduleConfig&) const = default;
};

struct SimulationConfig {
    double duration_s = 2e-5;
    double dt_s = 2.5e-11;
    int n_seeds = 16;
    std::uint64_t seed = 1;
    double window_s = 1e-6;
    double threshold = 0.5;

    bool operator==(const SimulationConfig&) const = default;
};

struct OutputConfig {
    std::filesystem::path directory = "out";
    bool svg = false;

    bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
    SourceConfig source;
    DoubleSlitGeometry geometry;
    PathConfig paths{2.0, 602.0, 1.4677, 0.4};
    ScheduleConfig schedule;
    SimulationConfig simulation;
    OutputConfig output;

    RunSchedule to_schedule() const {
        return RunSchedule{schedule.t_on_s, schedule.t_off_s, schedule.t0_s, paths};
    }

    bool operator==(const RunConfig&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double config_double(const std::string& key, std::string_view value) {
    double out;
    if (!parse_double(value, out))
        throw ConfigError(key, key + " expects a real number, got '" + std::string(value) + "'");
    return out;
}

inline int config_int(const std::string& key, std::string_view value) {
    const double v = config_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(key, key + " expects an integer, got '" + std::string(value) + "'");
    return i;
}

inline std::uint64_t config_u64(const std::string& key, std::string_view value) {
    const double v = config_double(key, value);
    if (v < 0.0 || static_cast<double>(static_cast<std::uint64_t>(v)) != v)
        throw ConfigError(key,
                          key + " expects a nonnegative integer, got '" + std::string(value) + "'");
    return static_cast<std::uint64_t>(v);
}

inline bool config_bool(const std::string& key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(key, key + " expects true/false, got '" + std::string(value) + "'");
}

}  // namespace detail

// Flat INI-style config: [section] headers, key = value lines, full-line
// comments starting with '#' or ';'. Unknown sections or keys are errors;
// omitted keys keep their defaults. All units are SI, spelled out in the key
// suffix. Relative csv_path entries resolve against base_dir.
inline RunConfig parse_config_text(const std::string& text,
                                   const std::filesystem::path& base_dir = ".") {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("", "line " + std::to_string(line_no) + ": unterminated section header");
            section = std::string(detail::trim(line.substr(1, line.size() - 2)));
            if (section != "source" && section != "geometry" && section != "paths" &&
                section != "schedule" && section != "simulation" && section != "output")
                throw ConfigError(section, "unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = std::string(detail::trim(line.substr(0, eq)));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError(key, "key '" + key + "' appears before any [section]");
        const std::string qual = section + "." + key;

        if (section == "source") {
            if (key == "csv_path") {
                std::filesystem::path p{std::string(value)};
                if (p.is_relative()) p = (base_dir / p).lexically_normal();
                cfg.source.csv_path = p;
            } else if (key == "center_wavelength_m")
                cfg.source.center_wavelength_m = detail::config_double(qual, value);
            else if (key == "cavity_length_m")
                cfg.source.cavity_length_m = detail::config_double(qual, value);
            else if (key == "k")
                cfg.source.k = detail::config_int(qual, value);
            else if (key == "n_modes")
                cfg.source.n_modes = detail::config_int(qual, value);
            else if (key == "mode_linewidth_hz")
                cfg.source.mode_linewidth_hz = detail::config_double(qual, value);
            else if (key == "amplitude")
                cfg.source.amplitude = detail::config_double(qual, value);
            else
                throw ConfigError(qual, "unknown key '" + qual + "'");
        } else if (section == "geometry") {
            if (key == "wavelength_m")
                cfg.geometry.wavelength_m = detail::config_double(qual, value);
            else if (key == "slit_spacing_m")
                cfg.geometry.slit_spacing_m = detail::config_double(qual, value);
            else if (key == "slit_width_m")
                cfg.geometry.slit_width_m = detail::config_double(qual, value);
            else if (key == "screen_distance_m")
                cfg.geometry.screen_distance_m = detail::config_double(qual, value);
            else if (key == "screen_extent_m")
                cfg.geometry.screen_extent_m = detail::config_double(qual, value);
            else if (key == "screen_samples")
                cfg.geometry.screen_samples = detail::config_int(qual, value);
            else
                throw ConfigError(qual, "unknown key '" + qual + "'");
        } else if (section == "paths") {
            if (key == "p1_m")
                cfg.paths.p1_m = detail::config_double(qual, value);
            else if (key == "p2_m")
                cfg.paths.p2_m = detail::config_double(qual, value);
            else if (key == "refractive_index")
                cfg.paths.refractive_index = detail::config_double(qual, value);
            else if (key == "split_ratio")
                cfg.paths.split_ratio = detail::config_double(qual, value);
            else
                throw ConfigError(qual, "unknown key '" + qual + "'");
        } else if (section == "schedule") {
            if (key == "t_on_s")
                cfg.schedule.t_on_s = detail::config_double(qual, value);
            else if (key == "t_off_s")
                cfg.schedule.t_off_s = detail::config_double(qual, value);
            else if (key == "t0_s")
                cfg.schedule.t0_s = detail::config_double(qual, value);
            else
                throw ConfigError(qual, "unknown key '" + qual + "'");
        } else if (section == "simulation") {
            if (key == "duration_s")
                cfg.simulation.duration_s = detail::config_double(qual, value);
            else if (key == "dt_s")
                cfg.simulation.dt_s = detail::config_double(qual, value);
            else if (key == "n_seeds")
                cfg.simulation.n_seeds = detail::config_int(qual, value);
            else if (key == "seed")
                cfg.simulation.seed = detail::config_u64(qual, value);
            else if (key == "window_s")
                cfg.simulation.window_s = detail::config_double(qual, value);
            else if (key == "threshold")
                cfg.simulation.threshold = detail::config_double(qual, value);
            else
                throw ConfigError(qual, "unknown key '" + qual + "'");
        } else {  // output
            if (key == "directory")
                cfg.output.directory = std::filesystem::path{std::string(value)};
            else if (key == "svg")
                cfg.output.svg = detail::config_bool(qual, value);
            else
                throw ConfigError(qual, "unknown key '" + qual + "'");
        }
    }

    // Domain invariants, reported against the owning section.
    try {
        validate(cfg.source.to_comb());
    } catch (const std::invalid_argument& e) {
        throw ConfigError("source", std::string("source: ") + e.what());
    }
    try {
        validate(cfg.geometry);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("geometry", std::string("geometry: ") + e.what());
    }
    try {
        validate(cfg.to_schedule());  // covers paths and schedule
    } catch (const std::invalid_argument& e) {
        throw ConfigError("schedule", std::string("schedule/paths: ") + e.what());
    }
    if (!(cfg.simulation.duration_s > 0.0))
        throw ConfigError("simulation.duration_s", "simulation.duration_s must be > 0");
    if (!(cfg.simulation.dt_s > 0.0))
        throw ConfigError("simulation.dt_s", "simulation.dt_s must be > 0");
    if (cfg.simulation.n_seeds < 1)
        throw ConfigError("simulation.n_seeds", "simulation.n_seeds must be >= 1");
    if (!(cfg.simulation.window_s > 0.0))
        throw ConfigError("simulation.window_s", "simulation.window_s must be > 0");
    if (!(cfg.simulation.threshold > 0.0 && cfg.simulation.threshold < 1.0))
        throw ConfigError("simulation.threshold",
                          "simulation.threshold must lie strictly between 0 and 1");
    if (cfg.source.csv_path && !std::filesystem::exists(*cfg.source.csv_path))
        throw ConfigError("source.csv_path",
                          "source.csv_path does not exist: " + cfg.source.csv_path->string());
    return cfg;
}

inline RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.has_parent_path() ? path.parent_path()
                                                               : std::filesystem::path("."));
}

// Canonical dump with every key present; re-parsing it reproduces the same
// RunConfig value.
inline std::string print_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[source]\n";
    if (cfg.source.csv_path) out << "csv_path = " << cfg.source.csv_path->string() << '\n';
    out << "center_wavelength_m = " << format_double(cfg.source.center_wavelength_m) << '\n';
    out << "cavity_length_m = " << format_double(cfg.source.cavity_length_m) << '\n';
    out << "k = " << cfg.source.k << '\n';
    out << "n_modes = " << cfg.source.n_modes << '\n';
    out << "mode_linewidth_hz = " << format_double(cfg.source.mode_linewidth_hz) << '\n';
    out << "amplitude = " << format_double(cfg.source.amplitude) << '\n';
    out << "\n[geometry]\n";
    out << "wavelength_m = " << format_double(cfg.geometry.wavelength_m) << '\n';
    out << "slit_spacing_m = " << format_double(cfg.geometry.slit_spacing_m) << '\n';
    out << "slit_width_m = " << format_double(cfg.geometry.slit_width_m) << '\n';
    out << "screen_distance_m = " << format_double(cfg.geometry.screen_distance_m) << '\n';
    out << "screen_extent_m = " << format_double(cfg.geometry.screen_extent_m) << '\n';
    out << "screen_samples = " << cfg.geometry.screen_samples << '\n';
    out << "\n[paths]\n";
    out << "p1_m = " << format_double(cfg.paths.p1_m) << '\n';
    out << "p2_m = " << format_double(cfg.paths.p2_m) << '\n';
    out << "refractive_index = " << format_double(cfg.paths.refractive_index) << '\n';
    out << "split_ratio = " << format_double(cfg.paths.split_ratio) << '\n';
    out << "\n[schedule]\n";
    out << "t_on_s = " << format_double(cfg.schedule.t_on_s) << '\n';
    out << "t_off_s = " << format_double(cfg.schedule.t_off_s) << '\n';
    out << "t0_s = " << format_double(cfg.schedule.t0_s) << '\n';
    out << "\n[simulation]\n";
    out << "duration_s = " << format_double(cfg.simulation.duration_s) << '\n';
    out << "dt_s = " << format_double(cfg.simulation.dt_s) << '\n';
    out << "n_seeds = " << cfg.simulation.n_seeds << '\n';
    out << "seed = " << cfg.simulation.seed << '\n';
    out << "window_s = " << format_double(cfg.simulation.window_s) << '\n';
    out << "threshold = " << format_double(cfg.simulation.threshold) << '\n';
    out << "\n[output]\n";
    out << "directory = " << cfg.output.directory.string() << '\n';
    out << "svg = " << (cfg.output.svg ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace fringelab
