#pragma once

#include <cstddef>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "fringelab/coherence.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/timing.hpp"

namespace fringelab {

inline constexpr const char* curve_csv_header = "delta_l_m,visibility";
inline constexpr const char* fringe_csv_header = "x_m,intensity";
inline constexpr const char* stats_csv_header = "N,occurrence_probability,mean_duration_s,stderr";
inline constexpr const char* trace_csv_header = "t_s,d1,d2,and,xor";

inline void write_curve_csv(const std::filesystem::path& path, const VisibilityCurve& curve) {
    std::ostringstream out;
    out << curve_csv_header << '\n';
    for (std::size_t i = 0; i < curve.delta_l_m.size(); ++i)
        out << format_double(curve.delta_l_m[i]) << ',' << format_double(curve.visibility[i])
            << '\n';
    write_text_file(path, out.str());
}

inline VisibilityCurve load_curve_csv(const std::filesystem::path& path) {
    const CsvTable table = read_numeric_csv(path, curve_csv_header);
    VisibilityCurve curve;
    for (const auto& row : table.rows) {
        curve.delta_l_m.push_back(row[0]);
        curve.visibility.push_back(row[1]);
    }
    return curve;
}

inline void write_fringe_csv(const std::filesystem::path& path, const FringePattern& p) {
    std::ostringstream out;
    out << fringe_csv_header << '\n';
    for (std::size_t i = 0; i < p.x_m.size(); ++i)
        out << format_double(p.x_m[i]) << ',' << format_double(p.intensity[i]) << '\n';
    write_text_file(path, out.str());
}

inline FringePattern load_fringe_csv(const std::filesystem::path& path) {
    const CsvTable table = read_numeric_csv(path, fringe_csv_header);
    FringePattern p;
    for (const auto& row : table.rows) {
        p.x_m.push_back(row[0]);
        p.intensity.push_back(row[1]);
    }
    return p;
}

// One row per mode count of a statistics sweep.
struct StatsRow {
    int n_modes = 0;
    double occurrence_probability = 0.0;
    double mean_duration_s = 0.0;
    double occurrence_stderr = 0.0;
};

inline void write_stats_csv(const std::filesystem::path& path,
                            const std::vector<StatsRow>& rows) {
    std::ostringstream out;
    out << stats_csv_header << '\n';
    for (const auto& r : rows)
        out << r.n_modes << ',' << format_double(r.occurrence_probability) << ','
            << format_double(r.mean_duration_s) << ',' << format_double(r.occurrence_stderr)
            << '\n';
    write_text_file(path, out.str());
}

inline std::vector<StatsRow> load_stats_csv(const std::filesystem::path& path) {
    const CsvTable table = read_numeric_csv(path, stats_csv_header);
    std::vector<StatsRow> rows;
    for (const auto& row : table.rows)
        rows.push_back(StatsRow{static_cast<int>(row[0]), row[1], row[2], row[3]});
    return rows;
}

inline void write_trace_csv(const std::filesystem::path& path, const LogicTrace& trace) {
    std::ostringstream out;
    out << trace_csv_header << '\n';
    for (const auto& e : trace.events)
        out << format_double(e.t_s) << ',' << int{e.d1} << ',' << int{e.d2} << ','
            << int{e.and_out} << ',' << int{e.xor_out} << '\n';
    write_text_file(path, out.str());
}

inline LogicTrace load_trace_csv(const std::filesystem::path& path) {
    const CsvTable table = read_numeric_csv(path, trace_csv_header);
    LogicTrace trace;
    for (const auto& row : table.rows) {
        const auto bit = [&](double v) {
            if (v != 0.0 && v != 1.0)
                throw CsvError(CsvError::Code::bad_row,
                               path.string() + ": logic levels must be 0 or 1");
            return v == 1.0;
        };
        trace.events.push_back(LogicEvent{row[0], bit(row[1]), bit(row[2]), bit(row[3]),
                                          bit(row[4])});
    }
    return trace;
}

}  // namespace fringelab
