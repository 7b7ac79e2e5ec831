#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/spectrum.hpp"

namespace fringelab {

inline constexpr const char* spectrum_csv_header = "wavelength_nm,power";

// Reads a wavelength/power CSV into a sampled spectrum on a frequency grid
// (nu = c/lambda), sorted ascending in frequency. The original wavelength
// values ride along so write_spectrum_csv can reproduce them exactly.
inline PowerSpectrum load_spectrum_csv(const std::filesystem::path& path) {
    const CsvTable table = read_numeric_csv(path, spectrum_csv_header);
    if (table.rows.size() < 2)
        throw CsvError(CsvError::Code::too_few_rows,
                       path.string() + ": need at least 2 samples, got " +
                           std::to_string(table.rows.size()));

    struct Sample {
        double wavelength_nm;
        double power;
    };
    std::vector<Sample> samples;
    samples.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (!(row[0] > 0.0))
            throw CsvError(CsvError::Code::negative_value,
                           path.string() + ": wavelength must be > 0, got " + format_double(row[0]));
        if (!(row[1] >= 0.0))
            throw CsvError(CsvError::Code::negative_value,
                           path.string() + ": power must be >= 0, got " + format_double(row[1]));
        samples.push_back({row[0], row[1]});
    }
    // Ascending frequency == descending wavelength.
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.wavelength_nm > b.wavelength_nm; });
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].wavelength_nm == samples[i - 1].wavelength_nm)
            throw CsvError(CsvError::Code::bad_row,
                           path.string() + ": duplicate wavelength " +
                               format_double(samples[i].wavelength_nm));

    PowerSpectrum s;
    s.kind = SpectrumKind::sampled;
    s.freq_hz.reserve(samples.size());
    s.density.reserve(samples.size());
    s.source_wavelength_nm.reserve(samples.size());
    for (const auto& smp : samples) {
        s.freq_hz.push_back(speed_of_light / (smp.wavelength_nm * 1e-9));
        s.density.push_back(smp.power);
        s.source_wavelength_nm.push_back(smp.wavelength_nm);
    }
    validate(s);
    return s;
}

// Emits a sampled spectrum in the wavelength/power format, rows ascending in
// wavelength. Uses the retained source wavelengths when present (exact
// round-trip of ingested files); otherwise converts the frequency grid.
inline void write_spectrum_csv(const std::filesystem::path& path, const PowerSpectrum& s) {
    validate(s);
    if (s.kind != SpectrumKind::sampled)
        throw std::invalid_argument(
            "write_spectrum_csv: line-list spectra must go through render_to_sampled first");
    const std::size_t n = s.freq_hz.size();
    const bool have_source = s.source_wavelength_nm.size() == n;
    std::ostringstream out;
    out << spectrum_csv_header << '\n';
    // Frequency grid is ascending, so walk it backwards for ascending lambda.
    for (std::size_t j = n; j-- > 0;) {
        const double wl_nm =
            have_source ? s.source_wavelength_nm[j] : 1e9 * speed_of_light / s.freq_hz[j];
        out << format_double(wl_nm) << ',' << format_double(s.density[j]) << '\n';
    }
    write_text_file(path, out.str());
}

}  // namespace fringelab
