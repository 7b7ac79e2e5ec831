#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fringelab/coherence.hpp"
#include "fringelab/emit.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/svg.hpp"
#include "fringelab/timing.hpp"

using namespace fringelab;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    const fs::path dir = fs::temp_directory_path() / "fringelab_emit";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("visibility curves round-trip through CSV", "[emit]") {
    VisibilityCurve c;
    c.delta_l_m = {0.0, 0.0123456789012345, 0.1, 1.0 / 3.0};
    c.visibility = {1.0, 0.5, 2.2250738585072014e-308, 0.25};
    const fs::path p = test_dir() / "curve.csv";
    write_curve_csv(p.string(), c);
    VisibilityCurve back = load_curve_csv(p.string());
    REQUIRE(back.delta_l_m.size() == c.delta_l_m.size());
    for (std::size_t i = 0; i < c.delta_l_m.size(); ++i) {
        CHECK(back.delta_l_m[i] == c.delta_l_m[i]);
        CHECK(back.visibility[i] == c.visibility[i]);
    }
    const fs::path q = test_dir() / "curve2.csv";
    write_curve_csv(q.string(), back);
    CHECK(slurp(p) == slurp(q));
}

TEST_CASE("fringe patterns round-trip through CSV", "[emit]") {
    FringePattern f;
    f.x_m = {-1e-3, 0.0, 1e-3};
    f.intensity = {0.25, 1.0, 0.125};
    const fs::path p = test_dir() / "fringe.csv";
    write_fringe_csv(p.string(), f);
    FringePattern back = load_fringe_csv(p.string());
    REQUIRE(back.x_m.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.x_m[i] == f.x_m[i]);
        CHECK(back.intensity[i] == f.intensity[i]);
    }
}

TEST_CASE("statistics tables round-trip through CSV", "[emit]") {
    std::vector<StatsRow> rows = {
        {1, 1.0, 2.5e-7, 0.0},
        {5, 0.289, 5.75e-9, 0.003},
        {9, 0.105, 2.125e-9, 0.0015},
    };
    const fs::path p = test_dir() / "stats.csv";
    write_stats_csv(p.string(), rows);
    std::vector<StatsRow> back = load_stats_csv(p.string());
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].n_modes == rows[i].n_modes);
        CHECK(back[i].occurrence_probability == rows[i].occurrence_probability);
        CHECK(back[i].mean_duration_s == rows[i].mean_duration_s);
        CHECK(back[i].occurrence_stderr == rows[i].occurrence_stderr);
    }
}

TEST_CASE("logic traces round-trip through CSV", "[emit]") {
    LogicTrace t;
    t.events = {
        {-1.0, false, false, false, false},
        {0.0, true, true, true, false},
        {2.9374e-6, true, false, false, true},
        {1e-5, false, false, false, false},
    };
    const fs::path p = test_dir() / "trace.csv";
    write_trace_csv(p.string(), t);
    LogicTrace back = load_trace_csv(p.string());
    REQUIRE(back.events.size() == t.events.size());
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        CHECK(back.events[i].t_s == t.events[i].t_s);
        CHECK(back.events[i].d1 == t.events[i].d1);
        CHECK(back.events[i].d2 == t.events[i].d2);
        CHECK(back.events[i].and_out == t.events[i].and_out);
        CHECK(back.events[i].xor_out == t.events[i].xor_out);
    }
    SECTION("detector columns must be bits") {
        std::ofstream out(test_dir() / "badtrace.csv", std::ios::binary);
        out << "t_s,d1,d2,and,xor\n0,0.5,0,0,0\n1,0,0,0,0\n";
        out.close();
        try {
            load_trace_csv((test_dir() / "badtrace.csv").string());
            FAIL("expected CsvError");
        } catch (const CsvError& e) {
            CHECK(e.code() == CsvError::Code::bad_row);
        }
    }
}

TEST_CASE("chart writer emits a self-contained svg", "[emit]") {
    const fs::path p = test_dir() / "chart.svg";
    std::vector<double> x = {0.0, 1.0, 2.0, 3.0};
    std::vector<double> y = {0.0, 1.0, 0.5, 0.75};
    write_svg_chart(p.string(), x, y, "delay", "visibility");
    const std::string text = slurp(p);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("polyline") != std::string::npos);
    CHECK(text.find("delay") != std::string::npos);
    const std::vector<double> short_y = {0.0, 1.0};
    CHECK_THROWS_AS(write_svg_chart(p.string(), x, short_y, "a", "b"),
                    std::invalid_argument);
}

TEST_CASE("text writer creates parent directories", "[emit]") {
    const fs::path p = test_dir() / "nested" / "deeper" / "note.csv";
    fs::remove_all(test_dir() / "nested");
    write_text_file(p.string(), "a,b\n1,2\n");
    CHECK(slurp(p) == "a,b\n1,2\n");
}
