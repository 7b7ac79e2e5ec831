#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fringelab/coherence.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/monte_carlo.hpp"
#include "fringelab/spectrum.hpp"

using namespace fringelab;
using Catch::Approx;

namespace {

DoubleSlitGeometry test_geometry() {
    DoubleSlitGeometry g;
    g.screen_samples = 512;
    return g;
}

}  // namespace

TEST_CASE("balanced arms at zero delay reach the splitter bound", "[monte_carlo]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 3, 1e8);
    PathConfig paths;
    paths.split_ratio = 0.4;
    VisibilityEstimate v = time_averaged_visibility(comb, paths, test_geometry(),
                                                    2e-7, 2e-11, 4, 77);
    CHECK(v.mean == Approx(splitter_visibility_bound(0.4)).margin(0.01));
    CHECK(v.n_seeds == 4);
    CHECK(v.delay_exact_s == 0.0);
    CHECK(v.delay_realized_s == 0.0);
}

TEST_CASE("a quarter-period path difference lowers the contrast", "[monte_carlo]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 3, 1e8);
    PathConfig paths;
    paths.split_ratio = 0.5;
    paths.p2_m = 0.04;
    VisibilityEstimate v = time_averaged_visibility(comb, paths, test_geometry(),
                                                    2e-6, 2e-11, 16, 5);
    PowerSpectrum s = comb_spectrum(comb, LineShape::lorentzian);
    const double predicted = std::abs(gamma_at_delay(s, v.delay_realized_s));
    CHECK(v.mean == Approx(predicted).margin(0.05));
    CHECK(v.mean < 0.5);
    CHECK(v.stderr_of_mean < 0.05);
}

TEST_CASE("estimates are reproducible and seed-sensitive", "[monte_carlo]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 2, 1e8);
    PathConfig paths;
    paths.p2_m = 0.02;
    DoubleSlitGeometry geom = test_geometry();
    VisibilityEstimate a = time_averaged_visibility(comb, paths, geom, 1e-7, 2e-11, 3, 9);
    VisibilityEstimate b = time_averaged_visibility(comb, paths, geom, 1e-7, 2e-11, 3, 9);
    VisibilityEstimate c = time_averaged_visibility(comb, paths, geom, 1e-7, 2e-11, 3, 10);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_of_mean == b.stderr_of_mean);
    CHECK(a.mean != c.mean);
}

TEST_CASE("visibility statistics exact limits", "[monte_carlo]") {
    DoubleSlitGeometry geom = test_geometry();
    SECTION("one noiseless mode never drops below threshold") {
        ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 1, 0.0);
        PathConfig paths;
        paths.p2_m = 0.03;
        paths.split_ratio = 0.4;
        VisibilityStats st = visibility_statistics(comb, paths, geom, 0.5, 1e-9,
                                                   2e-7, 2e-11, 8, 3);
        CHECK(st.occurrence_probability == 1.0);
        CHECK(st.occurrence_stderr == 0.0);
        CHECK(st.mean_duration_s > 0.0);
    }
    SECTION("a threshold above the splitter bound is never crossed") {
        ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 3, 1e8);
        PathConfig paths;
        paths.p2_m = 0.03;
        paths.split_ratio = 0.4;
        VisibilityStats st = visibility_statistics(comb, paths, geom, 0.99, 1e-9,
                                                   2e-7, 2e-11, 8, 3);
        CHECK(st.occurrence_probability == 0.0);
        CHECK(st.mean_duration_s == 0.0);
    }
}

TEST_CASE("visibility statistics bookkeeping", "[monte_carlo]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 2, 1e8);
    PathConfig paths;
    paths.p2_m = 0.05;
    DoubleSlitGeometry geom = test_geometry();
    VisibilityStats st = visibility_statistics(comb, paths, geom, 0.5, 1e-9,
                                               4e-7, 2e-11, 6, 21);
    CHECK(st.threshold == 0.5);
    CHECK(st.window_s == 1e-9);
    CHECK(st.occurrence_probability >= 0.0);
    CHECK(st.occurrence_probability <= 1.0);
    CHECK(st.n_trials > 0);
    VisibilityStats again = visibility_statistics(comb, paths, geom, 0.5, 1e-9,
                                                  4e-7, 2e-11, 6, 21);
    CHECK(again.occurrence_probability == st.occurrence_probability);
    CHECK(again.mean_duration_s == st.mean_duration_s);
}

TEST_CASE("monte carlo rejects unusable parameters", "[monte_carlo]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 2, 1e8);
    PathConfig paths;
    DoubleSlitGeometry geom = test_geometry();
    CHECK_THROWS_AS(time_averaged_visibility(comb, paths, geom, 2e-7, 2e-11, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(visibility_statistics(comb, paths, geom, 0.0, 1e-9, 2e-7, 2e-11, 4, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(visibility_statistics(comb, paths, geom, 1.0, 1e-9, 2e-7, 2e-11, 4, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(visibility_statistics(comb, paths, geom, 0.5, 1e-11, 2e-7, 2e-11, 4, 1),
                    std::invalid_argument);
}
