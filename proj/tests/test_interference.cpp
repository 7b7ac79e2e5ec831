#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fringelab/interference.hpp"
#include "fringelab/numeric.hpp"

using namespace fringelab;
using Catch::Approx;

namespace {

double integrate(const std::vector<double>& x, const std::vector<double>& y) {
    return trapezoid(x, y);
}

}  // namespace

TEST_CASE("fringe spacing", "[interference]") {
    DoubleSlitGeometry geom;
    SECTION("experiment geometry gives 1.6632 mm") {
        CHECK(fringe_spacing(geom) == Approx(1.6632e-3).epsilon(1e-9));
        CHECK(fringe_spacing(geom) > 1.62e-3);
        CHECK(fringe_spacing(geom) < 1.72e-3);
    }
    SECTION("doubling the slit spacing halves the fringe spacing") {
        DoubleSlitGeometry wide = geom;
        wide.slit_spacing_m *= 2.0;
        CHECK(fringe_spacing(wide) == Approx(0.5 * fringe_spacing(geom)).epsilon(1e-15));
    }
    SECTION("round numbers") {
        DoubleSlitGeometry g;
        g.wavelength_m = 500e-9;
        g.screen_distance_m = 1.0;
        g.slit_spacing_m = 1e-3;
        g.slit_width_m = 1e-5;
        CHECK(fringe_spacing(g) == Approx(0.5e-3).epsilon(1e-12));
    }
    SECTION("central lobe half width") {
        CHECK(central_lobe_halfwidth(geom) ==
              Approx(geom.wavelength_m * geom.screen_distance_m / (2.0 * geom.slit_width_m))
                  .epsilon(1e-15));
    }
}

TEST_CASE("pattern visibility tracks the beam balance", "[interference]") {
    DoubleSlitGeometry geom;
    geom.screen_samples = 4096;
    SECTION("equal beams give full contrast") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{M_SQRT1_2, 0.0},
                                         std::complex<double>{M_SQRT1_2, 0.0});
        CHECK(p.visibility > 0.9999);
        CHECK(p.visibility <= 1.0);
    }
    SECTION("a 40:60 split caps the contrast at 0.98") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{std::sqrt(0.4), 0.0},
                                         std::complex<double>{std::sqrt(0.6), 0.0});
        CHECK(p.visibility == Approx(2.0 * std::sqrt(0.24)).margin(5e-4));
        CHECK(splitter_visibility_bound(0.4) == Approx(0.9798).epsilon(1e-4));
    }
    SECTION("one dark arm leaves no fringes") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                         std::complex<double>{0.0, 0.0});
        CHECK(p.visibility < 0.01);
    }
    SECTION("a relative phase moves fringes without changing contrast") {
        FringePattern a = fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                         std::complex<double>{1.0, 0.0});
        FringePattern b = fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                         std::polar(1.0, 1.1));
        CHECK(b.visibility == Approx(a.visibility).margin(1e-3));
    }
    SECTION("mutual coherence scales the contrast") {
        TwoBeamMoments m;
        m.s1 = 0.5;
        m.s2 = 0.5;
        m.s12 = std::complex<double>{0.25, 0.0};
        m.count = 1;
        FringePattern p = fringe_pattern(geom, m, TimeWindow{0.0, 1.0});
        CHECK(p.visibility == Approx(0.5).margin(1e-3));
    }
    SECTION("detector efficiency scales the contrast") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                         std::complex<double>{1.0, 0.0}, 0.25);
        CHECK(p.visibility == Approx(0.25).margin(1e-3));
        CHECK_THROWS_AS(fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                       std::complex<double>{1.0, 0.0}, 1.5),
                        std::invalid_argument);
    }
}

TEST_CASE("splitter visibility bound", "[interference]") {
    CHECK(splitter_visibility_bound(0.5) == 1.0);
    CHECK(splitter_visibility_bound(0.4) == Approx(2.0 * std::sqrt(0.24)).epsilon(1e-15));
    CHECK(splitter_visibility_bound(0.1) ==
          Approx(splitter_visibility_bound(0.9)).epsilon(1e-15));
    CHECK_THROWS_AS(splitter_visibility_bound(0.0), std::invalid_argument);
    CHECK_THROWS_AS(splitter_visibility_bound(1.0), std::invalid_argument);
}

TEST_CASE("interference conserves energy over whole fringes", "[interference]") {
    DoubleSlitGeometry geom;
    geom.screen_samples = 4097;
    geom.screen_extent_m = 8.0 * fringe_spacing(geom);
    const std::complex<double> e1{std::sqrt(0.4), 0.0};
    const std::complex<double> e2{std::sqrt(0.6), 0.2};
    FringePattern both = fringe_pattern(geom, e1, e2);
    FringePattern only1 = fringe_pattern(geom, e1, std::complex<double>{0.0, 0.0});
    FringePattern only2 = fringe_pattern(geom, std::complex<double>{0.0, 0.0}, e2);
    const double sum = integrate(both.x_m, both.intensity);
    const double parts = integrate(only1.x_m, only1.intensity) +
                         integrate(only2.x_m, only2.intensity);
    CHECK(sum == Approx(parts).epsilon(5e-3));
}

TEST_CASE("fringe spacing measured off the pattern", "[interference]") {
    DoubleSlitGeometry geom;
    geom.screen_samples = 4096;
    const double expected = fringe_spacing(geom);
    const double step = geom.screen_extent_m / (geom.screen_samples - 1);
    SECTION("full contrast pattern") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                         std::complex<double>{1.0, 0.0});
        CHECK(std::abs(measure_fringe_spacing(p) - expected) < step);
    }
    SECTION("random balanced patterns stay within one grid step") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> ratio(0.2, 0.8);
        std::uniform_real_distribution<double> phase(0.0, two_pi);
        std::uniform_real_distribution<double> eff(0.5, 1.0);
        for (int i = 0; i < 25; ++i) {
            const double r = ratio(rng);
            FringePattern p = fringe_pattern(
                geom, std::complex<double>{std::sqrt(r), 0.0},
                std::polar(std::sqrt(1.0 - r), phase(rng)), eff(rng));
            REQUIRE(p.visibility > 0.2);
            CHECK(std::abs(measure_fringe_spacing(p) - expected) < step);
        }
    }
    SECTION("a dark screen has no fringes to measure") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{0.0, 0.0},
                                         std::complex<double>{0.0, 0.0});
        CHECK_THROWS_AS(measure_fringe_spacing(p), EstimationError);
    }
    SECTION("a single-beam pattern has too few peaks") {
        FringePattern p = fringe_pattern(geom, std::complex<double>{1.0, 0.0},
                                         std::complex<double>{0.0, 0.0});
        CHECK_THROWS_AS(measure_fringe_spacing(p), EstimationError);
    }
}

TEST_CASE("two-beam moments accumulate and merge", "[interference]") {
    std::vector<std::complex<double>> a = {{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}};
    std::vector<std::complex<double>> b = {{0.2, -0.1}, {0.9, 0.3}, {-0.4, 0.0}};
    TwoBeamMoments whole;
    for (std::size_t i = 0; i < a.size(); ++i) whole.add(a[i], b[i]);
    TwoBeamMoments first, second;
    first.add(a[0], b[0]);
    second.add(a[1], b[1]);
    second.add(a[2], b[2]);
    TwoBeamMoments merged = first;
    merged.merge(second);
    CHECK(merged.count == whole.count);
    CHECK(merged.s1 == Approx(whole.s1).epsilon(1e-12));
    CHECK(merged.s2 == Approx(whole.s2).epsilon(1e-12));
    CHECK(std::abs(merged.s12 - whole.s12) < 1e-12);
}

TEST_CASE("geometry and path validation", "[interference]") {
    SECTION("defaults are valid") {
        CHECK_NOTHROW(validate(DoubleSlitGeometry{}));
        CHECK_NOTHROW(validate(PathConfig{}));
    }
    SECTION("slit width must stay below the slit spacing") {
        DoubleSlitGeometry g;
        g.slit_width_m = g.slit_spacing_m;
        CHECK_THROWS_AS(validate(g), std::invalid_argument);
    }
    SECTION("screen must sit in the far field") {
        DoubleSlitGeometry g;
        g.screen_distance_m = 50.0 * g.slit_spacing_m;
        CHECK_THROWS_AS(validate(g), std::invalid_argument);
    }
    SECTION("sample count floor") {
        DoubleSlitGeometry g;
        g.screen_samples = 8;
        CHECK_THROWS_AS(validate(g), std::invalid_argument);
    }
    SECTION("paths must be ordered and physical") {
        PathConfig p;
        p.p1_m = 10.0;
        p.p2_m = 5.0;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
        p = PathConfig{};
        p.refractive_index = 0.5;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
        p = PathConfig{};
        p.split_ratio = 0.0;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }
}
