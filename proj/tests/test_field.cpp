#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "fringelab/constants.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/field.hpp"
#include "fringelab/rng.hpp"
#include "fringelab/spectrum.hpp"

using namespace fringelab;
using Catch::Approx;

TEST_CASE("field synthesis is deterministic in the seed", "[field]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 3, 1e8);
    FieldTrace a = synthesize_field(comb, 2e-8, 2e-11, 42);
    FieldTrace b = synthesize_field(comb, 2e-8, 2e-11, 42);
    FieldTrace c = synthesize_field(comb, 2e-8, 2e-11, 43);
    REQUIRE(a.samples.size() == b.samples.size());
    bool identical = true;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        if (a.samples[i] != b.samples[i]) identical = false;
    }
    CHECK(identical);
    bool differs = false;
    for (std::size_t i = 0; i < std::min(a.samples.size(), c.samples.size()); ++i) {
        if (a.samples[i] != c.samples[i]) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("single-mode fields keep constant modulus", "[field]") {
    SECTION("zero linewidth") {
        ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 1, 0.0, 0.81);
        FieldTrace t = synthesize_field(comb, 1e-9, 1e-12, 7);
        for (const auto& s : t.samples) {
            CHECK(std::abs(std::abs(s) - 0.9) < 1e-12);
        }
    }
    SECTION("phase noise does not touch the modulus") {
        ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 1, 1e9, 1.0);
        FieldTrace t = synthesize_field(comb, 1e-9, 1e-12, 7);
        for (const auto& s : t.samples) {
            CHECK(std::abs(std::abs(s) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("sampling must resolve the comb span", "[field]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 9);
    const double limit = max_field_dt(comb);
    CHECK(limit == Approx(1.0 / (2.0 * 8.0 * mode_spacing(0.05, 1))).epsilon(1e-15));
    CHECK_THROWS_AS(synthesize_field(comb, 1e-8, 1.05 * limit, 1), std::invalid_argument);
    CHECK_NOTHROW(synthesize_field(comb, 1e-8, 0.95 * limit, 1));
    SECTION("a single mode has no beat to resolve") {
        ModeComb one = make_uniform_comb(4.54231e14, 0.05, 1, 1);
        CHECK(std::isinf(max_field_dt(one)));
        CHECK_NOTHROW(synthesize_field(one, 1e-6, 1e-8, 1));
    }
    SECTION("traces need at least ten samples") {
        CHECK_THROWS_AS(synthesize_field(comb, 5e-11, 2e-11, 1), std::invalid_argument);
    }
}

TEST_CASE("ensemble periodogram recovers the mode weights", "[field]") {
    ModeComb comb = make_uniform_comb(1e12, 0.075, 1, 3, 2e7);
    comb.amplitudes = {1.0, 2.0, 0.5};
    const double spacing = mode_spacing(0.075, 1);
    const double dt = 5e-11;
    const double duration = 5e-7;
    const int n_seeds = 2000;
    const auto offsets = mode_offsets_hz(comb);
    std::vector<double> power(3, 0.0);
    for (int seed = 0; seed < n_seeds; ++seed) {
        FieldTrace t = synthesize_field(comb, duration, dt, derive_stream_seed(5150, seed));
        for (int m = 0; m < 3; ++m) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t j = 0; j < t.samples.size(); ++j) {
                acc += t.samples[j] * std::polar(1.0, -two_pi * offsets[m] * (j * dt));
            }
            power[m] += std::norm(acc / static_cast<double>(t.samples.size()));
        }
    }
    const double base = power[0];
    CHECK(power[1] / base == Approx(2.0).epsilon(0.05));
    CHECK(power[2] / base == Approx(0.5).epsilon(0.05));
    CHECK(spacing == Approx(1.99862e9).epsilon(1e-5));
}

TEST_CASE("two-beam delay honors geometry and conserves power split", "[field]") {
    ModeComb comb = make_uniform_comb(4.54231e14, 0.05, 1, 3, 1e8);
    const double dt = 2e-11;
    FieldTrace t = synthesize_field(comb, 1e-6, dt, 12);
    SECTION("arms are dark before their light arrives") {
        PathConfig paths;
        paths.p1_m = 0.6;
        paths.p2_m = 1.2;
        paths.refractive_index = 1.5;
        TwoBeamTrace b = delayed_two_beam(t, paths);
        const auto arm1 = static_cast<std::size_t>(
            std::llround(paths.refractive_index * paths.p1_m / speed_of_light / dt));
        const auto arm2 = static_cast<std::size_t>(
            std::llround(paths.refractive_index * paths.p2_m / speed_of_light / dt));
        REQUIRE(arm2 < b.e2.size());
        for (std::size_t j = 0; j < arm1; ++j) CHECK(b.e1[j] == std::complex<double>{0.0, 0.0});
        for (std::size_t j = 0; j < arm2; ++j) CHECK(b.e2[j] == std::complex<double>{0.0, 0.0});
        CHECK(b.e1[arm1] != std::complex<double>{0.0, 0.0});
        CHECK(b.e2[arm2] != std::complex<double>{0.0, 0.0});
        CHECK(b.overlap_begin == arm2);
    }
    SECTION("time-averaged arm powers follow the split ratio") {
        PathConfig paths;
        paths.p2_m = 3.0;
        paths.split_ratio = 0.4;
        TwoBeamTrace b = delayed_two_beam(t, paths);
        double p1 = 0.0, p2 = 0.0;
        std::size_t n = 0;
        for (std::size_t j = b.overlap_begin; j < b.e1.size(); ++j) {
            p1 += std::norm(b.e1[j]);
            p2 += std::norm(b.e2[j]);
            ++n;
        }
        REQUIRE(n > 1000);
        CHECK(p1 / p2 == Approx(0.4 / 0.6).epsilon(0.01));
    }
    SECTION("equal paths differ only by the fixed split") {
        PathConfig paths;
        paths.split_ratio = 0.3;
        TwoBeamTrace b = delayed_two_beam(t, paths);
        CHECK(b.carrier == std::complex<double>{1.0, 0.0});
        const double scale = std::sqrt(0.7 / 0.3);
        for (std::size_t j = 0; j < b.e1.size(); ++j) {
            CHECK(std::abs(b.e2[j] - scale * b.e1[j]) < 1e-12);
        }
    }
    SECTION("the realized delay is a whole number of steps") {
        PathConfig paths;
        paths.p2_m = 0.0421;
        TwoBeamTrace b = delayed_two_beam(t, paths);
        const double steps = b.delay_realized_s / dt;
        CHECK(steps == Approx(std::round(steps)).margin(1e-9));
        CHECK(std::abs(b.rounding_error_s) <= 0.5 * dt);
        CHECK(b.delay_exact_s == Approx(0.0421 / speed_of_light).epsilon(1e-15));
        CHECK(b.carrier ==
              std::polar(1.0, -two_pi * comb.nu0_hz * b.delay_exact_s));
    }
    SECTION("delays beyond the trace leave no overlap") {
        PathConfig paths;
        paths.p2_m = 400.0;
        CHECK_THROWS_AS(delayed_two_beam(t, paths), EmptyOverlapError);
    }
}
