#include "photon_router/analytic.hpp"
#include "photon_router/waveguide.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

using namespace pr;

namespace {

ScenarioConfig fig5(double ratio, int points = 512)
{
    ScenarioConfig c;
    c.rates.kappa_ex = 1;
    c.rates.g = 0.14;
    c.rates.kappa_s = ratio * c.rates.g * c.rates.g;
    c.waveguide.points = points;
    return c;
}

} // namespace

TEST_CASE("waveguide validation rejects slow cavities and bad settings")
{
    auto c = fig5(1.0);
    c.rates.g = 0.5;
    CHECK_THROWS_AS(waveguide::validate_waveguide(c), Error);
    c = fig5(1.0);
    c.photon_number = 3;
    CHECK_THROWS_AS(waveguide::validate_waveguide(c), Error);
    c = fig5(1.0);
    c.scenario = Scenario::LambdaRouter;
    CHECK_THROWS_AS(waveguide::validate_waveguide(c), Error);
    c = fig5(1.0);
    c.waveguide.strong_coupling = true;
    CHECK_THROWS_AS(waveguide::validate_waveguide(c), Error);
}

TEST_CASE("discretized pulses are normalized for every shape")
{
    for (PulseShape s : {PulseShape::Exponential, PulseShape::Gaussian, PulseShape::Square}) {
        auto c = fig5(2.0);
        c.waveguide.shape = s;
        c = waveguide::validate_waveguide(c);
        const auto grid = waveguide::make_grid(c);
        const auto u = waveguide::pulse_amplitudes(c, grid);
        double n = 0;
        for (double v : u) n += v * v;
        CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(grid.half_support > 0);
    }
}

TEST_CASE("coupling profile integrates to one")
{
    const auto grid = waveguide::make_grid(waveguide::validate_waveguide(fig5(1.0)));
    double s = 0;
    const int n = 4000;
    const double h = 2 * grid.half_support / n;
    for (int i = 0; i <= n; ++i) s += (i == 0 || i == n ? 0.5 : 1.0) * grid.chi(-grid.half_support + i * h) * h;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("without coupling both photons pass")
{
    auto c = fig5(1.0);
    c.rates.g = 0;
    const auto r = waveguide::run(c);
    CHECK(r.probabilities.p_tt == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("one photon matches the single-photon closed form")
{
    auto c = fig5(1.0, 1024);
    c.photon_number = 1;
    const auto r = waveguide::run(c);
    RateSet a;
    a.kappa_s = c.rates.kappa_s;
    a.gamma_c = 0.0196;
    const auto [t, rr] = analytic::single_photon_TR(a);
    CHECK(r.transmitted == doctest::Approx(t).epsilon(0.02));
    CHECK(r.reflected == doctest::Approx(rr).epsilon(0.02));
}

TEST_CASE("lossless two-photon runs conserve norm and exchange symmetry")
{
    const auto r = waveguide::run(fig5(1.4));
    CHECK(std::abs(r.loss) < 1e-6);
    CHECK(r.residual < 1e-5);
    CHECK(r.symmetry_error < 1e-10);
    CHECK(r.probabilities.raw_sum == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("intrinsic cavity loss removes norm")
{
    auto c = fig5(1.0);
    c.rates.kappa_i = 0.01;
    CHECK(waveguide::run(c).loss > 0.01);
}

TEST_CASE("strong-coupling linewidth and sideband detuning")
{
    ScenarioConfig c;
    c.rates.kappa_ex = 1;
    c.rates.g = 10;
    c.waveguide.strong_coupling = true;
    CHECK(waveguide::effective_gamma_c(c) == doctest::Approx(0.25));
    c.rates.kappa_s = 0.25;
    c.waveguide.points = 512;
    const auto r = waveguide::strong_coupling_run(c, -1);
    CHECK(r.detuning == doctest::Approx(-10 * std::sqrt(2.0)));
}

TEST_CASE("snapshot header lists the arrays that follow")
{
    auto c = waveguide::validate_waveguide(fig5(1.0, 256));
    waveguide::WaveguideState st;
    waveguide::WaveguideGrid grid;
    waveguide::run(c, &st, &grid);
    const std::string path = "snapshot_test.bin";
    waveguide::write_snapshot(path, st, grid);
    std::ifstream in(path, std::ios::binary);
    std::string line;
    std::getline(in, line);
    CHECK(line == "photon_router_snapshot 1");
    int arrays = 0;
    bool ended = false;
    while (std::getline(in, line)) {
        if (line.rfind("array ", 0) == 0) ++arrays;
        if (line == "end") { ended = true; break; }
    }
    CHECK(ended);
    CHECK(arrays >= 3);
    std::remove(path.c_str());
}
