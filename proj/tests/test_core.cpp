#include "photon_router/core.hpp"

#include <doctest.h>

#include <cmath>

using namespace pr;

TEST_CASE("config text sets rates, scenario and waveguide options")
{
    const auto c = parse_config_text("# comment\nscenario = cascade\nkappa_s = 0.5\ngamma-c1 = 2  # inline\n"
                                     "gamma_c2 = 1\nwg_pulse = gaussian\nwg_points = 1024\nwg_regime = strong\n");
    CHECK(c.scenario == Scenario::TwoStageCascade);
    CHECK(c.rates.kappa_s == 0.5);
    CHECK(c.rates.gamma_c1 == 2.0);
    CHECK(c.waveguide.shape == PulseShape::Gaussian);
    CHECK(c.waveguide.points == 1024);
    CHECK(c.waveguide.strong_coupling);
}

TEST_CASE("formatted config parses back to the same config")
{
    ScenarioConfig c;
    c.scenario = Scenario::LambdaRouter;
    c.rates.gamma_cH = 0.1 + 0.2;
    c.rates.gamma_cV = 1.0 / 3.0;
    c.waveguide.lt_cells = 3.5;
    const auto back = parse_config_text(format_config(c));
    CHECK(format_config(back) == format_config(c));
    CHECK(back.rates.gamma_cV == c.rates.gamma_cV);
}

TEST_CASE("config errors name the offending key or line")
{
    auto message = [](const std::string& text) {
        try {
            validate(parse_config_text(text));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Config);
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("kappa_s = 1\n").find("gamma_c") != std::string::npos);
    CHECK(message("kappa_s = 1\ngamma_c = -2\n").find("gamma_c") != std::string::npos);
    CHECK(message("kappa_s = abc\n").find("kappa_s") != std::string::npos);
    CHECK(message("frobnicate = 1\n").find("frobnicate") != std::string::npos);
    CHECK(message("kappa_s 1\n").find("line 1") != std::string::npos);
    CHECK(message("scenario = nope\n").find("nope") != std::string::npos);
    CHECK(message("scenario = entangled\nkappa_s = 1\ngamma_c = 1\n").find("gamma_s") != std::string::npos);
}

TEST_CASE("two-level validation derives gamma_c from g and kappa_ex")
{
    ScenarioConfig c;
    c.rates.kappa_s = 0.01;
    c.rates.g = 0.14;
    c.rates.kappa_ex = 1;
    CHECK(validate(c).rates.gamma_c == doctest::Approx(0.0196));
}

TEST_CASE("ratio sweeps scale the numerator against the fixed denominator")
{
    RateSet r;
    r.gamma_c = 2;
    apply_sweep_value(r, "kappa_s/gamma_c", 1.5);
    CHECK(r.kappa_s == doctest::Approx(3.0));
    CHECK(r.gamma_c == 2.0);
    apply_sweep_value(r, "gamma_s", 0.25);
    CHECK(r.gamma_s == 0.25);
    const auto s = make_sweep("kappa_s", 0.1, 10, 3, true, r);
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(apply_sweep_value(r, "kappa_s/nothing", 1), Error);
}

TEST_CASE("quadrature weights integrate exponentials on a graded axis")
{
    const auto t = graded_axis(40.0, 0.05, 801);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == doctest::Approx(40.0));
    const auto w = quadrature_weights(t);
    for (double k : {0.3, 1.0, 20.0}) {
        double s = 0;
        for (std::size_t i = 0; i < t.size(); ++i) s += w[i] * k * std::exp(-k * t[i]);
        CHECK(s == doctest::Approx(1.0 - std::exp(-40 * k)).epsilon(1e-7));
    }
}

TEST_CASE("quadrature weights are exact for quadratics on nonuniform axes")
{
    for (int n : {3, 4, 7, 10}) {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = std::pow(double(i) / (n - 1), 1.5) * 2;
        const auto w = quadrature_weights(x);
        double s = 0;
        for (int i = 0; i < n; ++i) s += w[i] * x[i] * x[i];
        CHECK(s == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    }
}
