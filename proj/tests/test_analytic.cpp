#include "photon_router/analytic.hpp"

#include <doctest.h>

#include <cmath>

using namespace pr;

namespace {

RateSet two_level(double kappa_s, double gamma_c = 1.0)
{
    RateSet r;
    r.kappa_s = kappa_s;
    r.gamma_c = gamma_c;
    return r;
}

} // namespace

TEST_CASE("exponential convolutions match their closed forms, including coincident rates")
{
    const double t = 0.7;
    CHECK(analytic::conv({2.0}, t) == doctest::Approx(std::exp(-1.4)));
    CHECK(analytic::conv({1.0, 3.0}, t) == doctest::Approx((std::exp(-t) - std::exp(-3 * t)) / 2));
    CHECK(analytic::conv({1.5, 1.5}, t) == doctest::Approx(t * std::exp(-1.5 * t)));
    CHECK(analytic::conv({1.5, 1.5, 1.5}, t) == doctest::Approx(t * t / 2 * std::exp(-1.5 * t)));
    CHECK(analytic::conv({1.0, 1.0 + 1e-9}, t) == doctest::Approx(t * std::exp(-t)).epsilon(1e-7));
}

TEST_CASE("two-level probabilities are normalized and reach about 64 percent")
{
    double best = 0;
    for (double k = 0.05; k < 20; k *= 1.05) {
        const auto p = analytic::two_level_probabilities(two_level(k));
        CHECK(p.raw_sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.c_tr == doctest::Approx(p.p_tr + p.p_rt));
        best = std::max(best, p.c_tr);
    }
    CHECK(best == doctest::Approx(0.6408).epsilon(1e-3));
}

TEST_CASE("two-level limits: long pulses reflect, short pulses pass")
{
    const auto slow = analytic::two_level_probabilities(two_level(1e-4));
    const auto fast = analytic::two_level_probabilities(two_level(1e4));
    CHECK(fast.p_tt > 0.999);
    CHECK(slow.p_tt + slow.p_rr + slow.c_tr == doctest::Approx(1.0));
    CHECK(slow.p_rr > 0.9);
}

TEST_CASE("one photon is transmitted or reflected with unit total")
{
    for (double k : {0.1, 1.0, 10.0}) {
        const auto [t, r] = analytic::single_photon_TR(two_level(k));
        CHECK(t + r == doctest::Approx(1.0));
        CHECK(r == doctest::Approx(1.0 / (1.0 + k / 2)).epsilon(1e-9));
    }
}

TEST_CASE("correlation surfaces: reflections never coincide")
{
    const auto r = two_level(0.8);
    for (double t : {0.0, 0.3, 2.0}) CHECK(analytic::two_level_correlations(r, t, 0.0)[RR] == doctest::Approx(0.0));
}

TEST_CASE("the cascade with an empty first stage is the two-level router")
{
    RateSet c;
    c.kappa_s = 1.3;
    c.gamma_c2 = 1;
    const auto a = analytic::cascade_probabilities(c);
    const auto b = analytic::two_level_probabilities(two_level(1.3));
    CHECK(a.p_tr == doctest::Approx(b.p_tr).epsilon(1e-6));
    CHECK(a.p_rr == doctest::Approx(b.p_rr).epsilon(1e-6));
}

TEST_CASE("entangled source: a fast source is close to the two-level router")
{
    RateSet r = two_level(1.4);
    r.gamma_s = 1e4;
    const auto a = analytic::entangled_source_probabilities(r);
    CHECK(a.raw_sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(a.c_tr > 0.5);
}

TEST_CASE("single-sided joint amplitude is normalized at the origin and decays")
{
    RateSet r;
    r.kappa_s = 1;
    r.gamma_c1 = 5;
    CHECK(analytic::single_sided_joint_amplitude(r, 0, 0) == doctest::Approx(1.0));
    CHECK(std::abs(analytic::single_sided_joint_amplitude(r, 8, 8)) < 1e-3);
    r.kappa_s = 1e-3;
    CHECK(analytic::single_sided_joint_amplitude(r, 0.5, 0.3)
          == doctest::Approx(analytic::single_sided_joint_amplitude_long_pulse(r, 0.5, 0.3)).epsilon(1e-2));
}

TEST_CASE("lambda router approaches an ideal router for long pulses")
{
    RateSet r;
    r.gamma_cH = 1;
    r.gamma_cV = 1;
    r.kappa_s = 1e-3;
    const auto l = analytic::lambda_routing(r);
    CHECK(l.c_tr >= 0.999);
    r.kappa_s = 1;
    CHECK(analytic::lambda_routing(r).c_tr < l.c_tr);
}

TEST_CASE("the mutation fixture changes the closed-form surfaces and restores them")
{
    const auto r = two_level(1.0);
    const double before = analytic::two_level_correlations(r, 0.4, 0.3)[TT];
    analytic::set_test_perturbation(1.01);
    const double changed = analytic::two_level_correlations(r, 0.4, 0.3)[TT];
    analytic::set_test_perturbation(1.0);
    const double after = analytic::two_level_correlations(r, 0.4, 0.3)[TT];
    CHECK(std::abs(changed - before) > 1e-4 * std::abs(before));
    CHECK(after == before);
}
