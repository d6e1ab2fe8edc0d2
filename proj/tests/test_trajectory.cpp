#include "photon_router/analytic.hpp"
#include "photon_router/trajectory.hpp"

#include <doctest.h>

#include <cmath>

using namespace pr;

namespace {

ScenarioConfig config(Scenario s)
{
    ScenarioConfig c;
    c.scenario = s;
    c.rates.kappa_s = 0.9;
    c.rates.gamma_c = 1;
    c.rates.gamma_s = 0.05;
    c.rates.gamma_c1 = 0.6;
    c.rates.gamma_c2 = 1.2;
    c.rates.gamma_cH = 1;
    c.rates.gamma_cV = 0.5;
    return c;
}

double max_delta(const RoutingProbabilities& a, const RoutingProbabilities& b)
{
    return std::max({std::abs(a.p_tr - b.p_tr), std::abs(a.p_rt - b.p_rt), std::abs(a.p_rr - b.p_rr),
                     std::abs(a.p_tt - b.p_tt)});
}

} // namespace

TEST_CASE("chain basis holds at most two excitations and starts in the source")
{
    const auto chain = trajectory::build_chain(validate(config(Scenario::TwoLevelRouter)));
    CHECK(chain.dimension() > 0);
    for (int i = 0; i < chain.dimension(); ++i) CHECK(chain.excitation(i) <= 2);
    CHECK(chain.initial.norm() == doctest::Approx(1.0));
    CHECK(chain.H.rows() == chain.dimension());
}

TEST_CASE("trajectory engine reproduces the closed forms")
{
    for (Scenario s : {Scenario::TwoLevelRouter, Scenario::EntangledSourceRouter, Scenario::TwoStageCascade,
                       Scenario::LambdaRouter}) {
        const auto c = config(s);
        CAPTURE(scenario_name(s));
        CHECK(max_delta(trajectory::probabilities(c), analytic::probabilities(c)) < 1e-6);
    }
}

TEST_CASE("a detection removes one excitation")
{
    const auto chain = trajectory::build_chain(validate(config(Scenario::TwoLevelRouter)));
    trajectory::FewExcitationState st{chain.initial, 0.0};
    st = trajectory::evolve(st, chain, trajectory::max_step(chain), 1.0);
    for (int ch = 0; ch < static_cast<int>(chain.channels.size()); ++ch) {
        const auto after = trajectory::apply_channel(st, chain, ch);
        for (int i = 0; i < chain.dimension(); ++i) {
            if (std::abs(after.amplitudes(i)) > 1e-14) CHECK(chain.excitation(i) <= 1);
        }
    }
}

TEST_CASE("trajectory single-sided rates match the closed forms")
{
    ScenarioConfig c = config(Scenario::SingleSidedBunching);
    for (double t : {0.5, 2.0}) {
        const auto a = analytic::single_sided_bunching(c.rates, t);
        const auto b = trajectory::bunching(c, t);
        CHECK(b.before == doctest::Approx(a.before).epsilon(1e-6));
        CHECK(b.after == doctest::Approx(a.after).epsilon(1e-6));
    }
}
