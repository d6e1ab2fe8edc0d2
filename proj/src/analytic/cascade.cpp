#include "photon_router/analytic.hpp"

#include <cmath>

namespace pr::analytic {

// Every amplitude is a sum over coupling paths through the triangular
// cascade: product of couplings times the convolution over the decay rates
// of the visited states.
CascadeAmplitudes cascade_amplitudes(const RateSet& r, double t)
{
    const double k = r.kappa_s;
    const double g1 = r.gamma_c1;
    const double g2 = r.gamma_c2;
    const double s2 = std::sqrt(2.0);

    // decay rates of |2gg>, |1eg>, |1ge>, |0ee>
    const double d2gg = 2 * k, d1eg = k + g1, d1ge = k + 2 * g2, d0ee = g1 + 2 * g2;
    // couplings between them
    const double to1eg = -2 * s2 * std::sqrt(k * g1);
    const double to1ge = -2 * s2 * std::sqrt(k * g2);
    const double eg_ge = -2 * std::sqrt(g1 * g2);
    const double eg_ee = -2 * std::sqrt(k * g2);
    const double ge_ee = -2 * std::sqrt(k * g1);

    CascadeAmplitudes A;
    A.alpha = conv({d2gg}, t);
    A.beta = to1eg * conv({d2gg, d1eg}, t);
    A.delta = to1ge * conv({d2gg, d1ge}, t) + to1eg * eg_ge * conv({d2gg, d1eg, d1ge}, t);
    A.eta = to1eg * eg_ee * conv({d2gg, d1eg, d0ee}, t)
            + to1ge * ge_ee * conv({d2gg, d1ge, d0ee}, t)
            + to1eg * eg_ge * ge_ee * conv({d2gg, d1eg, d1ge, d0ee}, t);

    // single excitation: |1gg>, |0eg>, |0ge>
    A.a1 = conv({k}, t);
    A.b1 = -2 * std::sqrt(k * g1) * conv({k, g1}, t);
    A.c1 = -2 * std::sqrt(k * g2) * conv({k, 2 * g2}, t)
           + 4 * g1 * std::sqrt(k * g2) * conv({k, g1, 2 * g2}, t);
    A.b2 = conv({g1}, t);
    A.c2 = -2 * std::sqrt(g1 * g2) * conv({g1, 2 * g2}, t);
    A.c3 = conv({2 * g2}, t);
    return A;
}

namespace {

std::array<double, 4> assemble(const RateSet& r, const CascadeAmplitudes& x, const CascadeAmplitudes& y)
{
    const double sk = std::sqrt(r.kappa_s);
    const double s1 = std::sqrt(r.gamma_c1);
    const double s2 = std::sqrt(r.gamma_c2);
    const double g2 = r.gamma_c2;

    // collapsed through the transmitted channel onto |1gg>, |0eg>, |0ge>
    const double A = std::sqrt(2.0) * sk * x.alpha + s1 * x.beta + s2 * x.delta;
    const double B = sk * x.beta + s2 * x.eta;
    const double C = sk * x.delta + s1 * x.eta;

    const double out1 = sk * y.a1 + s1 * y.b1 + s2 * y.c1;
    const double out2 = s1 * y.b2 + s2 * y.c2;

    std::array<double, 4> G;
    const double tt = A * out1 + B * out2 + C * s2 * y.c3;
    const double tr = A * y.c1 + B * y.c2 + C * y.c3;
    const double rt = x.delta * out1 + x.eta * out2;
    const double rr = x.eta * y.c2 + x.delta * y.c1;
    G[TT] = 4 * tt * tt;
    G[TR] = 4 * g2 * tr * tr;
    G[RT] = 4 * g2 * rt * rt;
    G[RR] = 4 * g2 * g2 * rr * rr;
    return G;
}

} // namespace

std::array<double, 4> cascade_correlations(const RateSet& r, double t, double tau)
{
    return assemble(r, cascade_amplitudes(r, t), cascade_amplitudes(r, tau));
}

RoutingProbabilities cascade_probabilities(const RateSet& r, int quad_points)
{
    ScenarioConfig c;
    c.scenario = Scenario::TwoStageCascade;
    c.rates = r;
    c.quad_points = quad_points;
    c = validate(c);
    const auto axis = default_axis(c);
    return integrate_probabilities(correlation_surfaces(c, axis, axis));
}

// Grid assembly reuses one amplitude set per axis point.
CorrelationGrid cascade_grid(const RateSet& r, const std::vector<double>& t_axis,
                             const std::vector<double>& tau_axis)
{
    CorrelationGrid grid;
    grid.t_axis = t_axis;
    grid.tau_axis = tau_axis;
    std::vector<CascadeAmplitudes> at, atau;
    for (double t : t_axis) at.push_back(cascade_amplitudes(r, t));
    for (double t : tau_axis) atau.push_back(cascade_amplitudes(r, t));
    for (auto& v : grid.values) v.resize(t_axis.size() * tau_axis.size());
    for (std::size_t i = 0; i < t_axis.size(); ++i) {
        for (std::size_t j = 0; j < tau_axis.size(); ++j) {
            const auto G = assemble(r, at[i], atau[j]);
            for (int k = 0; k < 4; ++k) grid.values[k][i * tau_axis.size() + j] = G[k];
        }
    }
    return grid;
}

} // namespace pr::analytic
