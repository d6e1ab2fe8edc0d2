#include "photon_router/analytic.hpp"

#include <cmath>

namespace pr::analytic {

TwoLevelAmplitudes two_level_amplitudes(const RateSet& r, double t)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c;
    TwoLevelAmplitudes A;
    A.a = conv({k}, t);
    A.b = -2.0 * std::sqrt(k * g) * conv({k, 2 * g}, t);
    A.c = conv({2 * g}, t);
    A.alpha = conv({2 * k}, t);
    A.beta = -2.0 * std::sqrt(2 * k * g) * conv({2 * k, k + 2 * g}, t) * test_perturbation();
    return A;
}

std::pair<double, double> single_photon_TR(const RateSet& r)
{
    const double d = r.kappa_s + 2 * r.gamma_c;
    return {r.kappa_s / d, 2 * r.gamma_c / d};
}

namespace {

std::array<double, 4> assemble(const RateSet& r, const TwoLevelAmplitudes& at, const TwoLevelAmplitudes& atau)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c;
    const double sg = std::sqrt(g);
    const double sk = std::sqrt(k);
    const double alpha = at.alpha;
    const double beta = at.beta;
    const double a = atau.a, b = atau.b, c = atau.c;
    const double lead = std::sqrt(2 * k) * alpha + sg * beta;
    const double fwd = sk * a + sg * b;
    std::array<double, 4> G;
    const double tr = sg * (lead * b + sk * beta * c);
    const double rt = sg * beta * fwd;
    const double rr = g * beta * b;
    const double tt = lead * fwd + std::sqrt(g * k) * beta * c;
    G[TR] = 4 * tr * tr;
    G[RT] = 4 * rt * rt;
    G[RR] = 4 * rr * rr;
    G[TT] = 4 * tt * tt;
    return G;
}

} // namespace

std::array<double, 4> two_level_correlations(const RateSet& r, double t, double tau)
{
    return assemble(r, two_level_amplitudes(r, t), two_level_amplitudes(r, tau));
}

RoutingProbabilities two_level_probabilities(const RateSet& r)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c;
    const double d = (2 * g + k) * (2 * g + k) * (2 * g + 3 * k);
    return make_probabilities(12 * k * g * (g + k) / d,
                              4 * k * g * g / d,
                              8 * g * g * g / d,
                              k * (3 * k * k + 4 * g * g + 2 * k * g) / d);
}

EntangledSourceAmplitudes entangled_source_amplitudes(const RateSet& r, double t)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c;
    const double s = r.gamma_s;
    EntangledSourceAmplitudes A;
    A.xi = conv({2 * s}, t);
    A.alpha = -4.0 * std::sqrt(s) * conv({2 * s, 2 * k}, t);
    A.beta = 8.0 * std::sqrt(2 * k * s * g) * conv({2 * s, 2 * k, k + 2 * g}, t);
    return A;
}

RoutingProbabilities entangled_source_probabilities(const RateSet& r)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c;
    const double s = r.gamma_s;
    const double d = (2 * g + k) * (2 * g + k) * (2 * g + 3 * k) * (2 * s + 2 * g + k);
    const double tr = 4 * k * g * (6 * s * (g + k) + (g + 2 * k) * (2 * g + 3 * k)) / d;
    const double rt = 4 * k * g * g * (2 * (s + g) + 3 * k) / d;
    const double rr = 8 * g * g * g * (2 * (s + g) + 3 * k) / d;
    const double tt = k * (8 * g * g * (s + g) + 4 * g * k * (s + 2 * g)
                           + 2 * k * k * (3 * s - 2 * g) + 3 * k * k * k) / d;
    return make_probabilities(tr, rt, rr, tt);
}

SingleSidedAmplitudes single_sided_amplitudes(const RateSet& r, double t)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c1;
    return {conv({2 * k}, t), -2.0 * std::sqrt(2 * k * g) * conv({2 * k, k + g}, t)};
}

namespace {

// State after one detection through the single port: |1g> and |0e> parts.
std::pair<double, double> single_sided_collapse(const RateSet& r, double t)
{
    const auto A = single_sided_amplitudes(r, t);
    const double k = r.kappa_s;
    const double g = r.gamma_c1;
    return {2 * std::sqrt(k) * A.alpha + std::sqrt(2 * g) * A.beta, std::sqrt(2 * k) * A.beta};
}

} // namespace

double single_sided_joint_amplitude(const RateSet& r, double t, double tau)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c1;
    const auto [u, v] = single_sided_collapse(r, t);
    const double U = u * conv({k}, tau);
    const double V = -2.0 * std::sqrt(k * g) * u * conv({k, g}, tau) + v * conv({g}, tau);
    return (std::sqrt(2 * k) * U + std::sqrt(2 * g) * V) / (2 * std::sqrt(2.0) * k);
}

double single_sided_joint_amplitude_long_pulse(const RateSet& r, double t, double tau)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c1;
    const double q = std::exp(-(g - k) * tau);
    return (1 - 4 * q) * std::exp(-2 * k * t - k * tau)
           - 2 * (1 - 3 * q) * std::exp(-(g + k) * t - k * tau);
}

BunchingRates single_sided_bunching(const RateSet& r, double t)
{
    const double k = r.kappa_s;
    const double g = r.gamma_c1;
    const auto A = single_sided_amplitudes(r, t);
    const auto [u, v] = single_sided_collapse(r, t);
    BunchingRates out;
    out.before = (u * u + v * v) / (A.alpha * A.alpha + A.beta * A.beta);
    const double second = std::sqrt(2 * k) * u + std::sqrt(2 * g) * v;
    out.after = second * second / (u * u + v * v);
    const double a1 = conv({k}, t);
    const double b1 = -2.0 * std::sqrt(k * g) * conv({k, g}, t);
    const double lone = std::sqrt(2 * k) * a1 + std::sqrt(2 * g) * b1;
    out.single = lone * lone / (a1 * a1 + b1 * b1);
    return out;
}

} // namespace pr::analytic
