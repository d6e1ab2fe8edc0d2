#pragma once

#include "photon_router/core.hpp"

#include <array>
#include <initializer_list>
#include <utility>

namespace pr::analytic {

// Convolution of decaying exponentials e^{-x0 t} * ... * e^{-xk t}, i.e.
// (-1)^k times the divided difference of e^{-xt} over the nodes. Regular
// for coincident nodes, so no closed form below needs a special case.
double conv(std::initializer_list<double> rates, double t);

struct TwoLevelAmplitudes
{
    double a, b, c;         // single-excitation branches
    double alpha, beta;     // two-photon branch
};

TwoLevelAmplitudes two_level_amplitudes(const RateSet& r, double t);
std::pair<double, double> single_photon_TR(const RateSet& r);
std::array<double, 4> two_level_correlations(const RateSet& r, double t, double tau);
RoutingProbabilities two_level_probabilities(const RateSet& r);

// alpha and beta carry a common factor sqrt(kappa'_s), divided out here.
struct EntangledSourceAmplitudes
{
    double xi, alpha, beta;
};

EntangledSourceAmplitudes entangled_source_amplitudes(const RateSet& r, double t);
RoutingProbabilities entangled_source_probabilities(const RateSet& r);

struct SingleSidedAmplitudes
{
    double alpha, beta;
};

SingleSidedAmplitudes single_sided_amplitudes(const RateSet& r, double t);

// Joint detection amplitude at t and t+tau, scaled so that f(0,0) = 1.
double single_sided_joint_amplitude(const RateSet& r, double t, double tau);
// Its kappa_s << gamma_c1 limit, the two-bracket form.
double single_sided_joint_amplitude_long_pulse(const RateSet& r, double t, double tau);

struct BunchingRates
{
    double before;      // detection rate of the two-photon state
    double after;       // rate right after one detection
    double single;      // rate for a lone photon at the same instant
};

BunchingRates single_sided_bunching(const RateSet& r, double t);

struct CascadeAmplitudes
{
    double alpha, beta, delta, eta;
    double a1, b1, c1;
    double b2, c2;
    double c3;
};

CascadeAmplitudes cascade_amplitudes(const RateSet& r, double t);
std::array<double, 4> cascade_correlations(const RateSet& r, double t, double tau);
RoutingProbabilities cascade_probabilities(const RateSet& r, int quad_points = 600);

struct LambdaResult
{
    double p_v;     // first detection is V, one photon
    double p_vh;
    double p_hv;
    double c_tr;
    double p_sp;
    double p_loss;
};

double lambda_pv(int n, const RateSet& r);
LambdaResult lambda_routing(const RateSet& r);
std::pair<double, double> lambda_amplitudes(int n, const RateSet& r, double t);

// Scenario dispatch for the closed-form engine.
RoutingProbabilities probabilities(const ScenarioConfig& config);
CorrelationGrid correlation_surfaces(const ScenarioConfig& config,
                                     const std::vector<double>& t_axis,
                                     const std::vector<double>& tau_axis);

// Scales the two-photon atomic amplitude of the two-level router. Used only
// by the mutation check that proves the oracle comparisons can fail.
void set_test_perturbation(double factor);
double test_perturbation();

} // namespace pr::analytic
