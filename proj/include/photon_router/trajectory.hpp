#pragma once

#include "photon_router/analytic.hpp"
#include "photon_router/core.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace pr::trajectory {

enum class Part { Feeder, TwoLevelAtom, SingleSidedAtom, SourceAtom, LambdaAtom };

// A cascaded chain on the explicit basis of every product state with at
// most max_excitation excitations. H is the non-Hermitian effective
// Hamiltonian; channels are the output operators, t first, then r (or
// H then V for the lambda atom).
struct ChainSystem
{
    std::vector<Part> parts;
    std::vector<std::vector<int>> basis;
    int max_excitation = 0;
    Eigen::MatrixXcd H;
    std::vector<std::string> channel_names;
    std::vector<Eigen::MatrixXcd> channels;
    Eigen::VectorXcd initial;

    int dimension() const { return static_cast<int>(basis.size()); }
    // -1 when the occupation is outside the basis
    int index(const std::vector<int>& occupation) const;
    std::string label(int i) const;
    int excitation(int i) const;
    // infinity norm of H, the step-size scale
    double max_rate() const;
};

struct FewExcitationState
{
    Eigen::VectorXcd amplitudes;
    double t = 0.0;
};

// kappa'_s used for the entangled source; conditioning removes it exactly.
constexpr double source_mirror_ratio = 1e-3;

ChainSystem build_chain(const ScenarioConfig& config);

// Classical RK4 from state.t to t_end in equal steps no longer than dt.
FewExcitationState evolve(const FewExcitationState& state, const ChainSystem& chain, double dt,
                          double t_end);
FewExcitationState apply_channel(const FewExcitationState& state, const ChainSystem& chain, int channel);

// The largest step evolve accepts.
double max_step(const ChainSystem& chain);

// step_scale < 1 shrinks every integration step; used by the step-halving
// convergence check.
CorrelationGrid correlation_surfaces(const ScenarioConfig& config, const std::vector<double>& t_axis,
                                     const std::vector<double>& tau_axis, double step_scale = 1.0);
RoutingProbabilities probabilities(const ScenarioConfig& config, double step_scale = 1.0);

// Probability that the first detection happens in the given channel.
double first_detection_probability(const ScenarioConfig& config, int channel);

// Detection rates through channel t for the single-sided scenario.
analytic::BunchingRates bunching(const ScenarioConfig& config, double t);

} // namespace pr::trajectory
