#pragma once

#include "photon_router/core.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace pr::waveguide {

// Photons are labelled by their passage time at the cavity centre, in units
// of ds (= dx, v_g = 1). At step n a right-mover with label k sits at
// x = (n-k)ds + tau and a left-mover at x = (k-n)ds - tau, tau in [0, ds),
// so free transport is exact and only labels near the cavity interact.
struct WaveguideGrid
{
    int points = 0;             // labels per direction
    double ds = 0.0;
    double lt = 0.0;            // interaction length L_T
    double sigma = 0.0;         // chi is a Gaussian of this width
    double half_support = 0.0;  // chi is truncated at +-3 sigma
    double coupling = 0.0;      // V = sqrt(2 kappa_ex)
    int d_lo = 0, d_hi = 0;     // in-band right offsets n - k
    int e_lo = 0, e_hi = 0;     // in-band left offsets k - n
    int n_start = 0;
    int n_last = 0;
    int pulse_first = 0;
    int pulse_count = 0;

    int right_band() const { return d_hi - d_lo + 1; }
    int left_band() const { return e_hi - e_lo + 1; }
    // normalized coupling profile, integral 1
    double chi(double x) const;
};

// Width of the edge region checked for boundary contamination.
constexpr int edge_cells = 5;

// System levels shared by both one-photon sector blocks.
enum SystemMode { ModeA = 0, ModeB = 1, ModeSigma = 2 };

// Sector amplitudes. The two-photon arrays are indexed by labels with
// F_rr, F_ll symmetric; the state is sum F(k,k') a_k^+ a_k'^+ / sqrt2 |0>
// for equal directions and sum F_rl(k,k') r_k^+ l_k'^+ |0> otherwise, so
// every sector norm is a plain sum of |F|^2.
struct WaveguideState
{
    int photons = 2;
    int n = 0;                  // step index
    Eigen::MatrixXcd rr, ll, rl;
    Eigen::MatrixXcd g_r, g_l;  // labels x {a, b, sigma}
    Eigen::VectorXcd z;         // aa, bb, ab, a sigma, b sigma
    // one-photon runs
    Eigen::VectorXcd psi_r, psi_l;
    Eigen::VectorXcd sys;       // a, b, sigma

    double norm() const;
};

struct WaveguideResult
{
    RoutingProbabilities probabilities;
    double transmitted = 0.0;   // one-photon runs
    double reflected = 0.0;
    double loss = 0.0;          // norm removed by kappa_i and gamma
    double residual = 0.0;      // norm left in the system and coupling band
    double symmetry_error = 0.0;
    int steps = 0;
    double ds = 0.0;
    double detuning = 0.0;
};

// Per-step propagators for the one-excitation block (in-band modes plus
// a, b, sigma) and the two-excitation corner block.
struct StepPropagator
{
    Eigen::MatrixXcd one;
    Eigen::MatrixXcd two;
    std::vector<std::pair<int, int>> two_basis;     // orbital pairs
    int substeps = 0;
};

// Slowest population decay rate of the one-excitation system.
double slowest_decay(const ScenarioConfig& config);

ScenarioConfig validate_waveguide(const ScenarioConfig& config);
WaveguideGrid make_grid(const ScenarioConfig& config);
StepPropagator make_propagator(const ScenarioConfig& config, const WaveguideGrid& grid);

// Sampled, normalized pulse amplitudes per label, starting at pulse_first.
std::vector<double> pulse_amplitudes(const ScenarioConfig& config, const WaveguideGrid& grid);

WaveguideState init_state(const ScenarioConfig& config, const WaveguideGrid& grid);
// One system excitation in mode, no photons; used by the ring-down test.
WaveguideState init_excited(const WaveguideGrid& grid, SystemMode mode);

// Advances one step. dt must equal ds: the label frame only moves at CFL 1.
void step(WaveguideState& state, const WaveguideGrid& grid, const StepPropagator& prop, double dt);

// Norm still in the system or on in-band labels.
double band_norm(const WaveguideState& state, const WaveguideGrid& grid);
double edge_norm(const WaveguideState& state, const WaveguideGrid& grid, int cells);

// final_state and final_grid, when given, receive the state at the stop.
WaveguideResult run(const ScenarioConfig& config, WaveguideState* final_state = nullptr,
                    WaveguideGrid* final_grid = nullptr);
// Sideband-driven run in the strong coupling regime; detuning_sign picks
// the upper (+1) or lower (-1) vacuum Rabi sideband.
WaveguideResult strong_coupling_run(const ScenarioConfig& config, int detuning_sign = +1);

// Effective fast-cavity decay for comparison with the closed forms.
double effective_gamma_c(const ScenarioConfig& config);

// Cavity population |a|^2 after each step from one excitation in mode a.
std::vector<double> ring_down(const ScenarioConfig& config, int steps);

// Binary snapshot: text header lines "key value", a line "end", then the
// sector arrays as little-endian complex doubles in header order.
void write_snapshot(const std::string& path, const WaveguideState& state, const WaveguideGrid& grid);

} // namespace pr::waveguide
