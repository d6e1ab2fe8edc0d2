#include "photon_router/trajectory.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace pr::trajectory {

using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

MatrixXcd generator(const ChainSystem& c)
{
    return cd(0.0, -1.0) * c.H;
}

// One classical RK4 step of y' = M y, written as the matrix polynomial it is.
MatrixXcd rk4_matrix(const MatrixXcd& M, double h)
{
    const MatrixXcd A = h * M;
    MatrixXcd S = MatrixXcd::Identity(M.rows(), M.cols()) + A;
    MatrixXcd P = A;
    for (int k = 2; k <= 4; ++k) {
        P = (P * A) / double(k);
        S += P;
    }
    return S;
}

MatrixXcd matrix_power(MatrixXcd base, long k)
{
    MatrixXcd out = MatrixXcd::Identity(base.rows(), base.cols());
    while (k > 0) {
        if (k & 1) out = out * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return out;
}

// RK4 propagator across one axis interval, in equal steps below both the
// rate limit and a tenth of the interval.
MatrixXcd interval_propagator(const MatrixXcd& M, double length, double rate_limit, double step_scale)
{
    if (length <= 0) return MatrixXcd::Identity(M.rows(), M.cols());
    const double dt = step_scale * std::min(rate_limit, length / 10.0);
    const long k = static_cast<long>(std::ceil(length / dt - 1e-9));
    return matrix_power(rk4_matrix(M, length / k), k);
}

std::vector<MatrixXcd> axis_propagators(const MatrixXcd& M, const std::vector<double>& axis,
                                        double rate_limit, double step_scale)
{
    std::vector<MatrixXcd> P;
    P.reserve(axis.size());
    P.push_back(interval_propagator(M, axis.front(), rate_limit, step_scale));
    for (std::size_t i = 1; i < axis.size(); ++i) {
        P.push_back(interval_propagator(M, axis[i] - axis[i - 1], rate_limit, step_scale));
    }
    return P;
}

void check_axis(const std::vector<double>& axis, const char* name)
{
    if (axis.empty() || axis.front() < 0) throw config_error(std::string(name) + " axis must be non-empty and start at t >= 0");
    for (std::size_t i = 1; i < axis.size(); ++i) {
        if (!(axis[i] > axis[i - 1])) throw config_error(std::string(name) + " axis must be strictly increasing");
    }
}

// Integrated detection-rate of the first photon, per channel, under no-jump evolution.
std::vector<double> first_detection(const ChainSystem& c, const ScenarioConfig& cfg)
{
    const auto [lo, hi] = rate_scales(cfg);
    const auto axis = graded_axis(12.0 / lo, 1.0 / hi, 4001);
    const auto w = quadrature_weights(axis);
    const MatrixXcd M = generator(c);
    const auto P = axis_propagators(M, axis, max_step(c), 1.0);
    std::vector<double> total(c.channels.size(), 0.0);
    VectorXcd psi = c.initial;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        psi = P[i] * psi;
        for (std::size_t x = 0; x < c.channels.size(); ++x) {
            total[x] += w[i] * (c.channels[x] * psi).squaredNorm();
        }
    }
    return total;
}

int pair_index(int first, int second)
{
    if (first == 0) return second == 0 ? TT : TR;
    return second == 0 ? RT : RR;
}

} // namespace

double max_step(const ChainSystem& chain)
{
    const double rate = chain.max_rate();
    return rate > 0 ? 1e-2 / rate : std::numeric_limits<double>::infinity();
}

FewExcitationState evolve(const FewExcitationState& state, const ChainSystem& chain, double dt, double t_end)
{
    if (!(dt > 0)) throw config_error("time step must be positive");
    if (dt > max_step(chain) * (1 + 1e-12)) {
        throw config_error("time step " + std::to_string(dt) + " exceeds 0.01/max rate = "
                           + std::to_string(max_step(chain)));
    }
    if (t_end < state.t) throw config_error("t_end lies before the state time");
    const MatrixXcd M = generator(chain);
    const double span = t_end - state.t;
    const long k = span > 0 ? static_cast<long>(std::ceil(span / dt - 1e-9)) : 0;
    const double h = k > 0 ? span / k : 0.0;
    VectorXcd y = state.amplitudes;
    for (long i = 0; i < k; ++i) {
        const VectorXcd k1 = M * y;
        const VectorXcd k2 = M * (y + 0.5 * h * k1);
        const VectorXcd k3 = M * (y + 0.5 * h * k2);
        const VectorXcd k4 = M * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return {y, t_end};
}

FewExcitationState apply_channel(const FewExcitationState& state, const ChainSystem& chain, int channel)
{
    if (channel < 0 || channel >= static_cast<int>(chain.channels.size())) {
        throw config_error("channel " + std::to_string(channel) + " is not defined for this chain");
    }
    return {chain.channels[channel] * state.amplitudes, state.t};
}

CorrelationGrid correlation_surfaces(const ScenarioConfig& config, const std::vector<double>& t_axis,
                                     const std::vector<double>& tau_axis, double step_scale)
{
    const ScenarioConfig cfg = validate(config);
    if (cfg.photon_number != 2) throw config_error("correlation surfaces need photon_number 2");
    check_axis(t_axis, "t");
    check_axis(tau_axis, "tau");
    const ChainSystem c = build_chain(cfg);
    const MatrixXcd M = generator(c);
    const double limit = max_step(c);

    const std::size_t nt = t_axis.size();
    const std::size_t m = tau_axis.size();
    const int n = c.dimension();

    MatrixXcd psi(n, nt);
    {
        const auto P = axis_propagators(M, t_axis, limit, step_scale);
        VectorXcd y = c.initial;
        for (std::size_t i = 0; i < nt; ++i) {
            y = P[i] * y;
            psi.col(i) = y;
        }
    }

    double scale = 1.0;
    if (cfg.scenario == Scenario::EntangledSourceRouter) {
        // keep only histories where both photons entered the feeder
        double total = 0;
        for (double p : first_detection(c, cfg)) total += p;
        scale = 1.0 / total;
    }

    CorrelationGrid grid;
    grid.t_axis = t_axis;
    grid.tau_axis = tau_axis;
    for (auto& v : grid.values) v.assign(nt * m, 0.0);

    const auto P = axis_propagators(M, tau_axis, limit, step_scale);
    const int channels = static_cast<int>(c.channels.size());
    for (int x = 0; x < channels; ++x) {
        MatrixXcd phi = c.channels[x] * psi;
        for (std::size_t j = 0; j < m; ++j) {
            phi = P[j] * phi;
            for (int y = 0; y < channels; ++y) {
                const Eigen::VectorXd rate = (c.channels[y] * phi).colwise().squaredNorm().transpose();
                auto& out = grid.values[pair_index(x, y)];
                for (std::size_t i = 0; i < nt; ++i) out[i * m + j] = scale * rate(i);
            }
        }
    }
    return grid;
}

RoutingProbabilities probabilities(const ScenarioConfig& config, double step_scale)
{
    const ScenarioConfig cfg = validate(config);
    const auto axis = default_axis(cfg);
    return integrate_probabilities(correlation_surfaces(cfg, axis, axis, step_scale));
}

double first_detection_probability(const ScenarioConfig& config, int channel)
{
    const ScenarioConfig cfg = validate(config);
    const ChainSystem c = build_chain(cfg);
    if (channel < 0 || channel >= static_cast<int>(c.channels.size())) {
        throw config_error("channel " + std::to_string(channel) + " is not defined for this chain");
    }
    return first_detection(c, cfg)[channel];
}

analytic::BunchingRates bunching(const ScenarioConfig& config, double t)
{
    ScenarioConfig cfg = validate(config);
    if (cfg.scenario != Scenario::SingleSidedBunching) throw config_error("bunching rates need the single-sided scenario");
    const ChainSystem c = build_chain(cfg);
    const MatrixXcd M = generator(c);
    const MatrixXcd U = interval_propagator(M, t, max_step(c), 1.0);
    const MatrixXcd& O = c.channels[0];

    analytic::BunchingRates out;
    const VectorXcd psi = U * c.initial;
    const VectorXcd phi = O * psi;
    out.before = phi.squaredNorm() / psi.squaredNorm();
    out.after = (O * phi).squaredNorm() / phi.squaredNorm();

    VectorXcd lone = VectorXcd::Zero(c.dimension());
    lone(c.index({1, 0})) = 1.0;
    const VectorXcd one = U * lone;
    out.single = (O * one).squaredNorm() / one.squaredNorm();
    return out;
}

} // namespace pr::trajectory
