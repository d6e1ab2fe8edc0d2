#include "photon_router/waveguide.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

#include <cmath>
#include <complex>

namespace pr::waveguide {

using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

const cd I(0.0, 1.0);

// Smallest integer strictly above x, and largest strictly below, with a
// little slack so exact crossings land on step boundaries.
int above(double x) { return static_cast<int>(std::floor(x + 1e-9)) + 1; }
int below(double x) { return static_cast<int>(std::ceil(x - 1e-9)) - 1; }

struct Orbitals
{
    int right, left;
    int a() const { return right + left; }
    int b() const { return right + left + 1; }
    int sigma() const { return right + left + 2; }
    int count() const { return right + left + 3; }
};

// Single-excitation Hamiltonian at intra-step time tau. Right band index i
// is label n - d_hi + i, left band index j is label n + e_lo + j.
MatrixXcd one_hamiltonian(const ScenarioConfig& cfg, const WaveguideGrid& grid, double tau)
{
    const RateSet& r = cfg.rates;
    const Orbitals o{grid.right_band(), grid.left_band()};
    MatrixXcd h = MatrixXcd::Zero(o.count(), o.count());
    const double root = std::sqrt(grid.ds) * grid.coupling;
    for (int i = 0; i < o.right; ++i) {
        const double c = root * grid.chi((grid.d_hi - i) * grid.ds + tau);
        h(i, o.a()) = h(o.a(), i) = c;
    }
    for (int j = 0; j < o.left; ++j) {
        const double c = root * grid.chi((grid.e_lo + j) * grid.ds - tau);
        h(o.right + j, o.b()) = h(o.b(), o.right + j) = c;
    }
    // rotating frame at the carrier; the atom sits on the cavity resonance
    const double delta = -cfg.waveguide.detuning;
    h(o.a(), o.a()) = h(o.b(), o.b()) = cd(delta, -r.kappa_i);
    h(o.sigma(), o.sigma()) = cd(delta, -r.gamma);
    h(o.a(), o.sigma()) = h(o.sigma(), o.a()) = r.g;
    h(o.b(), o.sigma()) = h(o.sigma(), o.b()) = r.g;
    return h;
}

std::vector<std::pair<int, int>> pair_basis(const Orbitals& o)
{
    std::vector<std::pair<int, int>> basis;
    for (int p = 0; p < o.count(); ++p) {
        for (int q = p; q < o.count(); ++q) {
            if (p == o.sigma() && q == o.sigma()) continue;     // two-level atom
            basis.emplace_back(p, q);
        }
    }
    return basis;
}

// Second quantization of h on the pair basis: bosonic orbitals plus the
// hard-core atom.
Eigen::SparseMatrix<cd> two_hamiltonian(const MatrixXcd& h, const Orbitals& o,
                                        const std::vector<std::pair<int, int>>& basis,
                                        const std::vector<std::vector<int>>& lookup)
{
    std::vector<Eigen::Triplet<cd>> entries;
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
        const auto [p, q] = basis[col];
        const int movers[2] = {p, q};
        for (int m = 0; m < (p == q ? 1 : 2); ++m) {
            const int from = movers[m];
            const int rest = movers[1 - m];
            const double remove = p == q ? std::sqrt(2.0) : 1.0;
            for (int to = 0; to < o.count(); ++to) {
                const cd v = h(to, from);
                if (v == cd(0)) continue;
                double add = 1.0;
                if (to == rest) {
                    if (to == o.sigma()) continue;
                    add = std::sqrt(2.0);
                }
                const int row = lookup[std::min(to, rest)][std::max(to, rest)];
                entries.emplace_back(row, col, v * remove * add);
            }
        }
    }
    const int n = static_cast<int>(basis.size());
    Eigen::SparseMatrix<cd> H(n, n);
    H.setFromTriplets(entries.begin(), entries.end());
    return H;
}

template <class Generator>
MatrixXcd rk4_propagator(int dim, double length, int substeps, Generator&& apply)
{
    MatrixXcd U = MatrixXcd::Identity(dim, dim);
    const double h = length / substeps;
    for (int s = 0; s < substeps; ++s) {
        const double t = s * h;
        const MatrixXcd k1 = apply(t, U);
        const MatrixXcd k2 = apply(t + 0.5 * h, U + 0.5 * h * k1);
        const MatrixXcd k3 = apply(t + 0.5 * h, U + 0.5 * h * k2);
        const MatrixXcd k4 = apply(t + h, U + h * k3);
        U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return U;
}

} // namespace

double WaveguideGrid::chi(double x) const
{
    if (std::abs(x) >= half_support) return 0.0;
    const double z = sigma * std::sqrt(2 * M_PI) * std::erf(3.0 / std::sqrt(2.0));
    return std::exp(-x * x / (2 * sigma * sigma)) / z;
}

double slowest_decay(const ScenarioConfig& config)
{
    const RateSet& r = config.rates;
    const double delta = -config.waveguide.detuning;
    Eigen::Matrix3cd h;
    h << cd(delta, -(r.kappa_ex + r.kappa_i)), 0.0, r.g,
         0.0, cd(delta, -(r.kappa_ex + r.kappa_i)), r.g,
         r.g, r.g, cd(delta, -r.gamma);
    const Eigen::Vector3cd ev = Eigen::ComplexEigenSolver<Eigen::Matrix3cd>(h).eigenvalues();
    const double scale = r.kappa_ex + r.kappa_i + r.gamma + r.g;
    double slowest = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double rate = -2 * ev(i).imag();
        // modes that never couple to the fiber (the atom at g = 0) stay empty
        if (rate > 1e-9 * scale && (slowest == 0.0 || rate < slowest)) slowest = rate;
    }
    return slowest;
}

StepPropagator make_propagator(const ScenarioConfig& config, const WaveguideGrid& grid)
{
    const Orbitals o{grid.right_band(), grid.left_band()};
    StepPropagator prop;
    prop.two_basis = pair_basis(o);

    const double norm = one_hamiltonian(config, grid, 0.5 * grid.ds).cwiseAbs().rowwise().sum().maxCoeff();
    // the pair block norm is at most twice the single-particle one
    prop.substeps = std::max(64, static_cast<int>(std::ceil(2 * norm * grid.ds / 0.05)));

    prop.one = rk4_propagator(o.count(), grid.ds, prop.substeps, [&](double tau, const MatrixXcd& U) {
        return MatrixXcd(-I * (one_hamiltonian(config, grid, tau) * U));
    });
    if (config.photon_number < 2) return prop;

    std::vector<std::vector<int>> lookup(o.count(), std::vector<int>(o.count(), -1));
    for (int i = 0; i < static_cast<int>(prop.two_basis.size()); ++i) {
        lookup[prop.two_basis[i].first][prop.two_basis[i].second] = i;
    }
    const int dim = static_cast<int>(prop.two_basis.size());
    prop.two = rk4_propagator(dim, grid.ds, prop.substeps, [&](double tau, const MatrixXcd& U) {
        const auto H = two_hamiltonian(one_hamiltonian(config, grid, tau), o, prop.two_basis, lookup);
        return MatrixXcd(-I * (H * U));
    });
    return prop;
}

WaveguideGrid make_grid(const ScenarioConfig& config)
{
    const ScenarioConfig cfg = validate_waveguide(config);
    const RateSet& r = cfg.rates;
    const WaveguideOptions& w = cfg.waveguide;

    WaveguideGrid grid;
    grid.points = w.points;
    grid.coupling = std::sqrt(2 * r.kappa_ex);

    // band offsets depend only on L_T in cells
    const double reach = 1.5 * w.lt_cells;     // 3 sigma / ds
    grid.d_lo = above(-reach - 1);
    grid.d_hi = below(reach);
    grid.e_lo = above(-reach);
    grid.e_hi = below(reach + 1);
    // the band never reaches the edge cells the contamination check watches
    grid.n_start = edge_cells + std::max(grid.d_hi, -grid.e_lo);
    grid.pulse_first = grid.n_start - grid.d_lo + 2;

    double support = 0;
    switch (w.shape) {
    case PulseShape::Exponential: support = 8.0 / r.kappa_s; break;
    case PulseShape::Gaussian: support = 12.0 / (r.kappa_s * std::sqrt(2 * std::log(2.0))); break;
    case PulseShape::Square: support = 2.0 / r.kappa_s; break;
    }
    const double tail = 16.0 / slowest_decay(cfg);
    const int margin = 8;
    const int budget = grid.points - grid.pulse_first - grid.right_band() - grid.left_band() - 2 * margin - edge_cells;
    if (budget < 32) throw config_error("wg_points is too small for the coupling band");
    grid.ds = (support + tail) / budget;
    grid.lt = w.lt_cells * grid.ds;
    grid.sigma = grid.lt / 2;
    grid.half_support = 3 * grid.sigma;
    grid.pulse_count = std::max(1, static_cast<int>(std::ceil(support / grid.ds - 1e-9)));
    grid.n_last = grid.points - 1 - edge_cells - std::max(grid.e_hi, -grid.d_lo);
    return grid;
}

} // namespace pr::waveguide
