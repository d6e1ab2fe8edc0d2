#include "photon_router/waveguide.hpp"

#include <cmath>

namespace pr::waveguide {

using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

const double root2 = std::sqrt(2.0);

void step_one(WaveguideState& s, const WaveguideGrid& grid, const StepPropagator& prop)
{
    const int kr = s.n - grid.d_hi, wr = grid.right_band();
    const int kl = s.n + grid.e_lo, wl = grid.left_band();
    VectorXcd v(wr + wl + 3);
    v << s.psi_r.segment(kr, wr), s.psi_l.segment(kl, wl), s.sys;
    v = prop.one * v;
    s.psi_r.segment(kr, wr) = v.head(wr);
    s.psi_l.segment(kl, wl) = v.segment(wr, wl);
    s.sys = v.tail(3);
}

// Right spectators on labels [c0, c0 + m): the other excitation is in the
// band or the system.
void right_spectators(WaveguideState& s, const StepPropagator& prop, int kr, int wr, int kl, int wl, int c0, int m)
{
    if (m <= 0) return;
    MatrixXcd X(wr + wl + 3, m);
    X.topRows(wr) = root2 * s.rr.block(kr, c0, wr, m);
    X.middleRows(wr, wl) = s.rl.block(c0, kl, m, wl).transpose();
    X.bottomRows(3) = s.g_r.middleRows(c0, m).transpose();
    const MatrixXcd Y = prop.one * X;
    s.rr.block(kr, c0, wr, m) = Y.topRows(wr) / root2;
    s.rr.block(c0, kr, m, wr) = Y.topRows(wr).transpose() / root2;
    s.rl.block(c0, kl, m, wl) = Y.middleRows(wr, wl).transpose();
    s.g_r.middleRows(c0, m) = Y.bottomRows(3).transpose();
}

void left_spectators(WaveguideState& s, const StepPropagator& prop, int kr, int wr, int kl, int wl, int c0, int m)
{
    if (m <= 0) return;
    MatrixXcd X(wr + wl + 3, m);
    X.topRows(wr) = s.rl.block(kr, c0, wr, m);
    X.middleRows(wr, wl) = root2 * s.ll.block(kl, c0, wl, m);
    X.bottomRows(3) = s.g_l.middleRows(c0, m).transpose();
    const MatrixXcd Y = prop.one * X;
    s.rl.block(kr, c0, wr, m) = Y.topRows(wr);
    s.ll.block(kl, c0, wl, m) = Y.middleRows(wr, wl) / root2;
    s.ll.block(c0, kl, m, wl) = Y.middleRows(wr, wl).transpose() / root2;
    s.g_l.middleRows(c0, m) = Y.bottomRows(3).transpose();
}

// Both excitations in the band or the system. Pair amplitudes in the
// orthonormal basis, see the sector convention in the header.
void corner(WaveguideState& s, const StepPropagator& prop, int kr, int wr, int kl, int wl)
{
    const int a = wr + wl;
    auto label = [&](int orbital, bool& right) {
        right = orbital < wr;
        return right ? kr + orbital : kl + orbital - wr;
    };
    auto access = [&](int p, int q, double& scale) -> cd& {
        // p <= q in orbital order: right band, left band, a, b, sigma
        scale = 1.0;
        if (q < a) {
            bool rp, rq;
            const int kp = label(p, rp), kq = label(q, rq);
            if (rp && rq) {
                scale = p == q ? 1.0 : root2;
                return s.rr(kp, kq);
            }
            if (!rp && !rq) {
                scale = p == q ? 1.0 : root2;
                return s.ll(kp, kq);
            }
            return s.rl(kp, kq);
        }
        if (p < a) {
            bool rp;
            const int kp = label(p, rp);
            return rp ? s.g_r(kp, q - a) : s.g_l(kp, q - a);
        }
        // aa, bb, ab, a sigma, b sigma
        const int i = p - a, j = q - a;
        const int slot = i == j ? i : (j == 1 ? 2 : (i == 0 ? 3 : 4));
        return s.z(slot);
    };
    const int dim = static_cast<int>(prop.two_basis.size());
    VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        double scale;
        const cd amplitude = access(prop.two_basis[i].first, prop.two_basis[i].second, scale);
        v(i) = scale * amplitude;
    }
    v = prop.two * v;
    for (int i = 0; i < dim; ++i) {
        const auto [p, q] = prop.two_basis[i];
        double scale;
        cd& slot = access(p, q, scale);
        slot = v(i) / scale;
        if (q < a && p != q) {
            bool rp, rq;
            const int kp = label(p, rp), kq = label(q, rq);
            if (rp && rq) s.rr(kq, kp) = slot;
            if (!rp && !rq) s.ll(kq, kp) = slot;
        }
    }
}

void require_step(const WaveguideGrid& grid, double dt)
{
    if (!(dt > 0)) throw config_error("time step must be positive");
    if (dt > grid.ds * (1 + 1e-12)) {
        throw config_error("CFL violation: v_g dt = " + std::to_string(dt) + " exceeds dx = " + std::to_string(grid.ds));
    }
    if (dt < grid.ds * (1 - 1e-12)) {
        throw config_error("the label-frame transport moves exactly one cell per step; dt must equal dx");
    }
}

} // namespace

void step(WaveguideState& s, const WaveguideGrid& grid, const StepPropagator& prop, double dt)
{
    require_step(grid, dt);
    if (s.n > grid.n_last) throw numerical_error("the band reached the end of the label grid");
    if (s.photons == 1) {
        step_one(s, grid, prop);
    } else {
        const int kr = s.n - grid.d_hi, wr = grid.right_band();
        const int kl = s.n + grid.e_lo, wl = grid.left_band();
        // the order is free: the three updates touch disjoint amplitudes
        corner(s, prop, kr, wr, kl, wl);
        right_spectators(s, prop, kr, wr, kl, wl, 0, kr);
        right_spectators(s, prop, kr, wr, kl, wl, kr + wr, grid.points - kr - wr);
        // left labels beyond the band are emitted in the future and still empty
        left_spectators(s, prop, kr, wr, kl, wl, 0, kl);
    }
    ++s.n;
}

double effective_gamma_c(const ScenarioConfig& config)
{
    const RateSet& r = config.rates;
    if (config.waveguide.strong_coupling) return (r.kappa_ex + r.kappa_i + r.gamma) / 4;
    return r.g * r.g / r.kappa_ex;
}

WaveguideResult run(const ScenarioConfig& config, WaveguideState* final_state, WaveguideGrid* final_grid)
{
    const ScenarioConfig cfg = validate_waveguide(config);
    const WaveguideGrid grid = make_grid(cfg);
    const StepPropagator prop = make_propagator(cfg, grid);
    WaveguideState s = init_state(cfg, grid);

    const int passed = grid.pulse_first + grid.pulse_count - grid.d_lo + 1;
    const double stop_norm = 1e-6;
    while (s.n < passed || band_norm(s, grid) >= stop_norm) {
        if (s.n > grid.n_last) {
            throw numerical_error("boundary contamination: " + std::to_string(band_norm(s, grid))
                                  + " of the norm is still in the cavity at the end of the grid; increase wg_points");
        }
        step(s, grid, prop, grid.ds);
    }
    const double edge = edge_norm(s, grid, edge_cells);
    if (edge > 1e-6) {
        throw numerical_error("boundary contamination: norm within 5 cells of the grid edges is "
                              + std::to_string(edge));
    }

    WaveguideResult out;
    out.steps = s.n - grid.n_start;
    out.ds = grid.ds;
    out.detuning = cfg.waveguide.detuning;
    const double total = s.norm();
    out.loss = 1.0 - total;
    if (s.photons == 1) {
        out.transmitted = s.psi_r.squaredNorm();
        out.reflected = s.psi_l.squaredNorm();
        out.residual = s.sys.squaredNorm();
        out.probabilities = make_probabilities(0, 0, 0, 0);
        out.probabilities.raw_sum = out.transmitted + out.reflected;
        if (final_grid) *final_grid = grid;
        if (final_state) *final_state = std::move(s);
        return out;
    }
    double tr = 0, rt = 0;
    const int N = grid.points;
    for (int l = 0; l < N; ++l) {
        for (int r = 0; r < N; ++r) {
            const double p = std::norm(s.rl(r, l));
            // lower label = passed the cavity first = detected first
            if (r < l) tr += p;
            else if (r > l) rt += p;
            else { tr += p / 2; rt += p / 2; }
        }
    }
    out.probabilities = make_probabilities(tr, rt, s.ll.squaredNorm(), s.rr.squaredNorm());
    out.residual = s.g_r.squaredNorm() + s.g_l.squaredNorm() + s.z.squaredNorm();
    out.symmetry_error = std::max((s.rr - s.rr.transpose()).cwiseAbs().maxCoeff(),
                                  (s.ll - s.ll.transpose()).cwiseAbs().maxCoeff());
    if (final_grid) *final_grid = grid;
    if (final_state) *final_state = std::move(s);
    return out;
}

WaveguideResult strong_coupling_run(const ScenarioConfig& config, int detuning_sign)
{
    ScenarioConfig cfg = config;
    cfg.waveguide.strong_coupling = true;
    // the atom couples to (a + b)/sqrt2 with strength sqrt2 g
    cfg.waveguide.detuning = (detuning_sign >= 0 ? 1.0 : -1.0) * std::sqrt(2.0) * cfg.rates.g;
    return run(cfg);
}

std::vector<double> ring_down(const ScenarioConfig& config, int steps)
{
    ScenarioConfig cfg = validate_waveguide(config);
    cfg.photon_number = 1;
    const WaveguideGrid grid = make_grid(cfg);
    const StepPropagator prop = make_propagator(cfg, grid);
    WaveguideState s = init_excited(grid, ModeA);
    std::vector<double> out;
    out.reserve(steps);
    for (int i = 0; i < steps && s.n <= grid.n_last; ++i) {
        step(s, grid, prop, grid.ds);
        out.push_back(std::norm(s.sys(ModeA)));
    }
    return out;
}

} // namespace pr::waveguide
