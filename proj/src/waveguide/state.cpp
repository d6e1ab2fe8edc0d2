#include "photon_router/waveguide.hpp"

#include <cmath>
#include <fstream>

namespace pr::waveguide {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

ScenarioConfig validate_waveguide(const ScenarioConfig& config)
{
    ScenarioConfig c = config;
    const RateSet& r = c.rates;
    for (const auto& name : rate_field_names()) {
        const double v = rate_value(r, name);
        if (!(v >= 0)) throw config_error(name + " must be non-negative");
    }
    if (c.scenario != Scenario::TwoLevelRouter) {
        throw config_error("the waveguide engine models the two-level ring; scenario must be two-level");
    }
    if (c.photon_number != 1 && c.photon_number != 2) throw config_error("waveguide photon_number must be 1 or 2");
    if (!(r.kappa_s > 0)) throw config_error("kappa_s (pulse width) must be positive");
    if (!(r.kappa_ex > 0)) throw config_error("kappa_ex must be positive for the waveguide engine");
    if (c.waveguide.points < 64) throw config_error("wg_points must be at least 64");
    if (!(c.waveguide.lt_cells >= 1.0)) throw config_error("wg_lt_cells must be at least 1");
    if (c.waveguide.strong_coupling) {
        if (r.g < 5 * r.kappa_ex) throw config_error("strong coupling needs g >= 5 kappa_ex");
    } else if (r.kappa_ex < c.waveguide.fast_cavity_ratio * r.g) {
        throw config_error("fast-cavity regime needs kappa_ex >= " + std::to_string(c.waveguide.fast_cavity_ratio)
                           + " g");
    }
    if (c.rates.gamma_c == 0) c.rates.gamma_c = r.g * r.g / r.kappa_ex;
    return c;
}

std::vector<double> pulse_amplitudes(const ScenarioConfig& config, const WaveguideGrid& grid)
{
    const RateSet& r = config.rates;
    const double k = r.kappa_s;
    const double ds = grid.ds;
    const double support = grid.pulse_count * ds;
    // cell integrals of u(s), s measured from the pulse front
    auto cell = [&](double s0, double s1) {
        switch (config.waveguide.shape) {
        case PulseShape::Exponential:
            return std::sqrt(2 * k) * std::exp(-k * s0) * -std::expm1(-k * (s1 - s0)) / k;
        case PulseShape::Gaussian: {
            // |u|^2 has standard deviation w and HWHM 1/kappa_s
            const double w = 1.0 / (k * std::sqrt(2 * std::log(2.0)));
            const double c = 0.5 * support;
            return std::sqrt(M_PI) * w * (std::erf((s1 - c) / (2 * w)) - std::erf((s0 - c) / (2 * w)));
        }
        case PulseShape::Square: {
            const double lo = std::max(s0, 0.0), hi = std::min(s1, 2.0 / k);
            return std::max(0.0, hi - lo);
        }
        }
        return 0.0;
    };
    std::vector<double> u(grid.pulse_count);
    double total = 0;
    for (int i = 0; i < grid.pulse_count; ++i) {
        u[i] = cell(i * ds, (i + 1) * ds) / std::sqrt(ds);
        total += u[i] * u[i];
    }
    for (double& v : u) v /= std::sqrt(total);
    return u;
}

double WaveguideState::norm() const
{
    if (photons == 1) return psi_r.squaredNorm() + psi_l.squaredNorm() + sys.squaredNorm();
    return rr.squaredNorm() + ll.squaredNorm() + rl.squaredNorm() + g_r.squaredNorm() + g_l.squaredNorm()
           + z.squaredNorm();
}

namespace {

WaveguideState empty_state(const WaveguideGrid& grid, int photons)
{
    const int N = grid.points;
    WaveguideState s;
    s.photons = photons;
    s.n = grid.n_start;
    if (photons == 1) {
        s.psi_r = VectorXcd::Zero(N);
        s.psi_l = VectorXcd::Zero(N);
        s.sys = VectorXcd::Zero(3);
    } else {
        s.rr = MatrixXcd::Zero(N, N);
        s.ll = MatrixXcd::Zero(N, N);
        s.rl = MatrixXcd::Zero(N, N);
        s.g_r = MatrixXcd::Zero(N, 3);
        s.g_l = MatrixXcd::Zero(N, 3);
        s.z = VectorXcd::Zero(5);
    }
    return s;
}

} // namespace

WaveguideState init_state(const ScenarioConfig& config, const WaveguideGrid& grid)
{
    const auto u = pulse_amplitudes(config, grid);
    const int first = grid.pulse_first;
    const int count = grid.pulse_count;
    // the pulse must start on labels that have not reached the coupling band
    if (first <= grid.n_start - grid.d_lo) throw config_error("pulse overlaps the coupling region at t = 0");
    if (first + count + grid.right_band() >= grid.n_last) {
        throw config_error("pulse does not fit on the grid; increase wg_points");
    }
    WaveguideState s = empty_state(grid, config.photon_number);
    const Eigen::Map<const Eigen::VectorXd> v(u.data(), count);
    if (s.photons == 1) {
        s.psi_r.segment(first, count) = v.cast<std::complex<double>>();
    } else {
        s.rr.block(first, first, count, count) = (v * v.transpose()).cast<std::complex<double>>();
    }
    return s;
}

WaveguideState init_excited(const WaveguideGrid& grid, SystemMode mode)
{
    WaveguideState s = empty_state(grid, 1);
    s.sys(static_cast<int>(mode)) = 1.0;
    return s;
}

double band_norm(const WaveguideState& s, const WaveguideGrid& grid)
{
    const int kr = s.n - grid.d_hi, wr = grid.right_band();
    const int kl = s.n + grid.e_lo, wl = grid.left_band();
    if (s.photons == 1) {
        return s.sys.squaredNorm() + s.psi_r.segment(kr, wr).squaredNorm() + s.psi_l.segment(kl, wl).squaredNorm();
    }
    return s.g_r.squaredNorm() + s.g_l.squaredNorm() + s.z.squaredNorm()
           + s.rr.middleRows(kr, wr).squaredNorm() + s.rl.middleRows(kr, wr).squaredNorm()
           + s.ll.middleRows(kl, wl).squaredNorm() + s.rl.middleCols(kl, wl).squaredNorm();
}

double edge_norm(const WaveguideState& s, const WaveguideGrid& grid, int cells)
{
    const int N = grid.points;
    if (s.photons == 1) {
        return s.psi_r.head(cells).squaredNorm() + s.psi_r.tail(cells).squaredNorm()
               + s.psi_l.head(cells).squaredNorm() + s.psi_l.tail(cells).squaredNorm();
    }
    double total = 0;
    for (const MatrixXcd* m : {&s.rr, &s.ll, &s.rl}) {
        total += m->topRows(cells).squaredNorm() + m->bottomRows(cells).squaredNorm()
                 + m->middleRows(cells, N - 2 * cells).leftCols(cells).squaredNorm()
                 + m->middleRows(cells, N - 2 * cells).rightCols(cells).squaredNorm();
    }
    for (const MatrixXcd* m : {&s.g_r, &s.g_l}) {
        total += m->topRows(cells).squaredNorm() + m->bottomRows(cells).squaredNorm();
    }
    return total;
}

void write_snapshot(const std::string& path, const WaveguideState& s, const WaveguideGrid& grid)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write snapshot '" + path + "'");
    out.precision(17);
    out << "photon_router_snapshot 1\n";
    out << "points " << grid.points << "\n";
    out << "ds " << grid.ds << "\n";
    out << "lt " << grid.lt << "\n";
    out << "step " << s.n << "\n";
    out << "time " << (s.n - grid.n_start) * grid.ds << "\n";
    out << "photons " << s.photons << "\n";
    out << "label_origin_step " << grid.n_start << "\n";
    std::vector<std::pair<std::string, const Eigen::MatrixXcd*>> arrays;
    MatrixXcd r, l, sys, z;
    if (s.photons == 1) {
        r = s.psi_r;
        l = s.psi_l;
        sys = s.sys;
        arrays = {{"psi_r", &r}, {"psi_l", &l}, {"sys", &sys}};
    } else {
        z = s.z;
        arrays = {{"rr", &s.rr}, {"ll", &s.ll}, {"rl", &s.rl}, {"g_r", &s.g_r}, {"g_l", &s.g_l}, {"z", &z}};
    }
    for (const auto& [name, m] : arrays) out << "array " << name << " " << m->rows() << " " << m->cols() << "\n";
    out << "end\n";
    // column-major, as stored
    for (const auto& [name, m] : arrays) {
        out.write(reinterpret_cast<const char*>(m->data()), static_cast<std::streamsize>(m->size() * sizeof(std::complex<double>)));
    }
}

} // namespace pr::waveguide
