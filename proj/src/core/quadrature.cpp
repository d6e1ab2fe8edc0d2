#include "photon_router/core.hpp"

#include <cmath>

namespace pr {

std::vector<double> quadrature_weights(const std::vector<double>& axis)
{
    const std::size_t n = axis.size();
    std::vector<double> w(n, 0.0);
    if (n == 2) {
        w[0] = w[1] = 0.5 * (axis[1] - axis[0]);
        return w;
    }
    // Piecewise quadratic over interval pairs (Simpson on a nonuniform axis).
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) {
        const double h0 = axis[i + 1] - axis[i];
        const double h1 = axis[i + 2] - axis[i + 1];
        const double s = (h0 + h1) / 6.0;
        w[i] += s * (2.0 - h1 / h0);
        w[i + 1] += s * (h0 + h1) * (h0 + h1) / (h0 * h1);
        w[i + 2] += s * (2.0 - h0 / h1);
    }
    if (i + 1 < n) {
        // odd interval count: the last interval uses the parabola through
        // the final three points
        const double h0 = axis[n - 2] - axis[n - 3];
        const double h1 = axis[n - 1] - axis[n - 2];
        w[n - 3] += -h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
        w[n - 2] += h1 * (h1 + 3.0 * h0) / (6.0 * h0);
        w[n - 1] += h1 * (2.0 * h1 + 3.0 * h0) / (6.0 * (h0 + h1));
    }
    return w;
}

std::vector<double> graded_axis(double t_max, double t_scale, int n)
{
    std::vector<double> t(n);
    if (!(t_scale < t_max)) {
        for (int i = 0; i < n; ++i) t[i] = t_max * i / (n - 1);
        return t;
    }
    const double a = std::log1p(t_max / t_scale);
    for (int i = 0; i < n; ++i) {
        t[i] = t_scale * std::expm1(a * i / (n - 1));
    }
    t[n - 1] = t_max;
    return t;
}

RoutingProbabilities integrate_probabilities(const CorrelationGrid& grid)
{
    const std::size_t nt = grid.t_axis.size();
    const std::size_t ntau = grid.tau_axis.size();
    if (nt < 2 || ntau < 2) throw numerical_error("correlation grid needs at least two points per axis");
    for (std::size_t i = 1; i < nt; ++i) {
        if (!(grid.t_axis[i] > grid.t_axis[i - 1])) throw numerical_error("t axis is not strictly increasing");
    }
    for (std::size_t i = 1; i < ntau; ++i) {
        if (!(grid.tau_axis[i] > grid.tau_axis[i - 1])) throw numerical_error("tau axis is not strictly increasing");
    }
    const auto wt = quadrature_weights(grid.t_axis);
    const auto wtau = quadrature_weights(grid.tau_axis);

    double p[4];
    for (int k = 0; k < 4; ++k) {
        const auto& v = grid.values[k];
        if (v.size() != nt * ntau) throw numerical_error("surface size does not match its axes");
        double acc = 0;
        for (std::size_t i = 0; i < nt; ++i) {
            double row = 0;
            const double* r = v.data() + i * ntau;
            for (std::size_t j = 0; j < ntau; ++j) row += wtau[j] * r[j];
            acc += wt[i] * row;
        }
        if (!std::isfinite(acc)) throw numerical_error("correlation surface is not finite");
        p[k] = acc;
    }
    const double sum = p[TR] + p[RT] + p[RR] + p[TT];
    if (!(std::abs(sum - 1.0) <= norm_fail_tolerance)) {
        throw numerical_error("integrated probabilities sum to " + std::to_string(sum)
                              + "; the grid is under-resolved or truncated");
    }
    RoutingProbabilities out;
    if (std::abs(sum - 1.0) <= norm_tolerance) {
        out = make_probabilities(p[TR] / sum, p[RT] / sum, p[RR] / sum, p[TT] / sum);
        out.renormalized = true;
    } else {
        out = make_probabilities(p[TR], p[RT], p[RR], p[TT]);
    }
    out.raw_sum = sum;
    return out;
}

} // namespace pr
