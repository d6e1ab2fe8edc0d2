#include "photon_router/analytic.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

namespace pr::analytic {

namespace {
std::atomic<double> g_perturbation{1.0};
}

void set_test_perturbation(double factor) { g_perturbation = factor; }
double test_perturbation() { return g_perturbation; }

double conv(std::initializer_list<double> rates, double t)
{
    const std::vector<double> x(rates);
    const int n = static_cast<int>(x.size());
    if (n == 1) return std::exp(-x[0] * t);
    if (n == 2) {
        // e^{-lo t} (1 - e^{-d t}) / d with d >= 0, exact through d = 0
        const double lo = std::min(x[0], x[1]);
        const double d = std::abs(x[1] - x[0]);
        if (d == 0) return t * std::exp(-lo * t);
        return std::exp(-lo * t) * (-std::expm1(-d * t)) / d;
    }
    // Opitz: f(J) for the bidiagonal J = -diag(x) + superdiag(1) holds the
    // divided differences of f in its first row. Shifting by the slowest rate
    // keeps the matrix exponential away from underflow at long times.
    const double slowest = *std::min_element(x.begin(), x.end());
    const double scale = std::exp(-slowest * t);
    if (scale == 0) return 0;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = -(x[i] - slowest) * t;
        if (i + 1 < n) J(i, i + 1) = t;
    }
    const Eigen::MatrixXd E = J.exp();
    return scale * E(0, n - 1);
}

} // namespace pr::analytic
