#include "photon_router/analytic.hpp"

#include <cmath>

namespace pr::analytic {

double lambda_pv(int n, const RateSet& r)
{
    const double k = r.kappa_s;
    const double h = r.gamma_cH;
    const double v = r.gamma_cV;
    const double bracket = (v - h) * (v - h) + (v + h) * (3.0 * n - 2) * k
                           + (2.0 * n - 1) * (n - 1) * k * k;
    return 1.0 / (1.0 + bracket / (4 * h * v));
}

LambdaResult lambda_routing(const RateSet& r)
{
    const double k = r.kappa_s;
    const double h = r.gamma_cH;
    const double v = r.gamma_cV;
    LambdaResult out;
    out.p_v = lambda_pv(1, r);
    out.p_vh = lambda_pv(2, r);
    out.p_hv = (k * (7 * v - h + 6 * k) + (v - h) * (v - h)) / ((k + h + v) * (h + v)) * out.p_vh;
    out.c_tr = out.p_vh + out.p_hv;
    // Spontaneous emission during the Raman transfer, weighted by the share
    // of the excited state's decay that is driven by the H photon.
    out.p_sp = 4 * r.gamma * h / ((h + v) * (h + v));
    if (r.kappa_i > 0 && r.kappa_ex <= 0) {
        throw config_error("kappa_ex must be positive when kappa_i is set");
    }
    out.p_loss = r.kappa_ex > 0 ? 4 * r.kappa_i / r.kappa_ex : 0.0;
    return out;
}

std::pair<double, double> lambda_amplitudes(int n, const RateSet& r, double t)
{
    const double k = r.kappa_s;
    const double alpha = conv({n * k}, t);
    const double beta = -2 * std::sqrt(n * k * r.gamma_cH)
                        * conv({n * k, (n - 1) * k + r.gamma_cH + r.gamma_cV}, t);
    return {alpha, beta};
}

} // namespace pr::analytic
