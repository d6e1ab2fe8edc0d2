#include "photon_router/core.hpp"

#include <algorithm>
#include <cmath>

namespace pr {

RateSet RateSet::scaled(double lambda) const
{
    RateSet r = *this;
    for (const auto& name : rate_field_names()) {
        *rate_field(r, name) *= lambda;
    }
    return r;
}

const char* scenario_name(Scenario s)
{
    switch (s) {
    case Scenario::TwoLevelRouter: return "two-level";
    case Scenario::EntangledSourceRouter: return "entangled";
    case Scenario::TwoStageCascade: return "cascade";
    case Scenario::SingleSidedBunching: return "single-sided";
    case Scenario::LambdaRouter: return "lambda";
    }
    return "?";
}

Scenario scenario_from_name(const std::string& name)
{
    if (name == "two-level" || name == "TwoLevelRouter") return Scenario::TwoLevelRouter;
    if (name == "entangled" || name == "EntangledSourceRouter") return Scenario::EntangledSourceRouter;
    if (name == "cascade" || name == "TwoStageCascade") return Scenario::TwoStageCascade;
    if (name == "single-sided" || name == "SingleSidedBunching") return Scenario::SingleSidedBunching;
    if (name == "lambda" || name == "LambdaRouter") return Scenario::LambdaRouter;
    throw config_error("unknown scenario '" + name + "'");
}

const char* pulse_shape_name(PulseShape s)
{
    switch (s) {
    case PulseShape::Exponential: return "exponential";
    case PulseShape::Gaussian: return "gaussian";
    case PulseShape::Square: return "square";
    }
    return "?";
}

PulseShape pulse_shape_from_name(const std::string& name)
{
    if (name == "exponential") return PulseShape::Exponential;
    if (name == "gaussian") return PulseShape::Gaussian;
    if (name == "square") return PulseShape::Square;
    throw config_error("unknown pulse shape '" + name + "'");
}

RoutingProbabilities make_probabilities(double tr, double rt, double rr, double tt)
{
    RoutingProbabilities p;
    p.p_tr = tr;
    p.p_rt = rt;
    p.p_rr = rr;
    p.p_tt = tt;
    p.c_tr = tr + rt;
    p.raw_sum = tr + rt + rr + tt;
    return p;
}

const std::vector<std::string>& rate_field_names()
{
    static const std::vector<std::string> names = {
        "kappa_s", "gamma_c", "gamma_s", "gamma_c1", "gamma_c2", "gamma_cH",
        "gamma_cV", "gamma", "kappa_i", "kappa_ex", "g"};
    return names;
}

double* rate_field(RateSet& r, const std::string& name)
{
    if (name == "kappa_s") return &r.kappa_s;
    if (name == "gamma_c") return &r.gamma_c;
    if (name == "gamma_s") return &r.gamma_s;
    if (name == "gamma_c1") return &r.gamma_c1;
    if (name == "gamma_c2") return &r.gamma_c2;
    if (name == "gamma_cH") return &r.gamma_cH;
    if (name == "gamma_cV") return &r.gamma_cV;
    if (name == "gamma") return &r.gamma;
    if (name == "kappa_i") return &r.kappa_i;
    if (name == "kappa_ex") return &r.kappa_ex;
    if (name == "g") return &r.g;
    return nullptr;
}

double rate_value(const RateSet& r, const std::string& name)
{
    RateSet copy = r;
    const double* p = rate_field(copy, name);
    if (!p) throw config_error("unknown rate field '" + name + "'");
    return *p;
}

void apply_sweep_value(RateSet& r, const std::string& parameter, double value)
{
    const auto slash = parameter.find('/');
    if (slash == std::string::npos) {
        double* p = rate_field(r, parameter);
        if (!p) throw config_error("unknown sweep parameter '" + parameter + "'");
        *p = value;
        return;
    }
    const std::string num = parameter.substr(0, slash);
    const std::string den = parameter.substr(slash + 1);
    double* pn = rate_field(r, num);
    double* pd = rate_field(r, den);
    if (!pn || !pd) throw config_error("unknown sweep ratio '" + parameter + "'");
    if (!(*pd > 0)) throw config_error(den + " must be positive to sweep " + parameter);
    *pn = value * *pd;
}

SweepSpec make_sweep(const std::string& parameter, double lo, double hi, int n,
                     bool logarithmic, const RateSet& fixed)
{
    if (n < 1) throw config_error("sweep needs at least one point");
    if (n > 1 && !(hi > lo)) throw config_error("sweep range must be increasing");
    if (logarithmic && !(lo > 0)) throw config_error("logarithmic sweep needs a positive start");
    SweepSpec s;
    s.parameter = parameter;
    s.fixed = fixed;
    for (int i = 0; i < n; ++i) {
        const double u = n == 1 ? 0.0 : double(i) / (n - 1);
        s.values.push_back(logarithmic ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u);
    }
    RateSet probe = fixed;
    apply_sweep_value(probe, parameter, s.values.front());
    return s;
}

namespace {

void require_positive(const RateSet& r, const char* name)
{
    if (!(rate_value(r, name) > 0)) {
        throw config_error(std::string(name) + " must be positive");
    }
}

} // namespace

ScenarioConfig validate(const ScenarioConfig& config)
{
    ScenarioConfig c = config;
    RateSet& r = c.rates;
    for (const auto& name : rate_field_names()) {
        const double v = rate_value(r, name);
        if (std::isnan(v) || v < 0) throw config_error(name + " must be non-negative");
    }
    if (c.photon_number < 1) throw config_error("photon_number must be at least 1");
    if (c.scenario != Scenario::LambdaRouter && c.photon_number > 2) {
        throw config_error(std::string("photon_number must be 1 or 2 for scenario ")
                           + scenario_name(c.scenario));
    }
    if (c.quad_points < 16) throw config_error("quad_points must be at least 16");

    switch (c.scenario) {
    case Scenario::TwoLevelRouter:
        // The fast-cavity atom inherits gamma_c = g^2/kappa_ex when only the
        // microscopic rates are given.
        if (r.gamma_c == 0 && r.g > 0 && r.kappa_ex > 0) r.gamma_c = r.g * r.g / r.kappa_ex;
        require_positive(r, "kappa_s");
        require_positive(r, "gamma_c");
        break;
    case Scenario::EntangledSourceRouter:
        require_positive(r, "kappa_s");
        require_positive(r, "gamma_c");
        require_positive(r, "gamma_s");
        break;
    case Scenario::TwoStageCascade:
        require_positive(r, "kappa_s");
        require_positive(r, "gamma_c2");
        break;
    case Scenario::SingleSidedBunching:
        require_positive(r, "kappa_s");
        require_positive(r, "gamma_c1");
        break;
    case Scenario::LambdaRouter:
        require_positive(r, "gamma_cH");
        require_positive(r, "gamma_cV");
        break;
    }
    if (c.waveguide.points < 64) throw config_error("wg_points must be at least 64");
    if (!(c.waveguide.lt_cells >= 1.0)) throw config_error("wg_lt_cells must be at least 1");
    if (!(c.waveguide.fast_cavity_ratio > 0)) throw config_error("fast_cavity_ratio must be positive");
    return c;
}

std::pair<double, double> rate_scales(const ScenarioConfig& config)
{
    const RateSet& r = config.rates;
    std::vector<double> rates;
    switch (config.scenario) {
    case Scenario::TwoLevelRouter:
        rates = {r.kappa_s, 2 * r.gamma_c};
        break;
    case Scenario::EntangledSourceRouter:
        rates = {r.kappa_s, 2 * r.gamma_c, 2 * r.gamma_s};
        break;
    case Scenario::TwoStageCascade:
        rates = {r.kappa_s, 2 * r.gamma_c2};
        if (r.gamma_c1 > 0) rates.push_back(r.gamma_c1);
        break;
    case Scenario::SingleSidedBunching:
        rates = {r.kappa_s, r.gamma_c1};
        break;
    case Scenario::LambdaRouter:
        rates = {r.gamma_cH + r.gamma_cV};
        if (r.kappa_s > 0) rates.push_back(r.kappa_s);
        break;
    }
    const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
    return {*lo, *hi};
}

std::vector<double> default_axis(const ScenarioConfig& config)
{
    const auto [lo, hi] = rate_scales(config);
    return graded_axis(12.0 / lo, 1.0 / hi, config.quad_points);
}

} // namespace pr
