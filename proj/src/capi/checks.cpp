#include "checks.hpp"

#include "photon_router/analytic.hpp"
#include "photon_router/trajectory.hpp"
#include "photon_router/waveguide.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

namespace pr::checks {

namespace {

double max_delta(const RoutingProbabilities& a, const RoutingProbabilities& b)
{
    return std::max({std::abs(a.p_tr - b.p_tr), std::abs(a.p_rt - b.p_rt), std::abs(a.p_rr - b.p_rr),
                     std::abs(a.p_tt - b.p_tt)});
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

ScenarioConfig scenario(Scenario s, RateSet r)
{
    ScenarioConfig c;
    c.scenario = s;
    c.rates = r;
    return c;
}

RateSet rates(std::initializer_list<std::pair<const char*, double>> values)
{
    RateSet r;
    for (const auto& [name, v] : values) *rate_field(r, name) = v;
    return r;
}

// Worst closed-form vs trajectory deviation over kappa_s/base.
double oracle_sweep(Scenario s, RateSet base, const std::vector<double>& kappas)
{
    double worst = 0;
    for (double k : kappas) {
        base.kappa_s = k;
        const auto cfg = scenario(s, base);
        worst = std::max(worst, max_delta(analytic::probabilities(cfg), trajectory::probabilities(cfg)));
    }
    return worst;
}

CheckResult oracle_check(const std::string& name, Scenario s, RateSet base)
{
    const double worst = oracle_sweep(s, base, {0.2, 1.0, 4.0});
    return {name, worst <= 1e-4, fmt("max |dP| = %.2e (tolerance 1e-4)", worst)};
}

ScenarioConfig fig5(double ratio, PulseShape shape = PulseShape::Exponential)
{
    ScenarioConfig c;
    c.rates.kappa_ex = 1.0;
    c.rates.g = 0.14;
    c.rates.kappa_s = ratio * c.rates.g * c.rates.g;
    c.waveguide.shape = shape;
    return c;
}

} // namespace

std::vector<CheckResult> run_all(bool quick)
{
    std::vector<std::function<CheckResult()>> checks;

    checks.push_back([] {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            RateSet r;
            r.kappa_s = std::pow(10.0, u(rng));
            r.gamma_c = std::pow(10.0, u(rng));
            r.gamma_s = std::pow(10.0, u(rng));
            worst = std::max(worst, std::abs(analytic::two_level_probabilities(r).raw_sum - 1));
            worst = std::max(worst, std::abs(analytic::entangled_source_probabilities(r).raw_sum - 1));
        }
        return CheckResult{"closed_form_normalization", worst <= 1e-12, fmt("max |sum-1| = %.2e", worst)};
    });

    checks.push_back([] {
        double worst = 0;
        for (double k : {0.1, 1.0, 7.0}) {
            const auto cfg = scenario(Scenario::TwoLevelRouter, rates({{"kappa_s", k}, {"gamma_c", 1.0}}));
            const auto axis = default_axis(cfg);
            const auto q = integrate_probabilities(analytic::correlation_surfaces(cfg, axis, axis));
            worst = std::max(worst, max_delta(q, analytic::probabilities(cfg)));
        }
        return CheckResult{"surfaces_integrate_to_closed_form", worst <= 1e-6, fmt("max |dP| = %.2e (tolerance 1e-6)", worst)};
    });

    checks.push_back([] { return oracle_check("trajectory_two_level", Scenario::TwoLevelRouter, rates({{"gamma_c", 1.0}})); });
    checks.push_back([] {
        return oracle_check("trajectory_entangled_source", Scenario::EntangledSourceRouter,
                            rates({{"gamma_c", 1.0}, {"gamma_s", 0.5}}));
    });
    checks.push_back([] {
        return oracle_check("trajectory_cascade", Scenario::TwoStageCascade,
                            rates({{"gamma_c1", 1.5}, {"gamma_c2", 1.0}}));
    });
    checks.push_back([] {
        return oracle_check("trajectory_lambda", Scenario::LambdaRouter,
                            rates({{"gamma_cH", 1.0}, {"gamma_cV", 0.7}}));
    });

    checks.push_back([] {
        const auto cfg = scenario(Scenario::TwoLevelRouter, rates({{"kappa_s", 1.3}, {"gamma_c", 1.0}}));
        const std::vector<double> t = {0.0, 0.3, 1.0, 2.5}, tau = {0.0, 0.4, 1.5};
        const auto a = analytic::correlation_surfaces(cfg, t, tau);
        const auto b = trajectory::correlation_surfaces(cfg, t, tau);
        double worst = 0, scale = 0;
        for (int ch = 0; ch < 4; ++ch) {
            for (std::size_t i = 0; i < a.values[ch].size(); ++i) {
                worst = std::max(worst, std::abs(a.values[ch][i] - b.values[ch][i]));
                scale = std::max(scale, std::abs(a.values[ch][i]));
            }
        }
        return CheckResult{"trajectory_surfaces_two_level", worst <= 1e-6 * scale,
                           fmt("max |dGamma| = %.2e of peak %.3f", worst, scale)};
    });

    checks.push_back([] {
        const auto cfg = scenario(Scenario::SingleSidedBunching, rates({{"kappa_s", 0.2}, {"gamma_c1", 1.0}}));
        double worst = 0;
        for (double t : {0.5, 2.0, 6.0}) {
            const auto a = analytic::single_sided_bunching(cfg.rates, t);
            const auto b = trajectory::bunching(cfg, t);
            worst = std::max({worst, std::abs(a.before - b.before) / a.before, std::abs(a.after - b.after) / a.after,
                              std::abs(a.single - b.single) / a.single});
        }
        return CheckResult{"trajectory_single_sided_rates", worst <= 1e-6, fmt("max relative difference %.2e", worst)};
    });

    checks.push_back([] {
        double worst = 0;
        for (double k : {0.05, 1.0, 5.0}) {
            const auto cfg = scenario(Scenario::TwoLevelRouter, rates({{"kappa_s", k}, {"gamma_c", 1.0}}));
            const std::vector<double> t = {0.1, 1.0, 4.0}, tau = {0.0};
            for (const auto& g : {analytic::correlation_surfaces(cfg, t, tau), trajectory::correlation_surfaces(cfg, t, tau)}) {
                for (double v : g.values[RR]) worst = std::max(worst, std::abs(v));
            }
        }
        return CheckResult{"rr_antibunching", worst <= 1e-12, fmt("max Gamma_rr(t,0) = %.2e", worst)};
    });

    checks.push_back([] {
        const RateSet r = rates({{"kappa_s", 0.8}, {"gamma_c2", 1.0}});
        RateSet two = rates({{"kappa_s", 0.8}, {"gamma_c", 1.0}});
        const double d = max_delta(analytic::cascade_probabilities(r), analytic::two_level_probabilities(two));
        return CheckResult{"cascade_two_level_limit", d <= 1e-4, fmt("gamma_c1 = 0 vs two-level: max |dP| = %.2e", d)};
    });

    checks.push_back([] {
        double worst = 0;
        // at kappa_s = 2 gamma_c both node pairs of the closed form coincide
        for (double k : {2.0}) {
            RateSet r = rates({{"kappa_s", k}, {"gamma_c", 1.0}});
            const auto mid = analytic::two_level_correlations(r, 1.1, 0.7);
            for (double e : {-1e-7, 1e-7}) {
                r.kappa_s = k * (1 + e);
                const auto side = analytic::two_level_correlations(r, 1.1, 0.7);
                for (int ch = 0; ch < 4; ++ch) worst = std::max(worst, std::abs(side[ch] - mid[ch]));
            }
        }
        return CheckResult{"degenerate_limit_continuity", worst <= 1e-6, fmt("max jump %.2e", worst)};
    });

    checks.push_back([] {
        double best = 0, at = 0;
        for (int i = 0; i <= 4000; ++i) {
            const double k = std::pow(10.0, -1.0 + 2.0 * i / 4000);
            const double c = analytic::two_level_probabilities(rates({{"kappa_s", k}, {"gamma_c", 1.0}})).c_tr;
            if (c > best) { best = c; at = k; }
        }
        const bool ok = std::abs(best - 0.640) <= 0.005 && at >= 1.2 && at <= 1.6;
        return CheckResult{"two_level_maximum", ok, fmt("max C_tr = %.5f at kappa_s/gamma_c = %.4f", best, at)};
    });

    checks.push_back([] {
        const auto b = analytic::single_sided_bunching(rates({{"kappa_s", 1e-5}, {"gamma_c1", 1.0}}), 20.0);
        const double after = b.after / b.before, single = b.after / b.single;
        const bool ok = std::abs(after - 4.5) <= 0.05 && std::abs(single - 9.0) <= 0.2;
        return CheckResult{"bunching_factors", ok, fmt("after/before %.4f, after/single %.4f", after, single)};
    });

    checks.push_back([] {
        const auto l = analytic::lambda_routing(rates({{"kappa_s", 1e-3}, {"gamma_cH", 1.0}, {"gamma_cV", 1.0}}));
        return CheckResult{"lambda_ideal_router", l.c_tr >= 0.999, fmt("C_tr = %.6f at kappa_s = 1e-3 gamma_c", l.c_tr)};
    });

    checks.push_back([] {
        ScenarioConfig c = scenario(Scenario::TwoLevelRouter, rates({{"kappa_s", 1.0}}));
        try {
            validate(c);
        } catch (const Error& e) {
            const bool ok = e.kind() == ErrorKind::Config && std::string(e.what()).find("gamma_c") != std::string::npos;
            return CheckResult{"missing_rate_reported", ok, e.what()};
        }
        return CheckResult{"missing_rate_reported", false, "validation accepted a config without gamma_c"};
    });

    checks.push_back([] {
        ScenarioConfig c = fig5(1.0);
        c.rates.g = 0;
        c.waveguide.points = 512;
        const auto r = waveguide::run(c);
        const double d = std::abs(r.probabilities.p_tt - 1);
        return CheckResult{"waveguide_free_passage", d <= 1e-8, fmt("g = 0: |P_tt - 1| = %.2e", d)};
    });

    checks.push_back([] {
        ScenarioConfig c;
        c.rates = rates({{"kappa_ex", 1.0}, {"kappa_s", 1.0}});
        const auto cfg = waveguide::validate_waveguide(c);
        const auto grid = waveguide::make_grid(cfg);
        const auto pop = waveguide::ring_down(cfg, 2000);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (pop[i] > 0.5 || pop[i] < 1e-3) continue;
            const double t = (i + 1) * grid.ds, y = std::log(pop[i]);
            sx += t; sy += y; sxx += t * t; sxy += t * y; ++n;
        }
        const double rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double rel = std::abs(rate / 2.0 - 1);
        return CheckResult{"waveguide_ring_down", rel <= 0.02, fmt("fitted |a|^2 decay %.5f, expected 2 kappa_ex = 2 (%.2f%%)", rate, 100 * rel)};
    });

    checks.push_back([] {
        ScenarioConfig c = fig5(1.4);
        c.waveguide.points = 512;
        const auto r = waveguide::run(c);
        const bool ok = std::abs(r.loss) <= 1e-6 && r.symmetry_error <= 1e-10;
        return CheckResult{"waveguide_norm_and_symmetry", ok,
                           fmt("lossless norm change %.2e, exchange asymmetry %.1e", r.loss, r.symmetry_error)};
    });

    if (!quick) {
        checks.push_back([] {
            ScenarioConfig c = fig5(1.4);
            const auto r = waveguide::run(c);
            ScenarioConfig a = scenario(Scenario::TwoLevelRouter, rates({{"kappa_s", c.rates.kappa_s}, {"gamma_c", 0.0196}}));
            const double d = max_delta(r.probabilities, analytic::probabilities(a));
            return CheckResult{"waveguide_vs_closed_form", d <= 0.02, fmt("exponential pulse at kappa_s = 1.4 gamma_c: max |dP| = %.4f", d)};
        });
        checks.push_back([] {
            ScenarioConfig c;
            c.rates = rates({{"kappa_ex", 1.0}, {"g", 10.0}});
            c.waveguide.strong_coupling = true;
            c.rates.kappa_s = 1.4 * waveguide::effective_gamma_c(c);
            const auto up = waveguide::strong_coupling_run(c, +1);
            const auto down = waveguide::strong_coupling_run(c, -1);
            const double d = max_delta(up.probabilities, down.probabilities);
            return CheckResult{"waveguide_sideband_symmetry", d <= 1e-3, fmt("upper vs lower sideband: max |dP| = %.2e", d)};
        });
    }

    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        try {
            out.push_back(checks[i]());
        } catch (const std::exception& e) {
            out.push_back({"check_" + std::to_string(i + 1), false, std::string("threw: ") + e.what()});
        }
    }
    return out;
}

} // namespace pr::checks
