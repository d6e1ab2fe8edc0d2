#include "photon_router/photon_router.h"

#include "checks.hpp"
#include "photon_router/analytic.hpp"
#include "photon_router/core.hpp"
#include "photon_router/trajectory.hpp"
#include "photon_router/waveguide.hpp"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

struct pr_config
{
    pr::ScenarioConfig value;
};

struct pr_grid
{
    pr::CorrelationGrid value;
};

struct pr_report
{
    std::vector<pr::checks::CheckResult> entries;
};

namespace {

thread_local std::string g_last_error;

pr_status fail(pr_status status, const std::string& message)
{
    g_last_error = message;
    return status;
}

// Runs body, mapping exceptions to status codes.
template <class Body>
pr_status guarded(Body&& body)
{
    try {
        body();
        return PR_OK;
    } catch (const pr::Error& e) {
        return fail(e.kind() == pr::ErrorKind::Config ? PR_ERR_CONFIG : PR_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PR_ERR_INTERNAL, e.what());
    }
}

pr_probabilities to_c(const pr::RoutingProbabilities& p)
{
    return {p.p_tr, p.p_rt, p.p_rr, p.p_tt, p.c_tr, p.raw_sum, p.renormalized ? 1 : 0};
}

pr_waveguide_result to_c(const pr::waveguide::WaveguideResult& r)
{
    pr_waveguide_result out;
    out.probabilities = to_c(r.probabilities);
    out.transmitted = r.transmitted;
    out.reflected = r.reflected;
    out.loss = r.loss;
    out.residual = r.residual;
    out.symmetry_error = r.symmetry_error;
    out.ds = r.ds;
    out.detuning = r.detuning;
    out.steps = r.steps;
    return out;
}

#define PR_REQUIRE(cond, what) \
    do { if (!(cond)) return fail(PR_ERR_ARGUMENT, what); } while (0)

} // namespace

extern "C" {

const char* pr_version(void) { return PHOTON_ROUTER_VERSION; }

const char* pr_last_error(void) { return g_last_error.c_str(); }

const char* pr_engine_name(pr_engine engine)
{
    switch (engine) {
    case PR_ENGINE_ANALYTIC: return "analytic";
    case PR_ENGINE_TRAJECTORY: return "trajectory";
    case PR_ENGINE_WAVEGUIDE: return "waveguide";
    }
    return "?";
}

pr_status pr_engine_from_name(const char* name, pr_engine* out)
{
    PR_REQUIRE(name && out, "null argument");
    for (pr_engine e : {PR_ENGINE_ANALYTIC, PR_ENGINE_TRAJECTORY, PR_ENGINE_WAVEGUIDE}) {
        if (std::strcmp(name, pr_engine_name(e)) == 0) {
            *out = e;
            return PR_OK;
        }
    }
    return fail(PR_ERR_CONFIG, std::string("unknown engine '") + name + "'");
}

const char* pr_rate_name(int index)
{
    const auto& names = pr::rate_field_names();
    if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
    return names[index].c_str();
}

pr_status pr_config_create(pr_config** out)
{
    PR_REQUIRE(out, "null output handle");
    return guarded([&] { *out = new pr_config{}; });
}

void pr_config_destroy(pr_config* config) { delete config; }

pr_status pr_config_clone(const pr_config* config, pr_config** out)
{
    PR_REQUIRE(config && out, "null handle");
    return guarded([&] { *out = new pr_config{*config}; });
}

pr_status pr_config_set(pr_config* config, const char* key, const char* value)
{
    PR_REQUIRE(config && key && value, "null argument");
    return guarded([&] { pr::apply_setting(config->value, key, value); });
}

pr_status pr_config_set_rate(pr_config* config, const char* name, double value)
{
    PR_REQUIRE(config && name, "null argument");
    double* field = pr::rate_field(config->value.rates, name);
    if (!field) return fail(PR_ERR_CONFIG, std::string("unknown rate field '") + name + "'");
    *field = value;
    return PR_OK;
}

pr_status pr_config_get_rate(const pr_config* config, const char* name, double* out)
{
    PR_REQUIRE(config && name && out, "null argument");
    return guarded([&] { *out = pr::rate_value(config->value.rates, name); });
}

pr_status pr_config_set_sweep(pr_config* config, const char* parameter, double value)
{
    PR_REQUIRE(config && parameter, "null argument");
    return guarded([&] { pr::apply_sweep_value(config->value.rates, parameter, value); });
}

pr_status pr_config_parse(pr_config* config, const char* text)
{
    PR_REQUIRE(config && text, "null argument");
    return guarded([&] { config->value = pr::parse_config_text(text, config->value); });
}

pr_status pr_config_load(pr_config* config, const char* path)
{
    PR_REQUIRE(config && path, "null argument");
    return guarded([&] { config->value = pr::load_config_file(path, config->value); });
}

pr_status pr_config_validate(const pr_config* config)
{
    PR_REQUIRE(config, "null handle");
    return guarded([&] { pr::validate(config->value); });
}

pr_status pr_config_dump(const pr_config* config, char* buffer, size_t size, size_t* needed)
{
    PR_REQUIRE(config, "null handle");
    const std::string text = pr::format_config(config->value);
    if (needed) *needed = text.size() + 1;
    if (!buffer) return PR_OK;
    if (size < text.size() + 1) return fail(PR_ERR_ARGUMENT, "buffer too small for config text");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return PR_OK;
}

pr_status pr_probabilities_compute(const pr_config* config, pr_engine engine, pr_probabilities* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] {
        switch (engine) {
        case PR_ENGINE_ANALYTIC: *out = to_c(pr::analytic::probabilities(config->value)); break;
        case PR_ENGINE_TRAJECTORY: *out = to_c(pr::trajectory::probabilities(config->value)); break;
        case PR_ENGINE_WAVEGUIDE: *out = to_c(pr::waveguide::run(config->value).probabilities); break;
        default: throw pr::config_error("unknown engine");
        }
    });
}

pr_status pr_correlations(const pr_config* config, pr_engine engine, const double* t, size_t nt,
                          const double* tau, size_t ntau, pr_grid** out)
{
    PR_REQUIRE(config && out, "null argument");
    PR_REQUIRE((t == nullptr) == (tau == nullptr), "give both axes or neither");
    return guarded([&] {
        const pr::ScenarioConfig cfg = pr::validate(config->value);
        std::vector<double> ta, taua;
        if (t) {
            ta.assign(t, t + nt);
            taua.assign(tau, tau + ntau);
        } else {
            ta = taua = pr::default_axis(cfg);
        }
        auto grid = std::make_unique<pr_grid>();
        switch (engine) {
        case PR_ENGINE_ANALYTIC: grid->value = pr::analytic::correlation_surfaces(cfg, ta, taua); break;
        case PR_ENGINE_TRAJECTORY: grid->value = pr::trajectory::correlation_surfaces(cfg, ta, taua); break;
        default: throw pr::config_error("correlation surfaces come from the analytic or trajectory engine");
        }
        *out = grid.release();
    });
}

void pr_grid_destroy(pr_grid* grid) { delete grid; }

pr_status pr_grid_size(const pr_grid* grid, size_t* nt, size_t* ntau)
{
    PR_REQUIRE(grid && nt && ntau, "null argument");
    *nt = grid->value.t_axis.size();
    *ntau = grid->value.tau_axis.size();
    return PR_OK;
}

pr_status pr_grid_axes(const pr_grid* grid, const double** t, const double** tau)
{
    PR_REQUIRE(grid && t && tau, "null argument");
    *t = grid->value.t_axis.data();
    *tau = grid->value.tau_axis.data();
    return PR_OK;
}

pr_status pr_grid_values(const pr_grid* grid, pr_channel channel, const double** values)
{
    PR_REQUIRE(grid && values, "null argument");
    PR_REQUIRE(channel >= PR_TR && channel <= PR_TT, "channel out of range");
    *values = grid->value.values[channel].data();
    return PR_OK;
}

pr_status pr_grid_marginal(const pr_grid* grid, pr_channel channel, double* out, size_t size)
{
    PR_REQUIRE(grid && out, "null argument");
    PR_REQUIRE(channel >= PR_TR && channel <= PR_TT, "channel out of range");
    const auto& g = grid->value;
    PR_REQUIRE(size >= g.tau_axis.size(), "output shorter than the tau axis");
    return guarded([&] {
        const auto w = pr::quadrature_weights(g.t_axis);
        for (std::size_t j = 0; j < g.tau_axis.size(); ++j) {
            double s = 0;
            for (std::size_t i = 0; i < g.t_axis.size(); ++i) s += w[i] * g.at(channel, i, j);
            out[j] = s;
        }
    });
}

pr_status pr_grid_integrate(const pr_grid* grid, pr_probabilities* out)
{
    PR_REQUIRE(grid && out, "null argument");
    return guarded([&] { *out = to_c(pr::integrate_probabilities(grid->value)); });
}

pr_status pr_joint_amplitude(const pr_config* config, double t, double tau, double* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] {
        pr::ScenarioConfig cfg = config->value;
        cfg.scenario = pr::Scenario::SingleSidedBunching;
        cfg = pr::validate(cfg);
        if (t < 0 || tau < 0) throw pr::config_error("joint amplitude needs t >= 0 and tau >= 0");
        *out = pr::analytic::single_sided_joint_amplitude(cfg.rates, t, tau);
    });
}

pr_status pr_lambda_routing(const pr_config* config, pr_lambda_result* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] {
        pr::ScenarioConfig cfg = config->value;
        cfg.scenario = pr::Scenario::LambdaRouter;
        const auto r = pr::analytic::lambda_routing(pr::validate(cfg).rates);
        *out = {r.p_v, r.p_vh, r.p_hv, r.c_tr, r.p_sp, r.p_loss};
    });
}

pr_status pr_lambda_pv(const pr_config* config, int photons, double* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] {
        pr::ScenarioConfig cfg = config->value;
        cfg.scenario = pr::Scenario::LambdaRouter;
        *out = pr::analytic::lambda_pv(photons, pr::validate(cfg).rates);
    });
}

pr_status pr_bunching_rates(const pr_config* config, pr_engine engine, double t, pr_bunching* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] {
        pr::ScenarioConfig cfg = config->value;
        cfg.scenario = pr::Scenario::SingleSidedBunching;
        cfg = pr::validate(cfg);
        pr::analytic::BunchingRates b;
        switch (engine) {
        case PR_ENGINE_ANALYTIC: b = pr::analytic::single_sided_bunching(cfg.rates, t); break;
        case PR_ENGINE_TRAJECTORY: b = pr::trajectory::bunching(cfg, t); break;
        default: throw pr::config_error("bunching rates come from the analytic or trajectory engine");
        }
        *out = {b.before, b.after, b.single};
    });
}

pr_status pr_waveguide_run(const pr_config* config, const char* snapshot_path, pr_waveguide_result* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] {
        if (!snapshot_path) {
            *out = to_c(pr::waveguide::run(config->value));
            return;
        }
        pr::waveguide::WaveguideState final_state;
        pr::waveguide::WaveguideGrid grid;
        *out = to_c(pr::waveguide::run(config->value, &final_state, &grid));
        pr::waveguide::write_snapshot(snapshot_path, final_state, grid);
    });
}

pr_status pr_waveguide_strong_run(const pr_config* config, int sign, pr_waveguide_result* out)
{
    PR_REQUIRE(config && out, "null argument");
    PR_REQUIRE(sign == 1 || sign == -1, "sideband sign must be +1 or -1");
    return guarded([&] { *out = to_c(pr::waveguide::strong_coupling_run(config->value, sign)); });
}

pr_status pr_waveguide_effective_gamma_c(const pr_config* config, double* out)
{
    PR_REQUIRE(config && out, "null argument");
    return guarded([&] { *out = pr::waveguide::effective_gamma_c(config->value); });
}

pr_status pr_waveguide_ring_down(const pr_config* config, double* out, size_t steps, size_t* written, double* ds)
{
    PR_REQUIRE(config && out && written, "null argument");
    return guarded([&] {
        const auto values = pr::waveguide::ring_down(config->value, static_cast<int>(steps));
        std::copy(values.begin(), values.end(), out);
        *written = values.size();
        if (ds) *ds = pr::waveguide::make_grid(config->value).ds;
    });
}

pr_status pr_validate(int quick, pr_report** out)
{
    PR_REQUIRE(out, "null output handle");
    return guarded([&] {
        auto report = std::make_unique<pr_report>();
        report->entries = pr::checks::run_all(quick != 0);
        *out = report.release();
    });
}

void pr_report_destroy(pr_report* report) { delete report; }

size_t pr_report_count(const pr_report* report) { return report ? report->entries.size() : 0; }

pr_status pr_report_entry(const pr_report* report, size_t index, const char** name, int* passed, const char** detail)
{
    PR_REQUIRE(report, "null handle");
    PR_REQUIRE(index < report->entries.size(), "report index out of range");
    const auto& e = report->entries[index];
    if (name) *name = e.name.c_str();
    if (passed) *passed = e.passed ? 1 : 0;
    if (detail) *detail = e.detail.c_str();
    return PR_OK;
}

int pr_report_all_passed(const pr_report* report)
{
    if (!report) return 0;
    for (const auto& e : report->entries) {
        if (!e.passed) return 0;
    }
    return 1;
}

void pr_set_test_perturbation(double factor) { pr::analytic::set_test_perturbation(factor); }

} // extern "C"
