#include "common.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>

using namespace prsim;

namespace {

const char* const settings[] = {"scenario", "photon_number", "quad_points", "pulse", "detuning",
                                "wg_points", "wg_lt_cells", "wg_regime", "fast_cavity_ratio"};

std::string flag(const std::string& key)
{
    std::string dashed = key;
    for (char& c : dashed) {
        if (c == '_') c = '-';
    }
    return dashed == key ? "--" + key : "--" + dashed + ",--" + key;
}

// Options shared by every computing subcommand.
struct Common
{
    std::string config_file;
    std::string engine = "analytic";
    std::string out;
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> options;

    void attach(CLI::App* sub, bool with_engine = true)
    {
        sub->add_option("--config", config_file, "key = value config file; flags override it");
        if (with_engine) sub->add_option("--engine", engine, "analytic, trajectory or waveguide");
        sub->add_option("--out", out, "output file (a manifest is written alongside)");
        for (int i = 0; const char* name = pr_rate_name(i); ++i) {
            options.emplace_back(name, sub->add_option(flag(name), values[name], std::string("rate ") + name));
        }
        for (const char* key : settings) {
            options.emplace_back(key, sub->add_option(flag(key), values[key], key));
        }
    }

    Config resolve() const
    {
        Config c;
        if (!config_file.empty()) check(pr_config_load(c.get(), config_file.c_str()));
        for (const auto& [key, opt] : options) {
            if (opt->count() > 0) c.set(key, values.at(key));
        }
        return c;
    }

    pr_engine engine_id() const
    {
        pr_engine e;
        check(pr_engine_from_name(engine.c_str(), &e));
        return e;
    }
};

void emit(Output& output, const std::string& path, const std::string& data, const Config& config, pr_engine engine,
          const nlohmann::ordered_json& grids)
{
    if (path.empty()) {
        std::cout << data;
    } else {
        output.write(path, data, config, engine, grids);
    }
}

int cmd_probabilities(const Common& common, const std::string& snapshot, Output& output)
{
    const Config c = common.resolve();
    const pr_engine engine = common.engine_id();
    pr_probabilities p;
    std::string extra;
    if (engine == PR_ENGINE_WAVEGUIDE) {
        pr_waveguide_result r;
        check(pr_waveguide_run(c.get(), snapshot.empty() ? nullptr : snapshot.c_str(), &r));
        p = r.probabilities;
        char buf[256];
        std::snprintf(buf, sizeof buf, "loss      %.6g\nresidual  %.3g\nsteps     %d\ndx        %.6g\n", r.loss,
                      r.residual, r.steps, r.ds);
        extra = buf;
    } else {
        p = compute(c, engine);
    }
    std::printf("engine    %s\nP_tr      %.6f\nP_rt      %.6f\nP_rr      %.6f\nP_tt      %.6f\nC_tr      %.6f\n"
                "raw_sum   %.8f%s\n%s",
                pr_engine_name(engine), p.p_tr, p.p_rt, p.p_rr, p.p_tt, p.c_tr, p.raw_sum,
                p.renormalized ? " (renormalized)" : "", extra.c_str());
    if (!common.out.empty()) {
        const std::string data = "engine,p_tr,p_rt,p_rr,p_tt,c_tr\n" + std::string(pr_engine_name(engine)) + ","
                                 + probability_row(p) + "\n";
        output.write(common.out, data, c, engine, nlohmann::ordered_json::object());
    }
    return 0;
}

struct SweepAxis
{
    std::string parameter;
    double from = 0.1, to = 10;
    int points = 11;
    bool logarithmic = false;

    nlohmann::ordered_json describe() const
    {
        return {{"parameter", parameter}, {"from", from}, {"to", to}, {"points", points},
                {"spacing", logarithmic ? "log" : "linear"}};
    }
};

int cmd_sweep(const Common& common, const SweepAxis& a, const SweepAxis& b, Output& output)
{
    const Config base = common.resolve();
    const pr_engine engine = common.engine_id();
    const bool two = !b.parameter.empty();
    std::string data = probability_header(two) + "\n";
    for (double x : spaced(a.from, a.to, a.points, a.logarithmic)) {
        Config c(base);
        c.set_sweep(a.parameter, x);
        if (!two) {
            data += number(x) + "," + probability_row(compute(c, engine)) + "\n";
            continue;
        }
        for (double y : spaced(b.from, b.to, b.points, b.logarithmic)) {
            Config d(c);
            d.set_sweep(b.parameter, y);
            data += number(x) + "," + number(y) + "," + probability_row(compute(d, engine)) + "\n";
        }
    }
    nlohmann::ordered_json grids = {{"param", a.describe()}};
    if (two) grids["param2"] = b.describe();
    emit(output, common.out, data, base, engine, grids);
    return 0;
}

struct CorrelationOptions
{
    std::string mode = "grid";
    double t_max = 0, tau_max = 0;
    int nt = 201, ntau = 201;
};

int cmd_correlations(const Common& common, const CorrelationOptions& o, Output& output)
{
    const Config c = common.resolve();
    const pr_engine engine = common.engine_id();
    std::string data;
    nlohmann::ordered_json grids;
    if (o.mode == "joint") {
        const double k = c.rate("kappa_s");
        if (!(k > 0)) throw Failure(PR_ERR_CONFIG, "kappa_s must be positive");
        const double t_max = o.t_max > 0 ? o.t_max : 6.0 / k;
        const auto axis = spaced(0, t_max, o.nt, false);
        data = "t1,t2,density\n";
        for (double t1 : axis) {
            for (double t2 : axis) {
                double f = 0;
                check(pr_joint_amplitude(c.get(), std::min(t1, t2), std::abs(t2 - t1), &f));
                data += number(t1) + "," + number(t2) + "," + number(f * f) + "\n";
            }
        }
        grids = {{"t1", {{"from", 0}, {"to", t_max}, {"points", o.nt}}}, {"t2", "same as t1"}};
        emit(output, common.out, data, c, engine, grids);
        return 0;
    }
    if (o.mode != "grid" && o.mode != "marginals") throw Failure(PR_ERR_CONFIG, "mode must be grid, marginals or joint");

    std::vector<double> t, tau;
    const bool custom = o.t_max > 0 || o.tau_max > 0;
    pr_grid* raw = nullptr;
    if (custom) {
        if (o.mode == "marginals" && o.t_max <= 0) {
            // the t integration keeps the default graded axis
            pr_grid* probe = nullptr;
            check(pr_correlations(c.get(), engine, nullptr, 0, nullptr, 0, &probe));
            const double *pt, *ptau;
            size_t nt, ntau;
            pr_grid_size(probe, &nt, &ntau);
            pr_grid_axes(probe, &pt, &ptau);
            t.assign(pt, pt + nt);
            pr_grid_destroy(probe);
        } else {
            t = spaced(0, o.t_max > 0 ? o.t_max : o.tau_max, o.nt, false);
        }
        tau = spaced(0, o.tau_max > 0 ? o.tau_max : o.t_max, o.ntau, false);
        check(pr_correlations(c.get(), engine, t.data(), t.size(), tau.data(), tau.size(), &raw));
    } else {
        check(pr_correlations(c.get(), engine, nullptr, 0, nullptr, 0, &raw));
    }
    std::unique_ptr<pr_grid, decltype(&pr_grid_destroy)> grid(raw, pr_grid_destroy);
    size_t nt, ntau;
    const double *pt, *ptau;
    pr_grid_size(grid.get(), &nt, &ntau);
    pr_grid_axes(grid.get(), &pt, &ptau);
    grids = {{"t", {{"points", nt}, {"from", pt[0]}, {"to", pt[nt - 1]}}},
             {"tau", {{"points", ntau}, {"from", ptau[0]}, {"to", ptau[ntau - 1]}}}};

    if (o.mode == "marginals") {
        std::vector<double> m[4];
        for (int ch = 0; ch < 4; ++ch) {
            m[ch].resize(ntau);
            check(pr_grid_marginal(grid.get(), static_cast<pr_channel>(ch), m[ch].data(), ntau));
        }
        data = "tau,rr,rt,tr,tt\n";
        for (size_t j = 0; j < ntau; ++j) {
            data += number(ptau[j]) + "," + number(m[PR_RR][j]) + "," + number(m[PR_RT][j]) + "," + number(m[PR_TR][j])
                    + "," + number(m[PR_TT][j]) + "\n";
        }
    } else {
        const double* v[4];
        for (int ch = 0; ch < 4; ++ch) pr_grid_values(grid.get(), static_cast<pr_channel>(ch), &v[ch]);
        data = "t,tau,tr,rt,rr,tt\n";
        for (size_t i = 0; i < nt; ++i) {
            for (size_t j = 0; j < ntau; ++j) {
                const size_t k = i * ntau + j;
                data += number(pt[i]) + "," + number(ptau[j]) + "," + number(v[PR_TR][k]) + "," + number(v[PR_RT][k])
                        + "," + number(v[PR_RR][k]) + "," + number(v[PR_TT][k]) + "\n";
            }
        }
    }
    emit(output, common.out, data, c, engine, grids);
    return 0;
}

int cmd_validate(bool quick, const std::string& json_path, double perturb)
{
    if (perturb != 1.0) pr_set_test_perturbation(perturb);
    pr_report* raw = nullptr;
    check(pr_validate(quick ? 1 : 0, &raw));
    std::unique_ptr<pr_report, decltype(&pr_report_destroy)> report(raw, pr_report_destroy);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (size_t i = 0; i < pr_report_count(report.get()); ++i) {
        const char *name, *detail;
        int passed;
        pr_report_entry(report.get(), i, &name, &passed, &detail);
        std::printf("%s %-36s %s\n", passed ? "PASS" : "FAIL", name, detail);
        j.push_back({{"name", name}, {"passed", passed != 0}, {"detail", detail}});
    }
    const bool ok = pr_report_all_passed(report.get());
    std::printf("%zu checks, %s\n", pr_report_count(report.get()), ok ? "all passed" : "FAILURES");
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw Failure(PR_ERR_CONFIG, "cannot write '" + json_path + "'");
        f << nlohmann::ordered_json{{"version", pr_version()}, {"passed", ok}, {"checks", j}}.dump(2) << "\n";
    }
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-photon routing statistics for cavity-QED photon routers"};
    app.set_version_flag("--version", std::string(pr_version()));
    app.require_subcommand(1);
    std::vector<std::string> args(argv, argv + argc);

    Common common;
    auto* probabilities = app.add_subcommand("probabilities", "P_tr, P_rt, P_rr, P_tt and C_tr for one configuration");
    common.attach(probabilities);
    std::string snapshot;
    probabilities->add_option("--snapshot", snapshot, "waveguide only: write the final state to this file");

    Common sweep_common;
    SweepAxis axis1, axis2;
    auto* sweep = app.add_subcommand("sweep", "probabilities over a 1D or 2D parameter grid, as CSV");
    sweep_common.attach(sweep);
    sweep->add_option("--param", axis1.parameter, "rate name or num/den ratio")->required();
    sweep->add_option("--from", axis1.from);
    sweep->add_option("--to", axis1.to);
    sweep->add_option("--points", axis1.points);
    sweep->add_flag("--log", axis1.logarithmic, "logarithmic spacing");
    sweep->add_option("--param2", axis2.parameter, "second sweep parameter (inner loop)");
    sweep->add_option("--from2", axis2.from);
    sweep->add_option("--to2", axis2.to);
    sweep->add_option("--points2", axis2.points);
    sweep->add_flag("--log2", axis2.logarithmic);

    Common corr_common;
    CorrelationOptions corr;
    auto* correlations = app.add_subcommand("correlations", "two-time correlation surfaces or their marginals");
    corr_common.attach(correlations);
    correlations->add_option("--mode", corr.mode, "grid (t,tau,...), marginals (tau,rr,rt,tr,tt) or joint (|f|^2)");
    correlations->add_option("--t-max", corr.t_max, "uniform t axis extent (default: graded axis)");
    correlations->add_option("--tau-max", corr.tau_max, "uniform tau axis extent");
    correlations->add_option("--nt", corr.nt);
    correlations->add_option("--ntau", corr.ntau);

    Common fig_common;
    int figure_number = 0;
    std::string out_dir = ".";
    auto* figure = app.add_subcommand("figure", "datasets behind one figure (3, 4, 5, 6, 7, 8 or 10)");
    fig_common.attach(figure, false);
    figure->add_option("number", figure_number)->required()->check(CLI::IsMember({3, 4, 5, 6, 7, 8, 10}));
    figure->add_option("--out-dir", out_dir, "directory for the CSV files and manifests");

    bool quick = false;
    std::string report_json;
    double perturb = 1.0;
    auto* validate = app.add_subcommand("validate", "run the named oracle and invariant checks");
    validate->add_flag("--quick", quick, "skip the slower waveguide comparisons");
    validate->add_option("--json", report_json, "also write the report as JSON");
    validate->add_option("--perturb", perturb, "test fixture: scale one closed-form coefficient")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string command = args.size() > 1 ? args[1] : "";
        Output output(command, args);
        if (*probabilities) return cmd_probabilities(common, snapshot, output);
        if (*sweep) return cmd_sweep(sweep_common, axis1, axis2, output);
        if (*correlations) return cmd_correlations(corr_common, corr, output);
        if (*figure) {
            write_figure(figure_number, out_dir, fig_common.resolve(), output);
            return 0;
        }
        if (*validate) return cmd_validate(quick, report_json, perturb);
    } catch (const Failure& f) {
        std::fprintf(stderr, "error: %s\n", f.what());
        return f.status == PR_ERR_NUMERICAL || f.status == PR_ERR_INTERNAL ? 2 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
