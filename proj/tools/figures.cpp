#include "common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>

namespace prsim {

namespace {

using json = nlohmann::ordered_json;

json axis_json(const std::string& parameter, double lo, double hi, int n, bool logarithmic)
{
    return {{"parameter", parameter}, {"from", lo}, {"to", hi}, {"points", n},
            {"spacing", logarithmic ? "log" : "linear"}};
}

// Fresh copy of the base config with every rate cleared, so each figure
// sets exactly the rates it is defined by while numerical settings carry over.
Config figure_config(const Config& base, const std::string& scenario)
{
    Config c(base);
    for (int i = 0; const char* name = pr_rate_name(i); ++i) check(pr_config_set_rate(c.get(), name, 0.0));
    c.set("scenario", scenario);
    c.set("photon_number", "2");
    return c;
}

void rate(Config& c, const char* name, double v)
{
    check(pr_config_set_rate(c.get(), name, v));
}

void figure3(const std::string& dir, const Config& base, Output& out)
{
    Config c = figure_config(base, "two-level");
    rate(c, "gamma_c", 1.0);
    const int n = 121;
    std::string data = probability_header(false) + "\n";
    for (double x : spaced(0.01, 100, n, true)) {
        Config d(c);
        d.set_sweep("kappa_s/gamma_c", x);
        data += number(x) + "," + probability_row(compute(d, PR_ENGINE_ANALYTIC)) + "\n";
    }
    out.write(dir + "/fig3.csv", data, c, PR_ENGINE_ANALYTIC, {{"param", axis_json("kappa_s/gamma_c", 0.01, 100, n, true)}});
}

void figure4(const std::string& dir, const Config& base, Output& out)
{
    const struct { const char* panel; double kappa_s; } panels[] = {{"a", 0.05}, {"b", 5.0}, {"c", 1.5}};
    for (const auto& p : panels) {
        Config c = figure_config(base, "two-level");
        rate(c, "gamma_c", 1.0);
        rate(c, "kappa_s", p.kappa_s);

        // t keeps the default graded axis so the marginals integrate accurately
        pr_grid* probe = nullptr;
        check(pr_correlations(c.get(), PR_ENGINE_ANALYTIC, nullptr, 0, nullptr, 0, &probe));
        std::unique_ptr<pr_grid, decltype(&pr_grid_destroy)> held(probe, pr_grid_destroy);
        size_t nt, ntau;
        const double *pt, *ptau;
        check(pr_grid_size(probe, &nt, &ntau));
        check(pr_grid_axes(probe, &pt, &ptau));
        const std::vector<double> t(pt, pt + nt);

        const double tau_max = 6.0 / std::min(p.kappa_s, 1.0);
        const int m = 241;
        const auto tau = spaced(0, tau_max, m, false);
        pr_grid* raw = nullptr;
        check(pr_correlations(c.get(), PR_ENGINE_ANALYTIC, t.data(), t.size(), tau.data(), tau.size(), &raw));
        std::unique_ptr<pr_grid, decltype(&pr_grid_destroy)> grid(raw, pr_grid_destroy);

        std::vector<double> v[4];
        for (int ch = 0; ch < 4; ++ch) {
            v[ch].resize(m);
            check(pr_grid_marginal(raw, static_cast<pr_channel>(ch), v[ch].data(), m));
        }
        std::string data = "tau,rr,rt,tr,tt\n";
        for (int j = 0; j < m; ++j) {
            data += number(tau[j]) + "," + number(v[PR_RR][j]) + "," + number(v[PR_RT][j]) + "," + number(v[PR_TR][j])
                    + "," + number(v[PR_TT][j]) + "\n";
        }
        const json grids = {{"t", {{"points", nt}, {"from", t.front()}, {"to", t.back()}, {"spacing", "graded"}}},
                            {"tau", axis_json("tau", 0, tau_max, m, false)}};
        out.write(dir + "/fig4" + p.panel + ".csv", data, c, PR_ENGINE_ANALYTIC, grids);
    }
}

void figure5(const std::string& dir, const Config& base, Output& out)
{
    const double kappa_ex = 1.0, g = 0.14;
    const int n = 10;
    const double lo = 0.2, hi = 10;
    const auto ratios = spaced(lo, hi, n, true);
    const json grids = {{"param", axis_json("kappa_s/gamma_c", lo, hi, n, true)}};

    Config reference = figure_config(base, "two-level");
    rate(reference, "gamma_c", g * g / kappa_ex);
    std::string data = probability_header(false) + "\n";
    for (double x : spaced(lo, hi, 61, true)) {
        Config d(reference);
        d.set_sweep("kappa_s/gamma_c", x);
        data += number(x) + "," + probability_row(compute(d, PR_ENGINE_ANALYTIC)) + "\n";
    }
    out.write(dir + "/fig5_analytic.csv", data, reference, PR_ENGINE_ANALYTIC,
              {{"param", axis_json("kappa_s/gamma_c", lo, hi, 61, true)}});

    for (const char* shape : {"exponential", "gaussian", "square"}) {
        Config c = figure_config(base, "two-level");
        rate(c, "kappa_ex", kappa_ex);
        rate(c, "g", g);
        rate(c, "gamma_c", g * g / kappa_ex);
        c.set("pulse", shape);
        std::string rows = probability_header(false) + ",loss\n";
        for (double x : ratios) {
            Config d(c);
            d.set_sweep("kappa_s/gamma_c", x);
            pr_waveguide_result r;
            check(pr_waveguide_run(d.get(), nullptr, &r));
            rows += number(x) + "," + probability_row(r.probabilities) + "," + number(r.loss) + "\n";
        }
        out.write(dir + "/fig5_" + shape + ".csv", rows, c, PR_ENGINE_WAVEGUIDE, grids);
    }
}

void figure6(const std::string& dir, const Config& base, Output& out)
{
    Config c = figure_config(base, "entangled");
    rate(c, "gamma_c", 1.0);
    const int n = 41;
    std::string data = probability_header(true) + "\n";
    for (double x : spaced(0.1, 10, n, true)) {
        for (double y : spaced(1, 1000, n, true)) {
            // both axes share kappa_s, so the second one sets gamma_s = kappa_s / y
            Config d(c);
            rate(d, "kappa_s", x);
            rate(d, "gamma_s", x / y);
            data += number(x) + "," + number(y) + "," + probability_row(compute(d, PR_ENGINE_ANALYTIC)) + "\n";
        }
    }
    const json grids = {{"param", axis_json("kappa_s/gamma_c", 0.1, 10, n, true)},
                        {"param2", axis_json("kappa_s/gamma_s", 1, 1000, n, true)}};
    out.write(dir + "/fig6.csv", data, c, PR_ENGINE_ANALYTIC, grids);
}

void rate_surface(const std::string& path, Config& c, const char* a, const char* b, int n, Output& out)
{
    std::string data = probability_header(true) + "\n";
    const auto axis = spaced(0.1, 10, n, true);
    for (double x : axis) {
        for (double y : axis) {
            Config d(c);
            rate(d, a, x);
            rate(d, b, y);
            data += number(x) + "," + number(y) + "," + probability_row(compute(d, PR_ENGINE_ANALYTIC)) + "\n";
        }
    }
    const json grids = {{"param", axis_json(std::string(a) + "/kappa_s", 0.1, 10, n, true)},
                        {"param2", axis_json(std::string(b) + "/kappa_s", 0.1, 10, n, true)}};
    out.write(path, data, c, PR_ENGINE_ANALYTIC, grids);
}

void figure7(const std::string& dir, const Config& base, Output& out)
{
    Config c = figure_config(base, "cascade");
    rate(c, "kappa_s", 1.0);
    rate_surface(dir + "/fig7.csv", c, "gamma_c1", "gamma_c2", 31, out);
}

void figure8(const std::string& dir, const Config& base, Output& out)
{
    Config c = figure_config(base, "single-sided");
    rate(c, "kappa_s", 1.0);
    rate(c, "gamma_c1", 5.0);
    const int n = 121;
    const double t_max = 6.0;
    const auto axis = spaced(0, t_max, n, false);
    std::string data = "t1,t2,density\n";
    for (double t1 : axis) {
        for (double t2 : axis) {
            double f = 0;
            check(pr_joint_amplitude(c.get(), std::min(t1, t2), std::abs(t2 - t1), &f));
            data += number(t1) + "," + number(t2) + "," + number(f * f) + "\n";
        }
    }
    const json grids = {{"t1", axis_json("t1", 0, t_max, n, false)}, {"t2", axis_json("t2", 0, t_max, n, false)}};
    out.write(dir + "/fig8.csv", data, c, PR_ENGINE_ANALYTIC, grids);
}

void figure10(const std::string& dir, const Config& base, Output& out)
{
    Config c = figure_config(base, "lambda");
    rate(c, "kappa_s", 1.0);
    rate_surface(dir + "/fig10.csv", c, "gamma_cH", "gamma_cV", 41, out);
}

} // namespace

void write_figure(int number, const std::string& directory, const Config& base, Output& out)
{
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw Failure(PR_ERR_CONFIG, "cannot create '" + directory + "': " + ec.message());
    switch (number) {
    case 3: figure3(directory, base, out); break;
    case 4: figure4(directory, base, out); break;
    case 5: figure5(directory, base, out); break;
    case 6: figure6(directory, base, out); break;
    case 7: figure7(directory, base, out); break;
    case 8: figure8(directory, base, out); break;
    case 10: figure10(directory, base, out); break;
    default: throw Failure(PR_ERR_CONFIG, "no dataset for figure " + std::to_string(number));
    }
}

} // namespace prsim
