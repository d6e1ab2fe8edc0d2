#include "common.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace prsim {

std::string Config::dump() const
{
    size_t needed = 0;
    check(pr_config_dump(m_handle, nullptr, 0, &needed));
    std::string text(needed, '\0');
    check(pr_config_dump(m_handle, text.data(), text.size(), nullptr));
    text.resize(needed - 1);
    return text;
}

nlohmann::ordered_json Config::to_json() const
{
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    std::istringstream in(dump());
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        out[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return out;
}

std::string number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string probability_header(bool two_params)
{
    return two_params ? "param,param2,p_tr,p_rt,p_rr,p_tt,c_tr" : "param,p_tr,p_rt,p_rr,p_tt,c_tr";
}

std::string probability_row(const pr_probabilities& p)
{
    return number(p.p_tr) + "," + number(p.p_rt) + "," + number(p.p_rr) + "," + number(p.p_tt) + "," + number(p.c_tr);
}

pr_probabilities compute(const Config& config, pr_engine engine)
{
    pr_probabilities p;
    check(pr_probabilities_compute(config.get(), engine, &p));
    return p;
}

std::vector<double> spaced(double lo, double hi, int n, bool logarithmic)
{
    if (n < 1) throw Failure(PR_ERR_CONFIG, "a sweep needs at least one point");
    if (logarithmic && !(lo > 0 && hi > 0)) throw Failure(PR_ERR_CONFIG, "logarithmic sweeps need positive bounds");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        const double u = n == 1 ? 0.0 : double(i) / (n - 1);
        v[i] = logarithmic ? std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo))) : lo + u * (hi - lo);
    }
    return v;
}

Output::Output(std::string command, std::vector<std::string> argv) :
    m_command(std::move(command)), m_argv(std::move(argv)), m_start(std::chrono::steady_clock::now())
{}

void Output::write(const std::string& path, const std::string& data, const Config& config, pr_engine engine,
                   const nlohmann::ordered_json& grids)
{
    {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Failure(PR_ERR_CONFIG, "cannot write '" + path + "'");
        f << data;
    }
    nlohmann::ordered_json m;
    m["command"] = m_command;
    m["argv"] = m_argv;
    m["version"] = pr_version();
    m["engine"] = pr_engine_name(engine);
    m["config"] = config.to_json();
    m["grids"] = grids;
    m["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - m_start).count();
    m["outputs"] = {path};
    std::ofstream f(path + ".manifest.json");
    if (!f) throw Failure(PR_ERR_CONFIG, "cannot write '" + path + ".manifest.json'");
    f << m.dump(2) << "\n";
}

} // namespace prsim
