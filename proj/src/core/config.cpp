#include "photon_router/core.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pr {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw config_error(key + ": expected a number, got '" + value + "'");
    }
    if (used != value.size()) throw config_error(key + ": expected a number, got '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value)
{
    const double v = parse_number(key, value);
    if (v != static_cast<double>(static_cast<int>(v))) {
        throw config_error(key + ": expected an integer, got '" + value + "'");
    }
    return static_cast<int>(v);
}

std::string number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void apply_setting(ScenarioConfig& config, const std::string& raw_key, const std::string& raw_value)
{
    std::string key = trim(raw_key);
    std::replace(key.begin(), key.end(), '-', '_');
    const std::string value = trim(raw_value);

    if (double* field = rate_field(config.rates, key)) {
        *field = parse_number(key, value);
    } else if (key == "scenario") {
        config.scenario = scenario_from_name(value);
    } else if (key == "photon_number") {
        config.photon_number = parse_int(key, value);
    } else if (key == "quad_points") {
        config.quad_points = parse_int(key, value);
    } else if (key == "pulse" || key == "wg_pulse") {
        config.waveguide.shape = pulse_shape_from_name(value);
    } else if (key == "detuning" || key == "wg_detuning") {
        config.waveguide.detuning = parse_number(key, value);
    } else if (key == "wg_points") {
        config.waveguide.points = parse_int(key, value);
    } else if (key == "wg_lt_cells") {
        config.waveguide.lt_cells = parse_number(key, value);
    } else if (key == "wg_regime") {
        if (value == "fast") config.waveguide.strong_coupling = false;
        else if (value == "strong") config.waveguide.strong_coupling = true;
        else throw config_error("wg_regime must be 'fast' or 'strong'");
    } else if (key == "fast_cavity_ratio") {
        config.waveguide.fast_cavity_ratio = parse_number(key, value);
    } else {
        throw config_error("unknown config key '" + key + "'");
    }
}

ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("line " + std::to_string(lineno) + ": expected key = value");
        }
        try {
            apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
        } catch (const Error& e) {
            throw config_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base)
{
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), base);
}

std::string format_config(const ScenarioConfig& c)
{
    std::ostringstream out;
    out << "scenario = " << scenario_name(c.scenario) << "\n";
    out << "photon_number = " << c.photon_number << "\n";
    out << "quad_points = " << c.quad_points << "\n";
    for (const auto& name : rate_field_names()) {
        out << name << " = " << number(rate_value(c.rates, name)) << "\n";
    }
    out << "wg_pulse = " << pulse_shape_name(c.waveguide.shape) << "\n";
    out << "wg_detuning = " << number(c.waveguide.detuning) << "\n";
    out << "wg_points = " << c.waveguide.points << "\n";
    out << "wg_lt_cells = " << number(c.waveguide.lt_cells) << "\n";
    out << "wg_regime = " << (c.waveguide.strong_coupling ? "strong" : "fast") << "\n";
    out << "fast_cavity_ratio = " << number(c.waveguide.fast_cavity_ratio) << "\n";
    return out.str();
}

} // namespace pr
