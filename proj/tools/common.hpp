#pragma once

#include "photon_router/photon_router.h"

#include <json.hpp>

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace prsim {

// Carries a library status out of nested helpers to the exit code.
struct Failure : std::runtime_error
{
    pr_status status;
    Failure(pr_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

inline void check(pr_status s)
{
    if (s != PR_OK) throw Failure(s, pr_last_error());
}

// Owning wrapper for a pr_config handle.
class Config
{
public:
    Config() { check(pr_config_create(&m_handle)); }
    Config(const Config& other) { check(pr_config_clone(other.m_handle, &m_handle)); }
    Config& operator=(const Config&) = delete;
    ~Config() { pr_config_destroy(m_handle); }

    pr_config* get() { return m_handle; }
    const pr_config* get() const { return m_handle; }

    void set(const std::string& key, const std::string& value) { check(pr_config_set(m_handle, key.c_str(), value.c_str())); }
    void set_sweep(const std::string& parameter, double value) { check(pr_config_set_sweep(m_handle, parameter.c_str(), value)); }
    double rate(const std::string& name) const
    {
        double v = 0;
        check(pr_config_get_rate(m_handle, name.c_str(), &v));
        return v;
    }
    std::string dump() const;
    nlohmann::ordered_json to_json() const;

private:
    pr_config* m_handle = nullptr;
};

std::string number(double v);
std::string probability_header(bool two_params);
std::string probability_row(const pr_probabilities& p);

pr_probabilities compute(const Config& config, pr_engine engine);

std::vector<double> spaced(double lo, double hi, int n, bool logarithmic);

// Writes one data file and its manifest <path>.manifest.json.
class Output
{
public:
    Output(std::string command, std::vector<std::string> argv);
    void write(const std::string& path, const std::string& data, const Config& config, pr_engine engine,
               const nlohmann::ordered_json& grids);

private:
    std::string m_command;
    std::vector<std::string> m_argv;
    std::chrono::steady_clock::time_point m_start;
};

// Figure datasets, numbered as the figure command expects.
void write_figure(int number, const std::string& directory, const Config& base, Output& out);

} // namespace prsim
