#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pr {

// All rates share one dimensionless unit; times are in its inverse.
struct RateSet
{
    double kappa_s = 0.0;
    double gamma_c = 0.0;
    double gamma_s = 0.0;
    double gamma_c1 = 0.0;
    double gamma_c2 = 0.0;
    double gamma_cH = 0.0;
    double gamma_cV = 0.0;
    double gamma = 0.0;
    double kappa_i = 0.0;
    double kappa_ex = 0.0;
    double g = 0.0;

    RateSet scaled(double lambda) const;
};

enum class Scenario {
    TwoLevelRouter,
    EntangledSourceRouter,
    TwoStageCascade,
    SingleSidedBunching,
    LambdaRouter
};

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

enum class PulseShape { Exponential, Gaussian, Square };

const char* pulse_shape_name(PulseShape s);
PulseShape pulse_shape_from_name(const std::string& name);

// Waveguide-only settings. Widths come from kappa_s: 1/kappa_s for the
// exponential decay, intensity HWHM for Gaussian and square pulses.
struct WaveguideOptions
{
    PulseShape shape = PulseShape::Exponential;
    double detuning = 0.0;      // carrier minus cavity frequency
    int points = 2048;          // photon labels along the grid
    double lt_cells = 2.0;      // interaction length in grid cells
    bool strong_coupling = false;
    double fast_cavity_ratio = 5.0;
};

struct ScenarioConfig
{
    Scenario scenario = Scenario::TwoLevelRouter;
    RateSet rates;
    int photon_number = 2;
    int quad_points = 600;
    WaveguideOptions waveguide;
};

struct RoutingProbabilities
{
    double p_tr = 0.0;
    double p_rt = 0.0;
    double p_rr = 0.0;
    double p_tt = 0.0;
    double c_tr = 0.0;
    double raw_sum = 1.0;   // sum before any renormalization
    bool renormalized = false;
};

RoutingProbabilities make_probabilities(double tr, double rt, double rr, double tt);

// Surfaces are stored row-major, index it*tau.size() + itau.
enum Channel2 { TR = 0, RT = 1, RR = 2, TT = 3 };

struct CorrelationGrid
{
    std::vector<double> t_axis;
    std::vector<double> tau_axis;
    std::array<std::vector<double>, 4> values;

    double at(int which, std::size_t it, std::size_t itau) const
    {
        return values[which][it * tau_axis.size() + itau];
    }
};

struct SweepSpec
{
    std::string parameter;          // field name or "num/den"
    std::vector<double> values;
    RateSet fixed;
};

enum class ErrorKind { Config = 1, Numerical = 2 };

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what) :
        std::runtime_error(what), m_kind(kind)
    {}
    ErrorKind kind() const { return m_kind; }
private:
    ErrorKind m_kind;
};

inline Error config_error(const std::string& msg) { return Error(ErrorKind::Config, msg); }
inline Error numerical_error(const std::string& msg) { return Error(ErrorKind::Numerical, msg); }

ScenarioConfig validate(const ScenarioConfig& config);

// Rate-field access by name, shared by the config parser and sweeps.
double* rate_field(RateSet& r, const std::string& name);
double rate_value(const RateSet& r, const std::string& name);
const std::vector<std::string>& rate_field_names();

// Sets a value of the form "a" or "num/den" on a RateSet, the latter by
// scaling the numerator against the fixed denominator.
void apply_sweep_value(RateSet& r, const std::string& parameter, double value);
SweepSpec make_sweep(const std::string& parameter, double lo, double hi, int n,
                     bool logarithmic, const RateSet& fixed);

// key=value text, '#' comments. Keys are RateSet field names plus
// scenario, photon_number, quad_points and the waveguide settings.
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value);
ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});
std::string format_config(const ScenarioConfig& config);

constexpr double norm_tolerance = 1e-3;
constexpr double norm_fail_tolerance = 5e-2;

// Composite Simpson weights over a strictly increasing, possibly graded
// axis; any point count >= 2.
std::vector<double> quadrature_weights(const std::vector<double>& axis);

// Axis t = t_scale*(e^{a u} - 1) on [0, t_max] for uniform u: fine below
// t_scale, geometric beyond it, so every exponential between the two scales
// is resolved with a similar number of points per e-fold.
std::vector<double> graded_axis(double t_max, double t_scale, int n);

// Slowest and fastest decay rates that shape the correlation surfaces.
std::pair<double, double> rate_scales(const ScenarioConfig& config);
std::vector<double> default_axis(const ScenarioConfig& config);

RoutingProbabilities integrate_probabilities(const CorrelationGrid& grid);

} // namespace pr
