#ifndef PHOTON_ROUTER_H
#define PHOTON_ROUTER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PR_BUILDING_LIBRARY)
#    define PR_API __declspec(dllexport)
#  else
#    define PR_API __declspec(dllimport)
#  endif
#else
#  define PR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure pr_last_error() holds the message
 * for the calling thread until its next failing call. */
typedef enum pr_status {
    PR_OK = 0,
    PR_ERR_CONFIG = 1,      /* invalid input or configuration */
    PR_ERR_NUMERICAL = 2,   /* normalization or boundary quality failure */
    PR_ERR_ARGUMENT = 3,    /* null handle, bad index, short buffer */
    PR_ERR_INTERNAL = 4
} pr_status;

typedef enum pr_engine {
    PR_ENGINE_ANALYTIC = 0,
    PR_ENGINE_TRAJECTORY = 1,
    PR_ENGINE_WAVEGUIDE = 2
} pr_engine;

typedef enum pr_channel {
    PR_TR = 0,
    PR_RT = 1,
    PR_RR = 2,
    PR_TT = 3
} pr_channel;

typedef struct pr_config pr_config;
typedef struct pr_grid pr_grid;
typedef struct pr_report pr_report;

typedef struct pr_probabilities {
    double p_tr, p_rt, p_rr, p_tt, c_tr;
    double raw_sum;
    int renormalized;
} pr_probabilities;

typedef struct pr_waveguide_result {
    pr_probabilities probabilities;
    double transmitted, reflected;  /* one-photon runs */
    double loss;
    double residual;
    double symmetry_error;
    double ds;
    double detuning;
    int steps;
} pr_waveguide_result;

typedef struct pr_lambda_result {
    double p_v, p_vh, p_hv, c_tr, p_sp, p_loss;
} pr_lambda_result;

typedef struct pr_bunching {
    double before, after, single;
} pr_bunching;

PR_API const char* pr_version(void);
PR_API const char* pr_last_error(void);
PR_API const char* pr_engine_name(pr_engine engine);
PR_API pr_status pr_engine_from_name(const char* name, pr_engine* out);

/* Rate field names in declaration order; NULL past the end. */
PR_API const char* pr_rate_name(int index);

PR_API pr_status pr_config_create(pr_config** out);
PR_API void pr_config_destroy(pr_config* config);
PR_API pr_status pr_config_clone(const pr_config* config, pr_config** out);
/* key = value setting, same keys as the config file format */
PR_API pr_status pr_config_set(pr_config* config, const char* key, const char* value);
PR_API pr_status pr_config_set_rate(pr_config* config, const char* name, double value);
PR_API pr_status pr_config_get_rate(const pr_config* config, const char* name, double* out);
/* parameter is a rate name or "num/den"; the latter sets num = value*den */
PR_API pr_status pr_config_set_sweep(pr_config* config, const char* parameter, double value);
PR_API pr_status pr_config_parse(pr_config* config, const char* text);
PR_API pr_status pr_config_load(pr_config* config, const char* path);
PR_API pr_status pr_config_validate(const pr_config* config);
/* Writes the resolved config text. needed (if non-null) receives the size
 * including the terminator; a short buffer gives PR_ERR_ARGUMENT. */
PR_API pr_status pr_config_dump(const pr_config* config, char* buffer, size_t size, size_t* needed);

PR_API pr_status pr_probabilities_compute(const pr_config* config, pr_engine engine, pr_probabilities* out);

/* Correlation surfaces Gamma(t, tau) on the given axes (analytic or
 * trajectory). Passing null axes selects the default graded axes. */
PR_API pr_status pr_correlations(const pr_config* config, pr_engine engine, const double* t, size_t nt,
                                 const double* tau, size_t ntau, pr_grid** out);
PR_API void pr_grid_destroy(pr_grid* grid);
PR_API pr_status pr_grid_size(const pr_grid* grid, size_t* nt, size_t* ntau);
PR_API pr_status pr_grid_axes(const pr_grid* grid, const double** t, const double** tau);
/* row-major it*ntau + itau */
PR_API pr_status pr_grid_values(const pr_grid* grid, pr_channel channel, const double** values);
/* t-integrated density per tau point */
PR_API pr_status pr_grid_marginal(const pr_grid* grid, pr_channel channel, double* out, size_t size);
PR_API pr_status pr_grid_integrate(const pr_grid* grid, pr_probabilities* out);

/* Single-sided joint amplitude f(t, t+tau), f(0,0) = 1, for tau >= 0. */
PR_API pr_status pr_joint_amplitude(const pr_config* config, double t, double tau, double* out);

PR_API pr_status pr_lambda_routing(const pr_config* config, pr_lambda_result* out);
PR_API pr_status pr_lambda_pv(const pr_config* config, int photons, double* out);
PR_API pr_status pr_bunching_rates(const pr_config* config, pr_engine engine, double t, pr_bunching* out);

/* Waveguide engine. snapshot_path may be null; otherwise the final state is
 * written there in the documented snapshot format. */
PR_API pr_status pr_waveguide_run(const pr_config* config, const char* snapshot_path, pr_waveguide_result* out);
/* sign +1 or -1 selects the vacuum Rabi sideband */
PR_API pr_status pr_waveguide_strong_run(const pr_config* config, int sign, pr_waveguide_result* out);
PR_API pr_status pr_waveguide_effective_gamma_c(const pr_config* config, double* out);
/* |a|^2 after each step from one cavity excitation; written receives the
 * number of values stored. */
PR_API pr_status pr_waveguide_ring_down(const pr_config* config, double* out, size_t steps, size_t* written,
                                        double* ds);

/* Validation suite. quick skips the slow waveguide comparisons. */
PR_API pr_status pr_validate(int quick, pr_report** out);
PR_API void pr_report_destroy(pr_report* report);
PR_API size_t pr_report_count(const pr_report* report);
PR_API pr_status pr_report_entry(const pr_report* report, size_t index, const char** name, int* passed,
                                 const char** detail);
PR_API int pr_report_all_passed(const pr_report* report);

/* Scales one coefficient of the two-level closed form; 1.0 restores it.
 * Exists so tests can show the oracle checks catch a wrong formula. */
PR_API void pr_set_test_perturbation(double factor);

#ifdef __cplusplus
}
#endif

#endif
