// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entcirc/dynamics.hpp"
#include "entcirc/errors.hpp"
#include "entcirc/ggm.hpp"
#include "entcirc/optimize.hpp"
#include "entcirc/parallel.hpp"
#include "entcirc/qstate.hpp"
#include "entcirc/rng.hpp"
#include "entcirc/states.hpp"

namespace entcirc {

// Gaussian-distributed coupling strength and the averaging scheme.
struct DisorderSpec {
    double mean_j = 0.5;
    double sigma_j = 0.0;
    enum class Scheme { gauss_hermite, monte_carlo } scheme = Scheme::gauss_hermite;
    int nodes = 64;       // gauss_hermite
    int samples = 10000;  // monte_carlo
    std::uint64_t seed = 20240901;
};

// Gauss-Hermite rule for weight exp(-x^2): nodes are eigenvalues of the
// Jacobi (symmetric tridiagonal) matrix with off-diagonal sqrt(k/2); weights
// are sqrt(pi) times the squared first eigenvector components.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw InvalidArgument("gauss_hermite: need at least one node");
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(static_cast<double>(k) / 2.0);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    if (es.info() != Eigen::Success) throw Error("gauss_hermite: eigensolve failed");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double sqrt_pi = std::sqrt(M_PI);
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = sqrt_pi * v0 * v0;
    }
    return rule;
}

// Coupling realizations (value, probability weight) for a DisorderSpec;
// weights sum to 1. sigma_j = 0 collapses to the single mean value.
inline std::vector<std::pair<double, double>> coupling_realizations(const DisorderSpec& spec) {
    if (spec.sigma_j < 0.0) throw InvalidArgument("coupling_realizations: sigma_j must be >= 0");
    if (spec.sigma_j == 0.0) return {{spec.mean_j, 1.0}};
    if (spec.scheme == DisorderSpec::Scheme::gauss_hermite) {
        if (spec.nodes < 2) throw InvalidArgument("coupling_realizations: need >= 2 nodes");
        const QuadratureRule rule = gauss_hermite(spec.nodes);
        std::vector<std::pair<double, double>> out(rule.nodes.size());
        const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            out[i] = {spec.mean_j + std::sqrt(2.0) * spec.sigma_j * rule.nodes[i],
                      rule.weights[i] * inv_sqrt_pi};
        }
        return out;
    }
    if (spec.samples < 2) throw InvalidArgument("coupling_realizations: need >= 2 samples");
    std::vector<std::pair<double, double>> out(static_cast<std::size_t>(spec.samples));
    const double w = 1.0 / static_cast<double>(spec.samples);
    RngStream rng(spec.seed, 0x4a2d6d63ull);
    for (auto& [j, weight] : out) {
        j = spec.mean_j + spec.sigma_j * rng.normal();
        weight = w;
    }
    return out;
}

// Quenched-average GGM(t): at each time the GGM is averaged over coupling
// realizations, with the realization's J substituted into every link
// Hamiltonian. The node loop runs in a fixed order so the reduction is
// bit-stable regardless of thread count.
inline TimeSeries quench_avg_ggm(const std::vector<StateVector>& units,
                                 const std::vector<std::pair<int, int>>& links,
                                 const HamiltonianParams& hp_template, const DisorderSpec& spec,
                                 const std::vector<double>& t_grid, int threads = 1,
                                 std::string tag = {}) {
    if (units.empty()) throw InvalidArgument("quench_avg_ggm: need at least one unit");
    if (spec.sigma_j == 0.0) {
        HamiltonianParams hp = hp_template;
        hp.j = spec.mean_j;
        return ggm_timeseries(units, links, std::vector<HamiltonianParams>(links.size(), hp),
                              t_grid, threads, std::move(tag));
    }

    const auto realizations = coupling_realizations(spec);
    StateVector initial = units[0];
    for (std::size_t i = 1; i < units.size(); ++i) initial = tensor(initial, units[i]);

    TimeSeries series;
    series.times = t_grid;
    series.initial_state_tag = std::move(tag);
    series.hp = hp_template;
    series.hp.j = spec.mean_j;
    series.values = parallel_map<double>(t_grid.size(), threads, [&](std::size_t i) {
        const double t = t_grid[i];
        double acc = 0.0;
        for (const auto& [j, weight] : realizations) {
            HamiltonianParams hp = hp_template;
            hp.j = j;
            acc += weight *
                   ggm_full(evolve_links(initial, links,
                                         std::vector<HamiltonianParams>(links.size(), hp), t))
                       .value;
        }
        return acc;
    });
    return series;
}

struct SaturationResult {
    double t_c = 0.0;
    double g_s = 0.0;
    std::size_t index = 0;  // first sample of the flat tail
    double window_width = 0.0;
    double flatness_eps = 0.0;
};

// First time after which every rolling window of the given width stays within
// flatness_eps; the saturation value is the mean of that tail.
inline SaturationResult saturation(const TimeSeries& series, double window_width = 5.0,
                                   double flatness_eps = 1e-3) {
    const auto& ts = series.times;
    const auto& vs = series.values;
    if (ts.size() != vs.size() || ts.size() < 2) {
        throw InvalidArgument("saturation: need a series with >= 2 points");
    }
    const double dt = ts[1] - ts[0];
    if (dt <= 0.0) throw InvalidArgument("saturation: times must be increasing");
    const std::size_t k = static_cast<std::size_t>(std::llround(window_width / dt)) + 1;
    if (k > ts.size()) throw NoSaturation("saturation: series shorter than one window");

    const std::size_t num_windows = ts.size() - k + 1;
    std::size_t first_flat = 0;
    for (std::size_t wstart = 0; wstart < num_windows; ++wstart) {
        double lo = vs[wstart], hi = vs[wstart];
        for (std::size_t i = wstart + 1; i < wstart + k; ++i) {
            lo = std::min(lo, vs[i]);
            hi = std::max(hi, vs[i]);
        }
        if (hi - lo >= flatness_eps) first_flat = wstart + 1;
    }
    if (first_flat >= num_windows) {
        throw NoSaturation("saturation: flatness never achieved within the series");
    }

    SaturationResult res;
    res.index = first_flat;
    res.t_c = ts[first_flat];
    double sum = 0.0;
    for (std::size_t i = first_flat; i < vs.size(); ++i) sum += vs[i];
    res.g_s = sum / static_cast<double>(vs.size() - first_flat);
    res.window_width = window_width;
    res.flatness_eps = flatness_eps;
    return res;
}

struct FitResult {
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double residual = 0.0;  // relative: sqrt(SSE) / sqrt(sum y^2)
};

// Least-squares fit of t_c(sigma) = b + c exp(-d (sigma - 0.01)) by
// multistart simplex minimization of the squared residuals.
inline FitResult fit_tc(const std::vector<double>& sigmas, const std::vector<double>& t_cs,
                        std::uint64_t seed = 7, int restarts = 16) {
    if (sigmas.size() != t_cs.size()) throw InvalidArgument("fit_tc: length mismatch");
    if (sigmas.size() < 4) throw InvalidArgument("fit_tc: need at least 4 points");
    const auto [lo_it, hi_it] = std::minmax_element(sigmas.begin(), sigmas.end());
    if (*hi_it - *lo_it <= 0.0) throw DegenerateFit("fit_tc: sigma values are all equal");

    auto sse = [&](const std::vector<double>& p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            const double model = p[0] + p[1] * std::exp(-p[2] * (sigmas[i] - 0.01));
            const double r = t_cs[i] - model;
            acc += r * r;
        }
        return std::isfinite(acc) ? acc : 1e300;
    };

    const double b0 = t_cs.back();
    const double c0 = t_cs.front() - b0;
    const double d0 = 1.0 / (*hi_it - *lo_it);

    NmOptions nm;
    nm.max_evals = 2000;
    nm.ftol = 1e-12;
    nm.xtol = 1e-10;

    RngStream rng(seed, 0x666974ull);
    std::vector<double> best;
    double best_sse = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> x0{b0, c0, d0};
        if (r > 0) {
            x0[0] *= rng.uniform(0.3, 3.0);
            x0[1] *= rng.uniform(0.3, 3.0);
            x0[2] *= rng.uniform(0.3, 30.0);
        }
        const NmResult res = nelder_mead(sse, std::move(x0), {}, {}, nm);
        if (res.fval < best_sse) {
            best_sse = res.fval;
            best = res.x;
        }
    }
    if (best.empty() || !std::isfinite(best_sse)) {
        throw DegenerateFit("fit_tc: optimization failed to produce a finite fit");
    }

    double ysq = 0.0;
    for (double y : t_cs) ysq += y * y;
    FitResult fit;
    fit.b = best[0];
    fit.c = best[1];
    fit.d = best[2];
    fit.residual = (ysq > 0.0) ? std::sqrt(best_sse / ysq) : std::sqrt(best_sse);
    return fit;
}

// One point of the disorder-suppression sweep: two copies of a parametric
// unit family evolved through a disordered link, with the tail mean of the
// averaged series compared against the input GGM.
enum class UnitFamily { g_ghz, g_w };

struct SuppressionPoint {
    double theta = 0.0;
    double g_input = 0.0;
    double g_s = 0.0;
    double ratio = 0.0;
};

// Mean of the last quarter of the series; the sweeps use this fixed tail
// instead of the rolling-window detector so every theta reports a value even
// when residual oscillations stay above the flatness threshold.
inline double tail_mean(const TimeSeries& series, double tail_fraction = 0.25) {
    if (series.values.empty()) throw InvalidArgument("tail_mean: empty series");
    const auto n = series.values.size();
    const std::size_t start = n - std::max<std::size_t>(1, static_cast<std::size_t>(
                                                               std::floor(tail_fraction * n)));
    double sum = 0.0;
    for (std::size_t i = start; i < n; ++i) sum += series.values[i];
    return sum / static_cast<double>(n - start);
}

inline std::vector<SuppressionPoint> suppression_sweep(UnitFamily family,
                                                       const std::vector<double>& thetas,
                                                       const DisorderSpec& spec, double t_max,
                                                       double dt = 0.5, int threads = 1) {
    const std::vector<double> grid = time_grid(t_max, dt);
    std::vector<SuppressionPoint> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        const StateVector unit = (family == UnitFamily::g_ghz) ? g_ghz(theta) : g_w(theta, theta);
        SuppressionPoint pt;
        pt.theta = theta;
        pt.g_input = ggm_full(unit).value;
        const TimeSeries avg =
            quench_avg_ggm({unit, unit}, {{2, 3}}, HamiltonianParams{spec.mean_j, 0.0, 0.0},
                           spec, grid, threads);
        pt.g_s = tail_mean(avg);
        pt.ratio = (pt.g_input > 0.0) ? pt.g_s / pt.g_input : 0.0;
        out.push_back(pt);
    }
    return out;
}

}  // namespace entcirc
