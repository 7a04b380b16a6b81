// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entcirc/errors.hpp"
#include "entcirc/ggm.hpp"
#include "entcirc/parallel.hpp"
#include "entcirc/qstate.hpp"
#include "entcirc/states.hpp"

namespace entcirc {

// Two-site XYZ coupling: H = J/4 [(1+gamma) XX + (1-gamma) YY] + (delta J/4) ZZ.
struct HamiltonianParams {
    double j = 1.0;
    double gamma = 0.0;
    double delta = 0.0;
};

inline Eigen::Matrix4cd h_xyz(const HamiltonianParams& hp) {
    const double xx = hp.j * (1.0 + hp.gamma) / 4.0;
    const double yy = hp.j * (1.0 - hp.gamma) / 4.0;
    const double zz = hp.delta * hp.j / 4.0;
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    // sigma_x sigma_x is the full anti-diagonal; sigma_y sigma_y flips the
    // sign on the outer anti-diagonal; sigma_z sigma_z is diagonal.
    h(0, 3) = xx - yy;
    h(3, 0) = xx - yy;
    h(1, 2) = xx + yy;
    h(2, 1) = xx + yy;
    h(0, 0) = zz;
    h(1, 1) = -zz;
    h(2, 2) = -zz;
    h(3, 3) = zz;
    return h;
}

// exp(-i H t) for the two-site coupling, via Hermitian eigendecomposition.
inline Eigen::Matrix4cd pair_propagator(const HamiltonianParams& hp, double t) {
    const Eigen::Matrix4cd h = h_xyz(hp);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    if (es.info() != Eigen::Success) throw NotHermitian("pair_propagator: eigensolve failed");
    Eigen::Vector4cd phases;
    for (int i = 0; i < 4; ++i) {
        const double lam = es.eigenvalues()(i);
        phases(i) = cxd(std::cos(lam * t), -std::sin(lam * t));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline StateVector evolve_pair(const StateVector& s, int q1, int q2,
                               const HamiltonianParams& hp, double t) {
    return apply_two_qubit(s, pair_propagator(hp, t), q1, q2);
}

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string initial_state_tag;
    HamiltonianParams hp;
};

// Uniform grid 0, dt, 2dt, ... covering [0, t_max].
inline std::vector<double> time_grid(double t_max, double dt = 0.05) {
    if (dt <= 0.0 || t_max < 0.0) throw InvalidArgument("time_grid: need dt > 0 and t_max >= 0");
    const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9)) + 1;
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = static_cast<double>(i) * dt;
    return ts;
}

// Composite of the given units with every link evolved for the same duration.
// Each time point is computed directly from the initial state (exact
// propagator, no stepping).
inline StateVector evolve_links(const StateVector& initial,
                                const std::vector<std::pair<int, int>>& links,
                                const std::vector<HamiltonianParams>& hps, double t) {
    if (links.size() != hps.size()) {
        throw InvalidArgument("evolve_links: one Hamiltonian per link required");
    }
    StateVector s = initial;
    for (std::size_t k = 0; k < links.size(); ++k) {
        s = evolve_pair(s, links[k].first, links[k].second, hps[k], t);
    }
    return s;
}

inline TimeSeries ggm_timeseries(const std::vector<StateVector>& units,
                                 const std::vector<std::pair<int, int>>& links,
                                 const std::vector<HamiltonianParams>& hps,
                                 const std::vector<double>& t_grid, int threads = 1,
                                 std::string tag = {}) {
    if (units.empty()) throw InvalidArgument("ggm_timeseries: need at least one unit");
    StateVector initial = units[0];
    for (std::size_t i = 1; i < units.size(); ++i) initial = tensor(initial, units[i]);

    TimeSeries series;
    series.times = t_grid;
    series.initial_state_tag = std::move(tag);
    if (!hps.empty()) series.hp = hps[0];
    series.values = parallel_map<double>(t_grid.size(), threads, [&](std::size_t i) {
        return ggm_full(evolve_links(initial, links, hps, t_grid[i])).value;
    });
    return series;
}

// Maximal flat stretches of a series: index runs whose value range stays
// below eps and that cannot be extended in either direction.
struct Plateau {
    std::size_t begin = 0;  // inclusive
    std::size_t end = 0;    // inclusive
    double level = 0.0;     // mean value over the run
};

inline std::vector<Plateau> find_plateaus(const TimeSeries& series, double eps = 1e-6,
                                          std::size_t min_points = 5) {
    const auto& v = series.values;
    std::vector<Plateau> out;
    std::size_t start = 0;
    while (start < v.size()) {
        double lo = v[start], hi = v[start];
        std::size_t end = start;
        while (end + 1 < v.size()) {
            const double nlo = std::min(lo, v[end + 1]);
            const double nhi = std::max(hi, v[end + 1]);
            if (nhi - nlo >= eps) break;
            lo = nlo;
            hi = nhi;
            ++end;
        }
        if (end - start + 1 >= min_points) {
            double sum = 0.0;
            for (std::size_t i = start; i <= end; ++i) sum += v[i];
            out.push_back({start, end, sum / static_cast<double>(end - start + 1)});
        }
        start = end + 1;
    }
    return out;
}

// Smallest positive time at which the evolved composite returns to the
// initial state with fidelity at least 1 - tol, searched on a dt grid up to
// t_max and refined by golden-section maximization around the first hit.
inline std::optional<double> revival_period(const std::vector<StateVector>& units,
                                            const std::vector<std::pair<int, int>>& links,
                                            const std::vector<HamiltonianParams>& hps,
                                            double t_max, double dt = 0.05,
                                            double tol = 1e-8) {
    if (units.empty()) throw InvalidArgument("revival_period: need at least one unit");
    StateVector initial = units[0];
    for (std::size_t i = 1; i < units.size(); ++i) initial = tensor(initial, units[i]);

    auto fid = [&](double t) { return fidelity(initial, evolve_links(initial, links, hps, t)); };

    const double coarse_gate = 1.0 - 1e-4;  // bracket candidates before refining
    for (double t = dt; t <= t_max + 1e-12; t += dt) {
        if (fid(t) < coarse_gate) continue;
        double a = std::max(t - dt, dt * 1e-3), b = t + dt;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = fid(x1), f2 = fid(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = fid(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = fid(x1);
            }
        }
        const double t_best = 0.5 * (a + b);
        if (fid(t_best) >= 1.0 - tol) return t_best;
    }
    return std::nullopt;
}

// Grows a single-excitation symmetric state: starting from |W> on three
// qubits with n_aux fresh |0> qubits appended, each fresh qubit is coupled in
// turn to the previous one through the isotropic XY interaction for time t.
inline StateVector dicke_growth(int n_aux, const HamiltonianParams& hp, double t) {
    if (n_aux < 1) throw InvalidArgument("dicke_growth: need at least one auxiliary qubit");
    if (3 + n_aux > StateVector::kMaxQubits) {
        throw InvalidArgument("dicke_growth: output exceeds the qubit cap");
    }
    if (hp.gamma != 0.0 || hp.delta != 0.0) {
        throw InvalidArgument("dicke_growth: requires gamma = delta = 0");
    }
    StateVector s = tensor(w(), StateVector::basis(n_aux, 0));
    for (int k = 0; k < n_aux; ++k) s = evolve_pair(s, 2 + k, 3 + k, hp, t);
    return s;
}

// Expectation of the total Pauli-z magnetization; conserved by the gamma = 0
// evolution.
inline double total_sigma_z(const StateVector& s) {
    const int n = s.num_qubits();
    double total = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double p = std::norm(s.amplitudes()[i]);
        total += p * static_cast<double>(n - 2 * std::popcount(i));
    }
    return total;
}

}  // namespace entcirc
