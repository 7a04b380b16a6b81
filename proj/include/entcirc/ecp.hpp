// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "entcirc/errors.hpp"
#include "entcirc/ggm.hpp"
#include "entcirc/optimize.hpp"
#include "entcirc/parallel.hpp"
#include "entcirc/qstate.hpp"
#include "entcirc/rng.hpp"
#include "entcirc/states.hpp"
#include "entcirc/unitary.hpp"

namespace entcirc {

// ---------------------------------------------------------------------------
// Plan types
// ---------------------------------------------------------------------------

enum class Geometry { linear, triangle, custom };

struct MergeLink {
    int a = 0;
    int b = 0;
    UnitaryParams params;
};

// Layout of a multi-unit merge: unit sizes in qubit order, the links carrying
// the two-qubit unitaries (global qubit indices), and a geometry tag.
struct MergePlan {
    std::vector<int> unit_sizes;
    std::vector<MergeLink> links;
    Geometry geometry = Geometry::custom;

    int total_qubits() const {
        return std::accumulate(unit_sizes.begin(), unit_sizes.end(), 0);
    }

    // Index of the unit cell containing global qubit q.
    int unit_of(int q) const {
        int base = 0;
        for (std::size_t i = 0; i < unit_sizes.size(); ++i) {
            if (q < base + unit_sizes[i]) return static_cast<int>(i);
            base += unit_sizes[i];
        }
        throw IndexOutOfRange("MergePlan: qubit index beyond total size");
    }

    void validate() const {
        if (unit_sizes.empty()) throw InvalidArgument("MergePlan: no units");
        for (int s : unit_sizes) {
            if (s < 1) throw InvalidArgument("MergePlan: unit sizes must be positive");
        }
        const int total = total_qubits();
        for (const auto& link : links) {
            if (link.a < 0 || link.a >= total || link.b < 0 || link.b >= total) {
                throw IndexOutOfRange("MergePlan: link endpoint out of range");
            }
            if (unit_of(link.a) == unit_of(link.b)) {
                throw InvalidArgument("MergePlan: link must join two different units");
            }
        }
        if (geometry == Geometry::linear &&
            links.size() + 1 != unit_sizes.size()) {
            throw InvalidArgument("MergePlan: linear geometry needs exactly m-1 links");
        }
    }
};

// Linear chain of m identical units of the given size; link k joins the last
// qubit of unit k with the first qubit of unit k+1.
inline MergePlan linear_plan(int unit_size, int m, const std::vector<UnitaryParams>& params) {
    if (m < 2) throw InvalidArgument("linear_plan: need at least two units");
    if (params.size() + 1 != static_cast<std::size_t>(m)) {
        throw InvalidArgument("linear_plan: need m-1 unitary parameter sets");
    }
    MergePlan plan;
    plan.geometry = Geometry::linear;
    plan.unit_sizes.assign(static_cast<std::size_t>(m), unit_size);
    for (int k = 0; k + 1 < m; ++k) {
        plan.links.push_back({unit_size * (k + 1) - 1, unit_size * (k + 1), params[static_cast<std::size_t>(k)]});
    }
    plan.validate();
    return plan;
}

// Three 3-qubit units joined cyclically: (1,7), (2,4), (5,8).
inline MergePlan triangle_plan(const std::array<UnitaryParams, 3>& params) {
    MergePlan plan;
    plan.geometry = Geometry::triangle;
    plan.unit_sizes = {3, 3, 3};
    plan.links = {{1, 7, params[0]}, {2, 4, params[1]}, {5, 8, params[2]}};
    plan.validate();
    return plan;
}

// Plan metadata for k rounds of triangle growth: each round joins three copies
// of the previous state with three unitaries, so k rounds turn 3^k three-qubit
// units into one 3^(k+1)-qubit state with 3k links. Link endpoints reuse the
// single-round offsets scaled to the current block size.
inline MergePlan triangle_growth_plan(int k, const UnitaryParams& p = UnitaryParams(0, 0, 0)) {
    if (k < 1 || k > 12) throw InvalidArgument("triangle_growth_plan: rounds must be in [1,12]");
    MergePlan plan;
    plan.geometry = Geometry::custom;
    std::uint64_t units = 1;
    for (int i = 0; i < k; ++i) units *= 3;
    plan.unit_sizes.assign(static_cast<std::size_t>(units), 3);
    // Links are laid down round by round over every group of three blocks.
    std::uint64_t block = 3;  // qubits per copy at the current round
    for (int round = 1; round <= k; ++round) {
        const std::uint64_t group = 3 * block;
        const std::uint64_t total = 3ull * units;
        for (std::uint64_t base = 0; base + group <= total; base += group) {
            const int b = static_cast<int>(base);
            const int s = static_cast<int>(block);
            plan.links.push_back({b + 1, b + 2 * s + 1, p});
            plan.links.push_back({b + 2, b + s + 1, p});
            plan.links.push_back({b + s + 2, b + 2 * s + 2, p});
        }
        block = group;
    }
    plan.validate();
    return plan;
}

// ---------------------------------------------------------------------------
// Merging and optimization
// ---------------------------------------------------------------------------

inline StateVector merge_pair(const StateVector& sA, const StateVector& sB, int qa, int qb,
                              const UnitaryParams& p) {
    const int na = sA.num_qubits();
    const int nb = sB.num_qubits();
    if (qa < 0 || qa >= na) throw IndexOutOfRange("merge_pair: qa must lie in the first unit");
    if (qb < na || qb >= na + nb) throw IndexOutOfRange("merge_pair: qb must lie in the second unit");
    return apply_two_qubit(tensor(sA, sB), u_d(p), qa, qb);
}

// GGM with single-party inputs treated as unentangled.
inline double unit_ggm(const StateVector& s) {
    if (s.num_qubits() < 2) return 0.0;
    return ggm_full(s).value;
}

namespace detail {

// Largest single-qubit marginal eigenvalue over the qubits of `s` other than
// `touched`; returns 0.5 (the single-qubit floor) when no such qubit exists.
inline double untouched_lambda_max(const StateVector& s, int touched) {
    const int n = s.num_qubits();
    if (n < 2) return 0.5;
    const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1u);
    double best = 0.5;
    for (int q = 0; q < n; ++q) {
        if (q == touched) continue;
        const std::uint32_t mask = (q == 0) ? 1u : (full & ~(1u << q));
        best = std::max(best, cut_lambda_max(s, mask));
    }
    return best;
}

}  // namespace detail

// Upper bound on the merged GGM: every single-qubit marginal not acted on by
// the link unitary is preserved, so the merged GGM cannot exceed one minus its
// largest eigenvalue. The 1/2 floor covers states with no untouched qubit.
inline double merge_ggm_cap(const StateVector& sA, const StateVector& sB, int qa, int qb) {
    const double la = detail::untouched_lambda_max(sA, qa);
    const double lb = detail::untouched_lambda_max(sB, qb - sA.num_qubits());
    return 1.0 - std::max(la, lb);
}

struct OptimizeOptions {
    int restarts = 24;
    NmOptions nm{500, 1e-9, 1e-7};
    std::uint64_t seed = 20240901;
    double cap_slack = 1e-9;  // stop restarting once best is provably maximal
};

struct OptimizeReport {
    UnitaryParams best_params;
    double best_ggm = 0.0;
    int restarts_used = 0;
    bool converged = false;
};

inline OptimizeReport optimize_merge(const StateVector& sA, const StateVector& sB, int qa,
                                     int qb, const OptimizeOptions& opt = {}) {
    const StateVector joint = tensor(sA, sB);
    auto objective = [&](const std::vector<double>& x) {
        const UnitaryParams p(std::clamp(x[0], 0.0, UnitaryParams::kMax),
                              std::clamp(x[1], 0.0, UnitaryParams::kMax),
                              std::clamp(x[2], 0.0, UnitaryParams::kMax));
        return -ggm_full(apply_two_qubit(joint, u_d(p), qa, qb)).value;
    };

    const double cap = merge_ggm_cap(sA, sB, qa, qb);
    const std::vector<double> lo{0.0, 0.0, 0.0};
    const std::vector<double> hi{UnitaryParams::kMax, UnitaryParams::kMax, UnitaryParams::kMax};

    RngStream rng(opt.seed, 0x6f70742dull);
    OptimizeReport report;
    report.best_ggm = -1.0;
    for (int r = 0; r < opt.restarts; ++r) {
        std::vector<double> x0{rng.uniform(0.0, UnitaryParams::kMax),
                               rng.uniform(0.0, UnitaryParams::kMax),
                               rng.uniform(0.0, UnitaryParams::kMax)};
        const NmResult nm = nelder_mead(objective, std::move(x0), lo, hi, opt.nm);
        report.restarts_used = r + 1;
        if (-nm.fval > report.best_ggm) {
            report.best_ggm = -nm.fval;
            report.best_params = UnitaryParams(std::clamp(nm.x[0], 0.0, UnitaryParams::kMax),
                                               std::clamp(nm.x[1], 0.0, UnitaryParams::kMax),
                                               std::clamp(nm.x[2], 0.0, UnitaryParams::kMax));
            report.converged = report.converged || nm.converged;
        }
        if (report.best_ggm >= cap - opt.cap_slack) {
            report.converged = true;
            break;
        }
    }
    return report;
}

// Verdict of the min-rule experiment on one unit pair: the optimized merged
// GGM should reach min(G1, G2) when both inputs are entangled.
struct PropositionCheck {
    double g1 = 0.0;
    double g2 = 0.0;
    double best_ggm = 0.0;
    double gap = 0.0;  // min(g1, g2) - best_ggm
    bool out_of_hypothesis = false;
    OptimizeReport report;
};

inline PropositionCheck proposition_check(const StateVector& sA, const StateVector& sB, int qa,
                                          int qb, const OptimizeOptions& opt = {}) {
    PropositionCheck rec;
    rec.g1 = unit_ggm(sA);
    rec.g2 = unit_ggm(sB);
    rec.report = optimize_merge(sA, sB, qa, qb, opt);
    rec.best_ggm = rec.report.best_ggm;
    rec.gap = std::min(rec.g1, rec.g2) - rec.best_ggm;
    rec.out_of_hypothesis = (rec.g1 < 1e-9) || (rec.g2 < 1e-9);
    return rec;
}

inline PropositionCheck proposition_check(const StateVector& sA, const StateVector& sB,
                                          const OptimizeOptions& opt = {}) {
    return proposition_check(sA, sB, sA.num_qubits() - 1, sA.num_qubits(), opt);
}

// ---------------------------------------------------------------------------
// Chain recursion
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<cxd> kron_vec(const std::vector<cxd>& a, const std::vector<cxd>& b) {
    std::vector<cxd> out(a.size() * b.size());
    std::size_t k = 0;
    for (const cxd& av : a) {
        for (const cxd& bv : b) out[k++] = av * bv;
    }
    return out;
}

inline void add_into(std::vector<cxd>& dst, const std::vector<cxd>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

inline std::vector<cxd> column4(const Eigen::Matrix4cd& u, int c) {
    return {u(0, c), u(1, c), u(2, c), u(3, c)};
}

}  // namespace detail

// Builds the 3m-qubit chain of m copies of a 3-qubit unit, with the link
// unitaries u_d(params[k]) joining consecutive copies on qubit pairs
// (3k-1, 3k), via the two-branch recursion rather than statevector updates.
inline StateVector chain_state(const StateVector& unit, int m,
                               const std::vector<UnitaryParams>& params) {
    if (unit.num_qubits() != 3) throw InvalidArgument("chain_state: unit must have 3 qubits");
    if (m < 2) throw InvalidArgument("chain_state: need at least two units");
    if (3 * m > StateVector::kMaxQubits) {
        throw InvalidArgument("chain_state: chain exceeds the qubit cap");
    }
    if (params.size() + 1 != static_cast<std::size_t>(m)) {
        throw InvalidArgument("chain_state: need m-1 unitary parameter sets");
    }

    const auto& c = unit.amplitudes();
    // Unit amplitudes regrouped so the two branch contractions below read off
    // contiguous pairs: (c000, c010, c001, c100, c011, c101, c110, c111).
    const std::array<cxd, 8> a{c[0b000], c[0b010], c[0b001], c[0b100],
                               c[0b011], c[0b101], c[0b110], c[0b111]};
    const std::vector<cxd> A{a[0], a[1], a[3], a[6]};
    const std::vector<cxd> B{a[2], a[4], a[5], a[7]};
    const std::vector<cxd> E{a[0], a[2], a[1], a[4]};
    const std::vector<cxd> F{a[3], a[5], a[6], a[7]};

    std::vector<cxd> X, Y;
    std::vector<cxd> g0 = A, g1 = B;
    for (std::size_t k = 0; k < params.size(); ++k) {
        const Eigen::Matrix4cd U = u_d(params[k]);
        if (k > 0) {
            g0 = detail::kron_vec(X, {a[0], a[1]});
            detail::add_into(g0, detail::kron_vec(Y, {a[3], a[6]}));
            g1 = detail::kron_vec(X, {a[2], a[4]});
            detail::add_into(g1, detail::kron_vec(Y, {a[5], a[7]}));
        }
        X = detail::kron_vec(g0, detail::column4(U, 0b00));
        detail::add_into(X, detail::kron_vec(g1, detail::column4(U, 0b10)));
        Y = detail::kron_vec(g0, detail::column4(U, 0b01));
        detail::add_into(Y, detail::kron_vec(g1, detail::column4(U, 0b11)));
    }

    std::vector<cxd> psi = detail::kron_vec(X, E);
    detail::add_into(psi, detail::kron_vec(Y, F));
    return StateVector(std::move(psi));
}

// Reference pipeline for the same chain: tensor m copies, then apply the link
// unitaries sequentially on qubit pairs (3k-1, 3k).
inline StateVector chain_state_sequential(const StateVector& unit, int m,
                                          const std::vector<UnitaryParams>& params) {
    if (unit.num_qubits() != 3) throw InvalidArgument("chain_state: unit must have 3 qubits");
    if (m < 2) throw InvalidArgument("chain_state: need at least two units");
    if (3 * m > StateVector::kMaxQubits) {
        throw InvalidArgument("chain_state: chain exceeds the qubit cap");
    }
    if (params.size() + 1 != static_cast<std::size_t>(m)) {
        throw InvalidArgument("chain_state: need m-1 unitary parameter sets");
    }
    StateVector s = unit;
    for (int k = 1; k < m; ++k) s = tensor(s, unit);
    for (std::size_t k = 0; k < params.size(); ++k) {
        const int q = 3 * static_cast<int>(k + 1);
        s = apply_two_qubit(s, u_d(params[k]), q - 1, q);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Triangle network
// ---------------------------------------------------------------------------

// One round of the triangle construction: tensor three 3-qubit units (qubits
// 0-2, 3-5, 6-8) and apply the three link unitaries on (1,7), (2,4), (5,8).
inline StateVector triangle_step(const std::array<StateVector, 3>& units,
                                 const std::array<UnitaryParams, 3>& params) {
    for (const auto& u : units) {
        if (u.num_qubits() != 3) throw InvalidArgument("triangle_step: units must have 3 qubits");
    }
    StateVector s = tensor(tensor(units[0], units[1]), units[2]);
    constexpr std::array<std::pair<int, int>, 3> kLinks{{{1, 7}, {2, 4}, {5, 8}}};
    for (int k = 0; k < 3; ++k) {
        s = apply_two_qubit(s, u_d(params[static_cast<std::size_t>(k)]), kLinks[static_cast<std::size_t>(k)].first,
                            kLinks[static_cast<std::size_t>(k)].second);
    }
    return s;
}

struct TriangleOptimizeReport {
    std::array<UnitaryParams, 3> best_params{};
    double best_ggm = 0.0;
    int restarts_used = 0;
    bool converged = false;
};

/// Maximize the 9-qubit GGM of a triangle merge over all three link unitaries
/// (9 angles). The first restart is seeded at the symmetric point
/// (0, pi/4, pi/4) per link, which is maximal for GHZ units; the rest are
/// uniform draws. Stops early once the best value reaches the single-qubit
/// marginal cap.
inline TriangleOptimizeReport optimize_triangle(const std::array<StateVector, 3>& units,
                                                const OptimizeOptions& opt = {}) {
    auto objective = [&](const std::vector<double>& x) {
        std::array<UnitaryParams, 3> ps;
        for (int k = 0; k < 3; ++k) {
            ps[static_cast<std::size_t>(k)] =
                UnitaryParams(std::clamp(x[static_cast<std::size_t>(3 * k)], 0.0, UnitaryParams::kMax),
                              std::clamp(x[static_cast<std::size_t>(3 * k + 1)], 0.0, UnitaryParams::kMax),
                              std::clamp(x[static_cast<std::size_t>(3 * k + 2)], 0.0, UnitaryParams::kMax));
        }
        return -ggm_full(triangle_step(units, ps)).value;
    };

    // Each unit's local qubit 0 (global 0, 3, 6) is untouched by every link
    // unitary, so its marginal survives the merge and caps the reachable GGM.
    double cap = 0.5;
    for (const auto& u : units) {
        cap = std::min(cap, 1.0 - std::max(0.5, detail::cut_lambda_max(u, 1u)));
    }

    const std::vector<double> lo(9, 0.0), hi(9, UnitaryParams::kMax);
    RngStream rng(opt.seed, 0x74726955ull);
    TriangleOptimizeReport rep;
    rep.best_ggm = -1.0;
    for (int r = 0; r < opt.restarts; ++r) {
        std::vector<double> x0(9);
        if (r == 0) {
            for (int k = 0; k < 3; ++k) {
                x0[static_cast<std::size_t>(3 * k)] = 0.0;
                x0[static_cast<std::size_t>(3 * k + 1)] = M_PI / 4.0;
                x0[static_cast<std::size_t>(3 * k + 2)] = M_PI / 4.0;
            }
        } else {
            for (auto& v : x0) v = rng.uniform(0.0, UnitaryParams::kMax);
        }
        const NmResult nm = nelder_mead(objective, std::move(x0), lo, hi, opt.nm);
        rep.restarts_used = r + 1;
        if (-nm.fval > rep.best_ggm) {
            rep.best_ggm = -nm.fval;
            for (int k = 0; k < 3; ++k) {
                rep.best_params[static_cast<std::size_t>(k)] =
                    UnitaryParams(std::clamp(nm.x[static_cast<std::size_t>(3 * k)], 0.0, UnitaryParams::kMax),
                                  std::clamp(nm.x[static_cast<std::size_t>(3 * k + 1)], 0.0, UnitaryParams::kMax),
                                  std::clamp(nm.x[static_cast<std::size_t>(3 * k + 2)], 0.0, UnitaryParams::kMax));
            }
        }
        if (rep.best_ggm >= cap - opt.cap_slack) {
            rep.converged = true;
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Unitary-space scan
// ---------------------------------------------------------------------------

struct ScanResult {
    int points_per_axis = 0;
    std::vector<double> axis;      // inclusive grid over [0, pi/2]
    std::vector<double> ggm;       // row-major over (alpha_x, alpha_y, alpha_z)
    std::vector<std::uint8_t> s_u_mask;
    double s_u_fraction = 0.0;
    double threshold = 0.0;        // membership cutoff: min(G1,G2) - tolerance
    double tolerance = 1e-3;
    double g1 = 0.0;
    double g2 = 0.0;
};

inline ScanResult scan_unitary_space(const StateVector& sA, const StateVector& sB, int qa,
                                     int qb, int points_per_axis = 32, double tolerance = 1e-3,
                                     int threads = 1) {
    if (points_per_axis < 2) throw InvalidArgument("scan_unitary_space: need at least 2 points per axis");
    ScanResult res;
    res.points_per_axis = points_per_axis;
    res.tolerance = tolerance;
    res.g1 = unit_ggm(sA);
    res.g2 = unit_ggm(sB);
    res.threshold = std::min(res.g1, res.g2) - tolerance;

    res.axis.resize(static_cast<std::size_t>(points_per_axis));
    for (int i = 0; i < points_per_axis; ++i) {
        res.axis[static_cast<std::size_t>(i)] =
            UnitaryParams::kMax * static_cast<double>(i) / static_cast<double>(points_per_axis - 1);
    }

    const StateVector joint = tensor(sA, sB);
    const std::size_t total = static_cast<std::size_t>(points_per_axis) *
                              static_cast<std::size_t>(points_per_axis) *
                              static_cast<std::size_t>(points_per_axis);
    res.ggm = parallel_map<double>(total, threads, [&](std::size_t idx) {
        const int n = points_per_axis;
        const int k = static_cast<int>(idx % static_cast<std::size_t>(n));
        const int j = static_cast<int>((idx / static_cast<std::size_t>(n)) % static_cast<std::size_t>(n));
        const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * static_cast<std::size_t>(n)));
        const UnitaryParams p(res.axis[static_cast<std::size_t>(i)], res.axis[static_cast<std::size_t>(j)],
                              res.axis[static_cast<std::size_t>(k)]);
        return ggm_full(apply_two_qubit(joint, u_d(p), qa, qb)).value;
    });

    res.s_u_mask.resize(total);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < total; ++i) {
        const bool in = res.ggm[i] >= res.threshold;
        res.s_u_mask[i] = in ? 1 : 0;
        hits += in ? 1u : 0u;
    }
    res.s_u_fraction = static_cast<double>(hits) / static_cast<double>(total);
    return res;
}

// ---------------------------------------------------------------------------
// Resource-distribution experiment
// ---------------------------------------------------------------------------

enum class UnitKind { haar, w_class };

struct UnitSpec {
    int qubits = 3;
    UnitKind kind = UnitKind::haar;
};

struct SplitSpec {
    UnitSpec a;
    UnitSpec b;
    std::string label;
};

struct Histogram {
    std::vector<double> edges;      // size bins+1
    std::vector<double> frequency;  // size bins, sums to 1
};

struct ResourceStats {
    std::vector<double> samples;  // optimized GGM per sampled pair
    double mean = 0.0;
    double stddev = 0.0;
    Histogram histogram;
};

inline StateVector draw_unit(const UnitSpec& spec, RngStream& rng) {
    if (spec.kind == UnitKind::w_class) {
        if (spec.qubits != 3) throw InvalidArgument("draw_unit: W-class units are 3-qubit");
        return random_w_class(rng);
    }
    return haar_random(spec.qubits, rng);
}

inline Histogram make_histogram(const std::vector<double>& values, int bins, double lo,
                                double hi) {
    if (bins < 1) throw InvalidArgument("make_histogram: need at least one bin");
    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) {
        h.edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / bins;
    }
    h.frequency.assign(static_cast<std::size_t>(bins), 0.0);
    if (values.empty()) return h;
    for (double v : values) {
        int b = static_cast<int>(std::floor((v - lo) / (hi - lo) * bins));
        b = std::clamp(b, 0, bins - 1);
        h.frequency[static_cast<std::size_t>(b)] += 1.0;
    }
    for (double& f : h.frequency) f /= static_cast<double>(values.size());
    return h;
}

inline ResourceStats resource_distribution(const SplitSpec& split, int samples,
                                           std::uint64_t seed, int threads = 1,
                                           const OptimizeOptions& base_opt = {},
                                           int bins = 40) {
    if (samples < 1) throw InvalidArgument("resource_distribution: need at least one sample");
    ResourceStats stats;
    stats.samples = parallel_map<double>(static_cast<std::size_t>(samples), threads,
                                         [&](std::size_t idx) {
        RngStream rng(seed, idx);
        const StateVector sA = draw_unit(split.a, rng);
        const StateVector sB = draw_unit(split.b, rng);
        OptimizeOptions opt = base_opt;
        opt.seed = rng.next_u64();
        const int qa = sA.num_qubits() - 1;
        const int qb = sA.num_qubits();
        return optimize_merge(sA, sB, qa, qb, opt).best_ggm;
    });

    double sum = 0.0;
    for (double v : stats.samples) sum += v;
    stats.mean = sum / static_cast<double>(samples);
    double var = 0.0;
    for (double v : stats.samples) var += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(var / static_cast<double>(samples));
    stats.histogram = make_histogram(stats.samples, bins, 0.0, 0.5);
    return stats;
}

// The five standard six-qubit resource splits, in presentation order.
inline std::vector<SplitSpec> standard_splits() {
    return {
        {{5, UnitKind::haar}, {1, UnitKind::haar}, "(5,1)"},
        {{3, UnitKind::haar}, {3, UnitKind::haar}, "(3,3) generic"},
        {{4, UnitKind::haar}, {2, UnitKind::haar}, "(4,2)"},
        {{3, UnitKind::haar}, {3, UnitKind::w_class}, "(3,3) generic+W"},
        {{3, UnitKind::w_class}, {3, UnitKind::w_class}, "(3,3) W+W"},
    };
}

}  // namespace entcirc
