// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "entcirc/errors.hpp"
#include "entcirc/qstate.hpp"

namespace entcirc {

/// Result of a GGM evaluation. `witness_cut` is a qubit bitmask (bit q set
/// means qubit q belongs to side A); by convention every reported cut
/// contains qubit 0. `value == 1 - lambda_max` exactly.
struct GgmResult {
    double value = 0.0;
    std::uint32_t witness_cut = 0;
    double lambda_max = 1.0;
    std::vector<std::pair<std::uint32_t, double>> per_cut; // opt-in
};

/// All bipartitions of n qubits as canonical subsets containing qubit 0
/// (avoids counting A:B and B:A separately), in ascending-bitmask order.
/// Exactly 2^(n-1) - 1 subsets; neither the empty nor the full set appears.
inline std::vector<std::uint32_t> enumerate_bipartitions(int n) {
    if (n < 2) throw InvalidArgument("enumerate_bipartitions: need at least 2 qubits");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> cuts;
    cuts.reserve((std::size_t{1} << (n - 1)) - 1);
    for (std::uint32_t mask = 1; mask < full; mask += 2) cuts.push_back(mask);
    return cuts;
}

namespace detail {

/// Largest eigenvalue of the Gram matrix accumulated over the environment.
/// D is the compile-time subsystem dimension (0 = dynamic).
template <int D>
double gram_lambda_max(const StateVector& s, const std::uint64_t* kept, int dk,
                       const int* env_qubits, int ne) {
    using Mat = std::conditional_t<D == 0, Eigen::MatrixXcd, Eigen::Matrix<cxd, D, D>>;
    Mat g;
    if constexpr (D == 0)
        g = Eigen::MatrixXcd::Zero(dk, dk);
    else
        g.setZero();

    const int n = s.num_qubits();
    cxd col[64];
    const std::uint64_t de = std::uint64_t{1} << ne;
    for (std::uint64_t e = 0; e < de; ++e) {
        std::uint64_t base = 0;
        for (int j = 0; j < ne; ++j)
            if ((e >> (ne - 1 - j)) & 1) base |= std::uint64_t{1} << (n - 1 - env_qubits[j]);
        for (int a = 0; a < dk; ++a) col[a] = s.amplitude(kept[a] | base);
        for (int a = 0; a < dk; ++a) {
            const cxd ca = col[a];
            g(a, a) += cxd{std::norm(ca), 0.0};
            for (int b = a + 1; b < dk; ++b) g(a, b) += ca * std::conj(col[b]);
        }
    }
    for (int a = 0; a < dk; ++a)
        for (int b = 0; b < a; ++b) g(a, b) = std::conj(g(b, a));

    if (dk == 2) {
        const double g00 = g(0, 0).real(), g11 = g(1, 1).real();
        const double m = 0.5 * (g00 + g11), h = 0.5 * (g00 - g11);
        return m + std::sqrt(h * h + std::norm(g(0, 1)));
    }
    Eigen::SelfAdjointEigenSolver<Mat> solver(g, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

/// Largest squared Schmidt coefficient across the bipartition `mask`
/// (as a qubit bitmask). Diagonalizes the smaller side.
inline double cut_lambda_max(const StateVector& s, std::uint32_t mask) {
    const int n = s.num_qubits();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::uint32_t side = mask;
    if (2 * std::popcount(side) > n) side = full & ~mask;

    int keep_qubits[24], env_qubits[24];
    int k = 0, ne = 0;
    for (int q = 0; q < n; ++q) {
        if ((side >> q) & 1)
            keep_qubits[k++] = q;
        else
            env_qubits[ne++] = q;
    }
    std::uint64_t kept[64];
    const int dk = 1 << k;
    for (int a = 0; a < dk; ++a) {
        std::uint64_t idx = 0;
        for (int j = 0; j < k; ++j)
            if ((a >> (k - 1 - j)) & 1) idx |= std::uint64_t{1} << (n - 1 - keep_qubits[j]);
        kept[a] = idx;
    }
    switch (dk) {
        case 2: return gram_lambda_max<2>(s, kept, dk, env_qubits, ne);
        case 4: return gram_lambda_max<4>(s, kept, dk, env_qubits, ne);
        case 8: return gram_lambda_max<8>(s, kept, dk, env_qubits, ne);
        case 16: return gram_lambda_max<16>(s, kept, dk, env_qubits, ne);
        default: return gram_lambda_max<0>(s, kept, dk, env_qubits, ne);
    }
}

inline GgmResult ggm_over_cuts(const StateVector& s, const std::vector<std::uint32_t>& cuts,
                               bool keep_per_cut) {
    GgmResult r;
    r.lambda_max = -1.0;
    if (keep_per_cut) r.per_cut.reserve(cuts.size());
    for (const std::uint32_t mask : cuts) {
        const double lam = cut_lambda_max(s, mask);
        if (keep_per_cut) r.per_cut.emplace_back(mask, lam);
        // First attaining cut wins; later cuts must beat it by more than
        // numerical noise to take over the witness.
        if (lam > r.lambda_max + 1e-15) {
            r.lambda_max = lam;
            r.witness_cut = mask;
        }
    }
    r.lambda_max = std::clamp(r.lambda_max, 0.0, 1.0);
    r.value = 1.0 - r.lambda_max;
    return r;
}

} // namespace detail

/// GGM over all 2^(n-1) - 1 bipartitions: 1 minus the maximum squared
/// Schmidt coefficient. The witness is the first cut (ascending bitmask)
/// attaining the maximum.
inline GgmResult ggm_full(const StateVector& s, bool keep_per_cut = false) {
    const int n = s.num_qubits();
    if (n < 2) throw InvalidArgument("ggm_full: need at least 2 qubits");
    return detail::ggm_over_cuts(s, enumerate_bipartitions(n), keep_per_cut);
}

/// GGM restricted to cuts whose smaller side has at most `max_cut_size`
/// qubits. Always >= the full GGM (a maximum over fewer candidates).
inline GgmResult ggm_restricted(const StateVector& s, int max_cut_size = 2,
                                bool keep_per_cut = false) {
    const int n = s.num_qubits();
    if (n < 2) throw InvalidArgument("ggm_restricted: need at least 2 qubits");
    if (max_cut_size < 1) throw InvalidArgument("ggm_restricted: max_cut_size must be >= 1");
    std::vector<std::uint32_t> cuts;
    for (const std::uint32_t mask : enumerate_bipartitions(n)) {
        const int k = std::popcount(mask);
        if (std::min(k, n - k) <= max_cut_size) cuts.push_back(mask);
    }
    return detail::ggm_over_cuts(s, cuts, keep_per_cut);
}

/// Largest single-qubit reduced-density eigenvalue over all qubits; the
/// exact merge cap 1 - max is an upper bound on any merged state's GGM with
/// this state as a unit (untouched marginals are preserved).
inline double max_single_qubit_lambda(const StateVector& s) {
    const int n = s.num_qubits();
    if (n < 2) throw InvalidArgument("max_single_qubit_lambda: need at least 2 qubits");
    double best = 0.0;
    for (int q = 0; q < n; ++q) {
        // The 1:rest cut through qubit q in canonical containing-0 form.
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        const std::uint32_t mask =
            (q == 0) ? std::uint32_t{1} : (full & ~(std::uint32_t{1} << q));
        best = std::max(best, detail::cut_lambda_max(s, mask));
    }
    return std::min(best, 1.0);
}

} // namespace entcirc
