// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "entcirc/errors.hpp"

namespace entcirc {

using cxd = std::complex<double>;

/// Dense pure state over n qubits. Amplitude index bit layout: qubit 0 is the
/// most significant bit, so for n = 2 the basis order is |00>, |01>, |10>,
/// |11> with the left symbol belonging to qubit 0. Instances are immutable;
/// operations return fresh states.
class StateVector {
  public:
    /// Hard cap on qubit count (memory guard); everything in this library
    /// needs at most 12.
    static constexpr int kMaxQubits = 24;

    /// Build from an amplitude vector of length 2^n. The vector must already
    /// be normalized to within 1e-9; it is rescaled to unit norm exactly so
    /// long pipelines cannot accumulate norm drift.
    explicit StateVector(std::vector<cxd> amplitudes) : amps_(std::move(amplitudes)) {
        const std::size_t len = amps_.size();
        if (len < 2 || (len & (len - 1)) != 0)
            throw InvalidArgument("StateVector: amplitude count must be a power of two >= 2");
        n_ = 0;
        while ((std::size_t{1} << n_) < len) ++n_;
        if (n_ > kMaxQubits)
            throw InvalidArgument("StateVector: qubit count exceeds the cap of 24");
        const double n2 = norm_sq();
        if (std::abs(n2 - 1.0) > 1e-9)
            throw InvalidArgument("StateVector: amplitudes are not normalized");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : amps_) a *= inv;
    }

    /// Computational basis state |index> on n qubits.
    static StateVector basis(int num_qubits, std::uint64_t index) {
        if (num_qubits < 1 || num_qubits > kMaxQubits)
            throw InvalidArgument("StateVector::basis: qubit count out of range");
        if (index >= (std::uint64_t{1} << num_qubits))
            throw IndexOutOfRange("StateVector::basis: index out of range");
        std::vector<cxd> a(std::size_t{1} << num_qubits, cxd{0.0, 0.0});
        a[index] = 1.0;
        return StateVector(std::move(a));
    }

    int num_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    const std::vector<cxd>& amplitudes() const { return amps_; }
    cxd amplitude(std::uint64_t i) const { return amps_[i]; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }

    /// Bit position (within the amplitude index) carrying qubit q.
    int bit_of(int q) const { return n_ - 1 - q; }

  private:
    std::vector<cxd> amps_;
    int n_ = 0;
};

/// Reduced density matrix over an ordered list of retained qubits.
/// Row/column index bit layout mirrors StateVector: qubit_labels[0] is the
/// most significant bit of the subsystem index.
class DensityMatrix {
  public:
    DensityMatrix(Eigen::MatrixXcd entries, std::vector<int> qubit_labels)
        : entries_(std::move(entries)), labels_(std::move(qubit_labels)) {
        const auto dim = Eigen::Index{1} << labels_.size();
        if (entries_.rows() != dim || entries_.cols() != dim)
            throw InvalidArgument("DensityMatrix: dimension does not match label count");
        if ((entries_ - entries_.adjoint()).norm() > 1e-12)
            throw NotHermitian("DensityMatrix: entries are not Hermitian");
        if (std::abs(entries_.trace().real() - 1.0) > 1e-12 ||
            std::abs(entries_.trace().imag()) > 1e-12)
            throw InvalidArgument("DensityMatrix: trace is not 1");
    }

    const Eigen::MatrixXcd& entries() const { return entries_; }
    const std::vector<int>& qubit_labels() const { return labels_; }
    Eigen::Index dim() const { return entries_.rows(); }

  private:
    Eigen::MatrixXcd entries_;
    std::vector<int> labels_;
};

inline std::complex<double> overlap(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits())
        throw InvalidArgument("overlap: qubit counts differ");
    cxd s{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.dim(); ++i)
        s += std::conj(a.amplitude(i)) * b.amplitude(i);
    return s;
}

inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(overlap(a, b));
}

/// Tensor product; a's qubits come first (most significant).
inline StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() + b.num_qubits() > StateVector::kMaxQubits)
        throw InvalidArgument("tensor: qubit count exceeds the cap of 24");
    std::vector<cxd> out(a.dim() * b.dim());
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        const cxd ai = a.amplitude(i);
        const std::uint64_t base = i * b.dim();
        for (std::uint64_t j = 0; j < b.dim(); ++j) out[base + j] = ai * b.amplitude(j);
    }
    return StateVector(std::move(out));
}

namespace detail {

inline void check_unitary4(const Eigen::Matrix4cd& u, const char* who) {
    if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).norm() > 1e-10)
        throw NonUnitary(std::string(who) + ": matrix is not unitary");
}

inline void check_unitary2(const Eigen::Matrix2cd& u, const char* who) {
    if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() > 1e-10)
        throw NonUnitary(std::string(who) + ": matrix is not unitary");
}

} // namespace detail

/// Apply a 4x4 unitary on qubits (q1, q2); q1 is the more significant qubit
/// of U's two-qubit basis |q1 q2> = |00>, |01>, |10>, |11>.
inline StateVector apply_two_qubit(const StateVector& s, const Eigen::Matrix4cd& u, int q1,
                                   int q2) {
    const int n = s.num_qubits();
    if (q1 < 0 || q2 < 0 || q1 >= n || q2 >= n || q1 == q2)
        throw IndexOutOfRange("apply_two_qubit: invalid qubit pair");
    detail::check_unitary4(u, "apply_two_qubit");

    const std::uint64_t b1 = std::uint64_t{1} << s.bit_of(q1);
    const std::uint64_t b2 = std::uint64_t{1} << s.bit_of(q2);
    std::vector<cxd> out(s.amplitudes());
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if ((i & b1) || (i & b2)) continue;
        const std::uint64_t i00 = i, i01 = i | b2, i10 = i | b1, i11 = i | b1 | b2;
        const cxd a00 = out[i00], a01 = out[i01], a10 = out[i10], a11 = out[i11];
        out[i00] = u(0, 0) * a00 + u(0, 1) * a01 + u(0, 2) * a10 + u(0, 3) * a11;
        out[i01] = u(1, 0) * a00 + u(1, 1) * a01 + u(1, 2) * a10 + u(1, 3) * a11;
        out[i10] = u(2, 0) * a00 + u(2, 1) * a01 + u(2, 2) * a10 + u(2, 3) * a11;
        out[i11] = u(3, 0) * a00 + u(3, 1) * a01 + u(3, 2) * a10 + u(3, 3) * a11;
    }
    return StateVector(std::move(out));
}

/// Apply a 2x2 unitary on qubit q.
inline StateVector apply_one_qubit(const StateVector& s, const Eigen::Matrix2cd& u, int q) {
    const int n = s.num_qubits();
    if (q < 0 || q >= n) throw IndexOutOfRange("apply_one_qubit: invalid qubit index");
    detail::check_unitary2(u, "apply_one_qubit");

    const std::uint64_t b = std::uint64_t{1} << s.bit_of(q);
    std::vector<cxd> out(s.amplitudes());
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i & b) continue;
        const cxd a0 = out[i], a1 = out[i | b];
        out[i] = u(0, 0) * a0 + u(0, 1) * a1;
        out[i | b] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return StateVector(std::move(out));
}

namespace detail {

/// Index scatter tables for a keep-set: element a of the subsystem basis maps
/// to the amplitude-index bits of the kept qubits (keep[0] most significant),
/// element e to those of the complementary qubits.
struct SplitTables {
    std::vector<std::uint64_t> kept;
    std::vector<std::uint64_t> env;
};

inline SplitTables split_tables(int n, const std::vector<int>& keep) {
    std::vector<int> comp;
    comp.reserve(n - keep.size());
    std::vector<bool> in_keep(n, false);
    for (int q : keep) in_keep[q] = true;
    for (int q = 0; q < n; ++q)
        if (!in_keep[q]) comp.push_back(q);

    auto scatter = [n](const std::vector<int>& qs) {
        const std::size_t k = qs.size();
        std::vector<std::uint64_t> table(std::size_t{1} << k);
        for (std::uint64_t a = 0; a < table.size(); ++a) {
            std::uint64_t idx = 0;
            for (std::size_t j = 0; j < k; ++j)
                if ((a >> (k - 1 - j)) & 1) idx |= std::uint64_t{1} << (n - 1 - qs[j]);
            table[a] = idx;
        }
        return table;
    };
    return {scatter(keep), scatter(comp)};
}

/// Gram matrix of the keep-side: rho[a][b] = sum_e psi(a,e) conj(psi(b,e)).
inline Eigen::MatrixXcd gram_matrix(const StateVector& s, const std::vector<int>& keep) {
    const auto tables = split_tables(s.num_qubits(), keep);
    const std::size_t dk = tables.kept.size(), de = tables.env.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
    std::vector<cxd> col(dk);
    for (std::size_t e = 0; e < de; ++e) {
        const std::uint64_t base = tables.env[e];
        for (std::size_t a = 0; a < dk; ++a) col[a] = s.amplitude(tables.kept[a] | base);
        for (std::size_t a = 0; a < dk; ++a) {
            const cxd ca = col[a];
            rho(a, a) += ca * std::conj(ca);
            for (std::size_t b = a + 1; b < dk; ++b) rho(a, b) += ca * std::conj(col[b]);
        }
    }
    for (std::size_t a = 0; a < dk; ++a)
        for (std::size_t b = 0; b < a; ++b) rho(a, b) = std::conj(rho(b, a));
    return rho;
}

} // namespace detail

/// Partial trace: keep the listed qubits, trace out the rest.
inline DensityMatrix reduced_density(const StateVector& s, const std::vector<int>& keep) {
    const int n = s.num_qubits();
    if (keep.empty()) throw EmptySubset("reduced_density: keep set is empty");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n)
            throw IndexOutOfRange("reduced_density: qubit index out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw IndexOutOfRange("reduced_density: duplicate qubit index");
    }
    if (static_cast<int>(keep.size()) == n)
        throw FullSet("reduced_density: keep set covers every qubit");
    Eigen::MatrixXcd rho = detail::gram_matrix(s, keep);
    // Clean up the residual anti-Hermitian noise so the invariant is exact.
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return DensityMatrix(std::move(rho), keep);
}

/// Eigenvalues of a Hermitian density matrix, sorted descending.
inline std::vector<double> eigvals_hermitian(const DensityMatrix& rho) {
    if ((rho.entries() - rho.entries().adjoint()).norm() > 1e-10)
        throw NotHermitian("eigvals_hermitian: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries(),
                                                           Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

} // namespace entcirc
