// SPDX-License-Identifier: MIT
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "entcirc/qstate.hpp"
#include "entcirc/rng.hpp"

namespace entcirc {

/// |GHZ> = (|000> + |111>)/sqrt(2).
inline StateVector ghz() {
    std::vector<cxd> a(8, cxd{0.0, 0.0});
    a[0] = a[7] = 1.0 / std::sqrt(2.0);
    return StateVector(std::move(a));
}

/// |W> = (|001> + |010> + |100>)/sqrt(3).
inline StateVector w() {
    std::vector<cxd> a(8, cxd{0.0, 0.0});
    a[0b001] = a[0b010] = a[0b100] = 1.0 / std::sqrt(3.0);
    return StateVector(std::move(a));
}

/// |Wbar> = (|011> + |101> + |110>)/sqrt(3), the all-qubit bit-flip of |W>.
inline StateVector wbar() {
    std::vector<cxd> a(8, cxd{0.0, 0.0});
    a[0b011] = a[0b101] = a[0b110] = 1.0 / std::sqrt(3.0);
    return StateVector(std::move(a));
}

/// Generalized GHZ: cos(theta)|000> + sin(theta)|111>.
inline StateVector g_ghz(double theta) {
    std::vector<cxd> a(8, cxd{0.0, 0.0});
    a[0] = std::cos(theta);
    a[7] = std::sin(theta);
    return StateVector(std::move(a));
}

/// Generalized W:
/// cos(t1)|001> + cos(t2)sin(t1)|010> + sin(t2)sin(t1)|100>.
inline StateVector g_w(double theta1, double theta2) {
    std::vector<cxd> a(8, cxd{0.0, 0.0});
    a[0b001] = std::cos(theta1);
    a[0b010] = std::cos(theta2) * std::sin(theta1);
    a[0b100] = std::sin(theta2) * std::sin(theta1);
    return StateVector(std::move(a));
}

/// Dicke state: equal superposition of all weight-k computational basis
/// states on n qubits.
inline StateVector dicke(int n, int k) {
    if (n < 1 || n > StateVector::kMaxQubits)
        throw InvalidArgument("dicke: qubit count out of range");
    if (k < 0 || k > n) throw InvalidArgument("dicke: excitation count must be in [0, n]");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::size_t count = 0;
    for (std::uint64_t i = 0; i < dim; ++i)
        if (std::popcount(i) == k) ++count;
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    std::vector<cxd> a(dim, cxd{0.0, 0.0});
    for (std::uint64_t i = 0; i < dim; ++i)
        if (std::popcount(i) == k) a[i] = amp;
    return StateVector(std::move(a));
}

/// Haar-random pure state: 2^n independent standard complex Gaussian
/// amplitudes, normalized.
inline StateVector haar_random(int n, RngStream& rng) {
    if (n < 1 || n > StateVector::kMaxQubits)
        throw InvalidArgument("haar_random: qubit count out of range");
    std::vector<cxd> a(std::size_t{1} << n);
    double n2 = 0.0;
    for (auto& x : a) {
        x = rng.complex_normal();
        n2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : a) x *= inv;
    return StateVector(std::move(a));
}

/// Haar-random 2x2 unitary: QR of a complex Ginibre matrix via Gram-Schmidt
/// (the R diagonal comes out positive real, so Q is Haar-distributed).
inline Eigen::Matrix2cd haar_unitary2(RngStream& rng) {
    Eigen::Vector2cd v1{rng.complex_normal(), rng.complex_normal()};
    Eigen::Vector2cd v2{rng.complex_normal(), rng.complex_normal()};
    v1.normalize();
    v2 -= v1 * (v1.adjoint() * v2);
    v2.normalize();
    Eigen::Matrix2cd q;
    q.col(0) = v1;
    q.col(1) = v2;
    return q;
}

/// Random W-class 3-qubit state: canonical form
/// sqrt(a)|000> + sqrt(b)|001> + sqrt(c)|010> + sqrt(d)|100>
/// with (a,b,c,d) uniform on the simplex (degenerate draws with any
/// excitation weight <= 1e-3 rejected), followed by independent Haar-random
/// single-qubit unitaries on each qubit. The 3-tangle of the canonical form
/// is identically zero, and local unitaries preserve it.
inline StateVector random_w_class(RngStream& rng) {
    double xa, xb, xc, xd;
    do {
        // Dirichlet(1,1,1,1) via normalized exponentials.
        const double e0 = -std::log(1.0 - rng.uniform());
        const double e1 = -std::log(1.0 - rng.uniform());
        const double e2 = -std::log(1.0 - rng.uniform());
        const double e3 = -std::log(1.0 - rng.uniform());
        const double s = e0 + e1 + e2 + e3;
        xa = e0 / s;
        xb = e1 / s;
        xc = e2 / s;
        xd = e3 / s;
    } while (std::min(std::min(xb, xc), xd) <= 1e-3);

    std::vector<cxd> a(8, cxd{0.0, 0.0});
    a[0b000] = std::sqrt(xa);
    a[0b001] = std::sqrt(xb);
    a[0b010] = std::sqrt(xc);
    a[0b100] = std::sqrt(xd);
    StateVector s(std::move(a));
    for (int q = 0; q < 3; ++q) s = apply_one_qubit(s, haar_unitary2(rng), q);
    return s;
}

} // namespace entcirc
