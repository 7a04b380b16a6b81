// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "entcirc/errors.hpp"
#include "entcirc/qstate.hpp"
#include "entcirc/unitary.hpp"

namespace entcirc {

// Schmidt coefficients of two bipartite units, ordered so that the first unit
// is at least as entangled-ranked as the second: gamma1 >= delta1 and
// gamma1 >= gamma2 >= delta2. Each pair sums to one.
struct SchmidtPair {
    double gamma1;
    double delta1;
    double gamma2;
    double delta2;

    SchmidtPair(double g1, double d1, double g2, double d2)
        : gamma1(g1), delta1(d1), gamma2(g2), delta2(d2) {
        constexpr double tol = 1e-12;
        auto in_unit = [](double v) { return v >= -1e-12 && v <= 1.0 + 1e-12; };
        if (!in_unit(g1) || !in_unit(d1) || !in_unit(g2) || !in_unit(d2)) {
            throw InvalidArgument("SchmidtPair: coefficients must lie in [0,1]");
        }
        if (std::abs(g1 + d1 - 1.0) > tol || std::abs(g2 + d2 - 1.0) > tol) {
            throw InvalidArgument("SchmidtPair: each coefficient pair must sum to 1");
        }
        if (g1 + tol < d1 || g1 + tol < g2 || g2 + tol < d2) {
            throw InvalidArgument(
                "SchmidtPair: ordering gamma1 >= delta1, gamma1 >= gamma2 >= delta2 required");
        }
    }

    SchmidtPair(double g1, double g2) : SchmidtPair(g1, 1.0 - g1, g2, 1.0 - g2) {}
};

// Populations of the two link qubits after the two-qubit unitary acts on them,
// as trigonometric functions of the unit Schmidt weights and the angles.
struct Eps12 {
    double eps1;
    double eps2;
};

inline Eps12 eps12(const SchmidtPair& sp, const UnitaryParams& p) {
    const double g1 = sp.gamma1, g2 = sp.gamma2;
    const double cm = std::cos(2.0 * (p.alpha_x - p.alpha_y));
    const double cp = std::cos(2.0 * (p.alpha_x + p.alpha_y));
    const double e1 = 0.5 * (1.0 + (g1 + g2 - 1.0) * cm + (g1 - g2) * cp);
    const double e2 = 0.5 * (1.0 - (g1 + g2 - 1.0) * cm + (g1 - g2) * cp);
    return {e1, e2};
}

// Largest eigenvalue of each of the four single-party marginals of the merged
// two-unit state: untouched halves give max(gamma, 1-gamma); the two link
// qubits give max(eps, 1-eps).
inline std::array<double, 4> prop1_eigs(const SchmidtPair& sp, const UnitaryParams& p) {
    const auto e = eps12(sp, p);
    return {
        std::max(sp.gamma1, 1.0 - sp.gamma1),
        std::max(e.eps1, 1.0 - e.eps1),
        std::max(e.eps2, 1.0 - e.eps2),
        std::max(sp.gamma2, 1.0 - sp.gamma2),
    };
}

// Effective four-party state: each unit is a two-party Schmidt form, the
// optimized unitary acts on the inner parties (1,2). Party order is MSB-first.
inline StateVector four_party_state(const SchmidtPair& sp, const UnitaryParams& p) {
    std::vector<cxd> amp(16, cxd(0.0, 0.0));
    amp[0b0000] = std::sqrt(sp.gamma1 * sp.gamma2);
    amp[0b0011] = std::sqrt(sp.gamma1 * sp.delta2);
    amp[0b1100] = std::sqrt(sp.delta1 * sp.gamma2);
    amp[0b1111] = std::sqrt(sp.delta1 * sp.delta2);
    StateVector s(std::move(amp));
    return apply_two_qubit(s, u_d(p), 1, 2);
}

// Eigenvalue branches of the single-party and two-party marginals of the
// effective four-party state. lambda2_12 lives in the spectrum of the marginal
// of parties {0,1}; lambda2_13 in that of parties {0,2}.
struct AppendixBEigs {
    double lambda1_1;
    double lambda2_12;
    double lambda2_13;
};

inline AppendixBEigs appendix_b_eigs(const SchmidtPair& sp, const UnitaryParams& p) {
    const double g1 = sp.gamma1, g2 = sp.gamma2;
    const double ax = p.alpha_x, ay = p.alpha_y, az = p.alpha_z;
    const double cm = std::cos(ax - ay);   // undoubled angles inside the radicands
    const double sp_ = std::sin(ax + ay);
    const double cp = std::cos(ax + ay);
    const double c4z = std::cos(4.0 * az);

    const double f = (2.0 * g1 * g2 - g1 - g2) * (1.0 + 2.0 * g1 * g2 - g1 - g2) +
                     4.0 * g1 * g2 * (1.0 - g1) * (1.0 - g2) * c4z;
    const double g = (g1 + g2 - 2.0 * g1 * g2) * (1.0 + 2.0 * g1 * g2 - g1 - g2) +
                     4.0 * g1 * g2 * (1.0 - g1) * (1.0 - g2) * c4z;

    const double F = (g1 + g2 - 1.0) * (g1 + g2 - 1.0) * cm * cm * cm * cm -
                     2.0 * cm * cm * sp_ * sp_ * f +
                     (g1 - g2) * (g1 - g2) * sp_ * sp_ * sp_ * sp_;
    const double G = (g1 + g2 - 1.0) * (g1 + g2 - 1.0) * cm * cm * cm * cm +
                     2.0 * cm * cm * cp * cp * g +
                     (g1 - g2) * (g1 - g2) * cp * cp * cp * cp;

    const double c2x = std::cos(2.0 * ax), c2y = std::cos(2.0 * ay);
    const double s2x = std::sin(2.0 * ax), s2y = std::sin(2.0 * ay);
    const double l213 = 0.25 * (1.0 + (2.0 * g1 - 1.0) * (2.0 * g2 - 1.0) * c2x * c2y +
                                s2x * s2y + 2.0 * std::sqrt(std::max(F, 0.0)));
    const double l212 = 0.25 * (1.0 + (2.0 * g1 - 1.0) * (2.0 * g2 - 1.0) * s2x * s2y +
                                c2x * c2y + 2.0 * std::sqrt(std::max(G, 0.0)));
    return {g1, l212, l213};
}

// Eigenvalue branches for two three-qubit units in the GHZ class merged by the
// unitary on the link qubits (2,3). lambda1_1 is the constant single-qubit
// maximum; the lambda3 values are branches of the three-qubit marginals
// {0,1,2} and {0,1,3}.
struct GhzGhzEigs {
    double lambda1_1;
    double lambda3_123;
    double lambda3_124;
};

inline GhzGhzEigs ghzghz_eigs(const UnitaryParams& p) {
    const double cx = std::cos(2.0 * p.alpha_x);
    const double cy = std::cos(2.0 * p.alpha_y);
    const double cz = std::cos(2.0 * p.alpha_z);
    const double sx = std::sin(2.0 * p.alpha_x);
    const double sy = std::sin(2.0 * p.alpha_y);
    const double sz = std::sin(2.0 * p.alpha_z);
    const double l123 = 0.25 * (1.0 + cy * cz + cx * (cy + cz));
    const double l124 = 0.25 * (1.0 + sy * sz + sx * (sy + sz));
    return {0.5, l123, l124};
}

// Full spectra of the two three-qubit marginals in the GHZ-GHZ merge; the
// printed branches above are the first entries.
inline std::array<double, 4> ghzghz_rho123_spectrum(const UnitaryParams& p) {
    const double cx = std::cos(2.0 * p.alpha_x);
    const double cy = std::cos(2.0 * p.alpha_y);
    const double cz = std::cos(2.0 * p.alpha_z);
    return {
        0.25 * (1.0 + cx * cy + cz * (cx + cy)),
        0.25 * (1.0 + cx * cy - cz * (cx + cy)),
        0.25 * (1.0 - cx * cy + cz * (cy - cx)),
        0.25 * (1.0 - cx * cy - cz * (cy - cx)),
    };
}

inline std::array<double, 4> ghzghz_rho124_spectrum(const UnitaryParams& p) {
    const double sx = std::sin(2.0 * p.alpha_x);
    const double sy = std::sin(2.0 * p.alpha_y);
    const double sz = std::sin(2.0 * p.alpha_z);
    return {
        0.25 * (1.0 + sx * sy + sz * (sx + sy)),
        0.25 * (1.0 + sx * sy - sz * (sx + sy)),
        0.25 * (1.0 - sx * sy + sz * (sy - sx)),
        0.25 * (1.0 - sx * sy - sz * (sy - sx)),
    };
}

// Eigenvalue branches for a GHZ unit merged with a W unit on link qubits
// (2,3). lambda1_5 is the largest eigenvalue of each untouched W-side
// single-qubit marginal (constant 2/3); the lambda3 values are branches of
// the three-qubit marginals {0,1,2} and {0,1,3}.
struct GhzWEigs {
    double lambda1_5;
    double lambda3_123;
    double lambda3_124;
};

inline GhzWEigs ghzw_eigs(const UnitaryParams& p) {
    const double ax = p.alpha_x, ay = p.alpha_y, az = p.alpha_z;
    const double cx = std::cos(2.0 * ax), cy = std::cos(2.0 * ay);
    const double sx = std::sin(2.0 * ax), sy = std::sin(2.0 * ay);
    const double A = 42.0 + 40.0 * (std::cos(2.0 * (ax - ay)) + std::cos(2.0 * (ax + ay))) +
                     std::cos(4.0 * (ax - ay)) + std::cos(4.0 * (ax + ay)) +
                     18.0 * (std::cos(4.0 * ax) + std::cos(4.0 * ay)) +
                     32.0 * (cx + cy) * (cx + cy) * std::cos(4.0 * az);
    const double B = 42.0 + 40.0 * (std::cos(2.0 * (ax - ay)) - std::cos(2.0 * (ax + ay))) +
                     std::cos(4.0 * (ax - ay)) + std::cos(4.0 * (ax + ay)) -
                     18.0 * (std::cos(4.0 * ax) + std::cos(4.0 * ay)) -
                     32.0 * (sx + sy) * (sx + sy) * std::cos(4.0 * az);
    const double l123 = (12.0 + 12.0 * cx * cy + std::sqrt(std::max(2.0 * A, 0.0))) / 48.0;
    const double l124 = (12.0 + 12.0 * sx * sy + std::sqrt(std::max(2.0 * B, 0.0))) / 48.0;
    return {2.0 / 3.0, l123, l124};
}

}  // namespace entcirc
