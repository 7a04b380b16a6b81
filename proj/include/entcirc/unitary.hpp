// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "entcirc/errors.hpp"
#include "entcirc/qstate.hpp"

namespace entcirc {

/// The three angles of the non-local two-qubit unitary
/// u_d = exp[-i (ax XX + ay YY + az ZZ)], each restricted to [0, pi/2].
/// Values within 1e-12 outside the range are clamped; anything farther out
/// is rejected.
struct UnitaryParams {
    double alpha_x = 0.0, alpha_y = 0.0, alpha_z = 0.0;

    UnitaryParams() = default;  // identity action
    UnitaryParams(double ax, double ay, double az)
        : alpha_x(checked(ax, "alpha_x")),
          alpha_y(checked(ay, "alpha_y")),
          alpha_z(checked(az, "alpha_z")) {}

    static constexpr double kMax = M_PI / 2.0;

    std::array<double, 3> as_array() const { return {alpha_x, alpha_y, alpha_z}; }

  private:
    static double checked(double v, const char* name) {
        if (v < -1e-12 || v > kMax + 1e-12)
            throw InvalidArgument(std::string("UnitaryParams: ") + name +
                                  " outside [0, pi/2]");
        return std::clamp(v, 0.0, kMax);
    }
};

/// The four amplitudes of the non-local unitary's block action:
/// u|00> = mu1|00> + mu2|11>, u|11> = mu2|00> + mu1|11>,
/// u|01> = mu3|01> + mu4|10>, u|10> = mu4|01> + mu3|10>.
inline std::array<cxd, 4> mu_coefficients(const UnitaryParams& p) {
    const cxd em{std::cos(p.alpha_z), -std::sin(p.alpha_z)}; // e^{-i az}
    const cxd ep{std::cos(p.alpha_z), std::sin(p.alpha_z)};  // e^{+i az}
    const cxd mi{0.0, -1.0};
    return {em * std::cos(p.alpha_x - p.alpha_y), mi * em * std::sin(p.alpha_x - p.alpha_y),
            ep * std::cos(p.alpha_x + p.alpha_y), mi * ep * std::sin(p.alpha_x + p.alpha_y)};
}

/// The non-local two-qubit unitary for unrestricted angles (periodic
/// continuation of the canonical [0, pi/2] box).
inline Eigen::Matrix4cd u_d_unbounded(double ax, double ay, double az) {
    const cxd em{std::cos(az), -std::sin(az)};
    const cxd ep{std::cos(az), std::sin(az)};
    const cxd mi{0.0, -1.0};
    const std::array<cxd, 4> mu{em * std::cos(ax - ay), mi * em * std::sin(ax - ay),
                                ep * std::cos(ax + ay), mi * ep * std::sin(ax + ay)};
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = mu[0];
    u(0, 3) = mu[1];
    u(3, 0) = mu[1];
    u(3, 3) = mu[0];
    u(1, 1) = mu[2];
    u(1, 2) = mu[3];
    u(2, 1) = mu[3];
    u(2, 2) = mu[2];
    return u;
}

/// The non-local two-qubit unitary as a 4x4 matrix in the |00>,|01>,|10>,|11>
/// basis. It preserves the parity blocks span{|00>,|11>} and span{|01>,|10>}.
inline Eigen::Matrix4cd u_d(const UnitaryParams& p) {
    const auto mu = mu_coefficients(p);
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = mu[0];
    u(0, 3) = mu[1];
    u(3, 0) = mu[1];
    u(3, 3) = mu[0];
    u(1, 1) = mu[2];
    u(1, 2) = mu[3];
    u(2, 1) = mu[3];
    u(2, 2) = mu[2];
    return u;
}

namespace detail {

/// Kronecker product of two one-qubit operators (a on the MSB wire).
inline Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

} // namespace detail

/// General two-qubit unitary (A1 (x) A2) u_d (A3 (x) A4). The local factors
/// cannot change any entanglement measure; they are provided for interface
/// completeness and for tests of that invariance.
inline Eigen::Matrix4cd full_u2(const Eigen::Matrix2cd& a1, const Eigen::Matrix2cd& a2,
                                const Eigen::Matrix2cd& a3, const Eigen::Matrix2cd& a4,
                                const UnitaryParams& p) {
    detail::check_unitary2(a1, "full_u2(A1)");
    detail::check_unitary2(a2, "full_u2(A2)");
    detail::check_unitary2(a3, "full_u2(A3)");
    detail::check_unitary2(a4, "full_u2(A4)");
    return detail::kron2(a1, a2) * u_d(p) * detail::kron2(a3, a4);
}

/// One elementary gate on a two-qubit register: a z- or y-axis rotation on
/// one wire, or a CNOT.
struct Gate {
    enum class Kind { RotZ, RotY, Cnot };
    Kind kind;
    int target = 0;       // wire index in {0, 1}; qubit 0 is the MSB
    int control = -1;     // CNOT only
    double angle = 0.0;   // rotations only, radians
};

/// Elementary-gate realization of u_d: at most 3 CNOTs and 5 single-qubit
/// rotations, plus an explicit global phase so reconstruction is exact.
/// Gates are listed in application order (gates[0] acts first).
struct GateSequence {
    std::vector<Gate> gates;
    double global_phase = 0.0;

    int cnot_count() const {
        int c = 0;
        for (const auto& g : gates) c += (g.kind == Gate::Kind::Cnot);
        return c;
    }
    int rotation_count() const {
        int c = 0;
        for (const auto& g : gates) c += (g.kind != Gate::Kind::Cnot);
        return c;
    }
};

namespace detail {

inline Eigen::Matrix2cd rot_z(double t) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = cxd{std::cos(t / 2), -std::sin(t / 2)};
    m(1, 1) = cxd{std::cos(t / 2), std::sin(t / 2)};
    return m;
}

inline Eigen::Matrix2cd rot_y(double t) {
    Eigen::Matrix2cd m;
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

inline Eigen::Matrix4cd on_wire(int wire, const Eigen::Matrix2cd& r) {
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return wire == 0 ? kron2(r, id) : kron2(id, r);
}

inline Eigen::Matrix4cd cnot_matrix(int control, int target) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    if (control == 0 && target == 1) {
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    } else if (control == 1 && target == 0) {
        m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1.0;
    } else {
        throw InvalidArgument("cnot_matrix: control/target must be distinct wires 0,1");
    }
    return m;
}

} // namespace detail

/// Multiply out a gate sequence (application order) times the global phase.
inline Eigen::Matrix4cd reconstruct(const GateSequence& seq) {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    for (const auto& g : seq.gates) {
        Eigen::Matrix4cd step;
        switch (g.kind) {
            case Gate::Kind::RotZ:
            case Gate::Kind::RotY: {
                if (g.target != 0 && g.target != 1)
                    throw InvalidArgument("reconstruct: rotation wire must be 0 or 1");
                const Eigen::Matrix2cd r = (g.kind == Gate::Kind::RotZ)
                                               ? detail::rot_z(g.angle)
                                               : detail::rot_y(g.angle);
                step = detail::on_wire(g.target, r);
                break;
            }
            case Gate::Kind::Cnot:
                step = detail::cnot_matrix(g.control, g.target);
                break;
        }
        u = step * u;
    }
    return std::polar(1.0, seq.global_phase) * u;
}

/// Closed-form elementary-gate decomposition of u_d(ax, ay, az):
///
///   u_d = e^{i pi/4} RZ(-pi/2)@0 . CNOT(1->0)
///         . [RZ(2az+pi/2)@0 (x) RY(-2ay-pi/2)@1] . CNOT(0->1)
///         . RY(2ax+pi/2)@1 . CNOT(1->0) . RZ(pi/2)@1       (operator order)
///
/// which costs exactly 3 CNOTs and 5 rotations. The identity (all angles 0)
/// simplifies to an empty sequence with zero phase.
inline GateSequence decompose_u_d(const UnitaryParams& p) {
    GateSequence seq;
    if (p.alpha_x == 0.0 && p.alpha_y == 0.0 && p.alpha_z == 0.0) return seq;

    using K = Gate::Kind;
    seq.gates = {
        Gate{K::RotZ, 1, -1, M_PI / 2},
        Gate{K::Cnot, 0, 1, 0.0},
        Gate{K::RotY, 1, -1, 2 * p.alpha_x + M_PI / 2},
        Gate{K::Cnot, 1, 0, 0.0},
        Gate{K::RotY, 1, -1, -2 * p.alpha_y - M_PI / 2},
        Gate{K::RotZ, 0, -1, 2 * p.alpha_z + M_PI / 2},
        Gate{K::Cnot, 0, 1, 0.0},
        Gate{K::RotZ, 0, -1, -M_PI / 2},
    };
    seq.global_phase = M_PI / 4;
    return seq;
}

/// Line-based circuit text: one gate per line in application order
/// (`RZ q theta`, `RY q theta`, `CNOT c t`), then a final `PHASE theta`.
/// Angles are radians with 17 significant digits.
inline std::string to_circuit_text(const GateSequence& seq) {
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string out;
    for (const auto& g : seq.gates) {
        switch (g.kind) {
            case Gate::Kind::RotZ:
                out += "RZ " + std::to_string(g.target) + " " + fmt(g.angle) + "\n";
                break;
            case Gate::Kind::RotY:
                out += "RY " + std::to_string(g.target) + " " + fmt(g.angle) + "\n";
                break;
            case Gate::Kind::Cnot:
                out += "CNOT " + std::to_string(g.control) + " " + std::to_string(g.target) +
                       "\n";
                break;
        }
    }
    out += "PHASE " + fmt(seq.global_phase) + "\n";
    return out;
}

} // namespace entcirc
