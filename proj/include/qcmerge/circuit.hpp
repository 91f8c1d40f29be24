#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "qcmerge/angle.hpp"
#include "qcmerge/errors.hpp"

namespace qcmerge {

enum class GateKind { H, X, Z, S, Sdg, T, Tdg, CNOT, CZ, RZ };

inline bool is_two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::CZ; }

/// True for the single-qubit gates diagonal in the Z basis (up to global
/// phase): Z, S, S^dag, T, T^dag and RZ.
inline bool is_z_rotation_kind(GateKind k) {
    switch (k) {
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RZ: return true;
        default: return false;
    }
}

struct Gate {
    GateKind kind;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = kNoQubit;
    Angle angle;  // RZ only; fixed kinds carry their angle implicitly

    static constexpr std::uint32_t kNoQubit = static_cast<std::uint32_t>(-1);

    static Gate h(std::uint32_t q) { return {GateKind::H, q, kNoQubit, {}}; }
    static Gate x(std::uint32_t q) { return {GateKind::X, q, kNoQubit, {}}; }
    static Gate z(std::uint32_t q) { return {GateKind::Z, q, kNoQubit, {}}; }
    static Gate s(std::uint32_t q) { return {GateKind::S, q, kNoQubit, {}}; }
    static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, q, kNoQubit, {}}; }
    static Gate t(std::uint32_t q) { return {GateKind::T, q, kNoQubit, {}}; }
    static Gate tdg(std::uint32_t q) { return {GateKind::Tdg, q, kNoQubit, {}}; }
    static Gate cnot(std::uint32_t c, std::uint32_t t) { return {GateKind::CNOT, c, t, {}}; }
    static Gate cz(std::uint32_t a, std::uint32_t b) { return {GateKind::CZ, a, b, {}}; }
    static Gate rz(Angle a, std::uint32_t q) { return {GateKind::RZ, q, kNoQubit, std::move(a)}; }

    bool is_z_rotation() const { return is_z_rotation_kind(kind); }

    /// Rotation angle of a Z-basis gate: T == RZ(pi/4), S == RZ(pi/2), ...
    Angle rotation_angle() const {
        switch (kind) {
            case GateKind::Z: return Angle::rational(1, 1);
            case GateKind::S: return Angle::rational(1, 2);
            case GateKind::Sdg: return Angle::rational(3, 2);
            case GateKind::T: return Angle::rational(1, 4);
            case GateKind::Tdg: return Angle::rational(7, 4);
            case GateKind::RZ: return angle;
            default: throw UsageError("rotation_angle: not a Z-basis rotation");
        }
    }

    /// Non-Clifford means a Z rotation whose angle is not provably k*pi/2.
    bool is_clifford() const {
        if (!is_z_rotation()) return true;
        return rotation_angle().is_half_pi_multiple();
    }

    /// Semantic equality: Z-basis rotations compare by angle, so T == RZ(pi/4).
    bool operator==(const Gate& other) const {
        if (q0 != other.q0 || q1 != other.q1) return false;
        if (is_z_rotation() && other.is_z_rotation())
            return rotation_angle() == other.rotation_angle();
        return kind == other.kind;
    }
};

struct Circuit {
    std::uint32_t n_qubits = 0;
    std::vector<std::string> qubit_names;  // may be empty; ensure_names() fills q0, q1, ...
    std::vector<Gate> gates;

    void ensure_names() {
        while (qubit_names.size() < n_qubits) qubit_names.push_back("q" + std::to_string(qubit_names.size()));
    }

    void validate() const {
        if (n_qubits == 0) throw UsageError("circuit: needs at least one qubit");
        for (const Gate& g : gates) {
            if (g.q0 >= n_qubits) throw UsageError("circuit: qubit index out of range");
            if (is_two_qubit(g.kind)) {
                if (g.q1 >= n_qubits) throw UsageError("circuit: qubit index out of range");
                if (g.q0 == g.q1) throw UsageError("circuit: two-qubit gate needs distinct qubits");
            }
        }
    }
};

struct CircuitStats {
    std::size_t gate_count = 0;
    std::size_t n_qubits = 0;
    std::size_t t_count = 0;
    std::size_t non_clifford_rz_count = 0;
    std::size_t h_count = 0;
    std::size_t internal_h_count = 0;
};

/// T gates are Z rotations by an odd multiple of pi/4; internal Hadamards are
/// the H gates strictly between the first and last non-Clifford rotation.
inline CircuitStats stats(const Circuit& c) {
    CircuitStats s;
    s.gate_count = c.gates.size();
    s.n_qubits = c.n_qubits;
    std::size_t first_nc = c.gates.size(), last_nc = 0;
    bool any_nc = false;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::H) ++s.h_count;
        if (!g.is_z_rotation()) continue;
        const Angle a = g.rotation_angle();
        if (a.is_constant() && a.const_den() == 4) ++s.t_count;
        if (!a.is_half_pi_multiple()) {
            ++s.non_clifford_rz_count;
            if (!any_nc) first_nc = i;
            last_nc = i;
            any_nc = true;
        }
    }
    if (any_nc)
        for (std::size_t i = first_nc + 1; i < last_nc; ++i)
            if (c.gates[i].kind == GateKind::H) ++s.internal_h_count;
    return s;
}

}  // namespace qcmerge
