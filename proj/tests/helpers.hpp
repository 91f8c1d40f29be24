#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qcmerge/circuit.hpp"
#include "qcmerge/dense.hpp"
#include "qcmerge/pauli.hpp"

// Shared test utilities: deterministic random generators and independent
// oracles. Oracles here deliberately avoid the word-packed code paths they
// are used to check.

namespace qcmerge::testing {

inline PauliProduct random_pauli(std::mt19937_64& rng, std::size_t n, bool hermitian = true) {
    PauliProduct p(n);
    std::uniform_int_distribution<int> axis(0, 3);
    for (std::size_t q = 0; q < n; ++q) {
        switch (axis(rng)) {
            case 1: p.set_axis(q, 'X'); break;
            case 2: p.set_axis(q, 'Y'); break;
            case 3: p.set_axis(q, 'Z'); break;
            default: break;
        }
    }
    if (hermitian)
        p.set_phase((rng() & 1) ? 2 : 0);
    else
        p.set_phase(static_cast<std::uint8_t>(rng() & 3));
    return p;
}

inline PauliProduct random_nonidentity_pauli(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        PauliProduct p = random_pauli(rng, n);
        if (!p.is_identity_mask()) return p;
    }
}

/// Per-position commutation oracle: odd count of positions where both factors
/// are non-identity and differ means anticommute.
inline bool commutes_oracle(const PauliProduct& p, const PauliProduct& q) {
    std::size_t odd = 0;
    for (std::size_t i = 0; i < p.n_qubits(); ++i) {
        const char a = p.axis_at(i), b = q.axis_at(i);
        if (a != 'I' && b != 'I' && a != b) ++odd;
    }
    return odd % 2 == 0;
}

/// Random circuit over the Clifford+T gate set.
inline Circuit random_clifford_t_circuit(std::mt19937_64& rng, std::uint32_t n_qubits,
                                         std::size_t n_gates) {
    Circuit c;
    c.n_qubits = n_qubits;
    std::uniform_int_distribution<std::uint32_t> qubit(0, n_qubits - 1);
    std::uniform_int_distribution<int> kind(0, 8);
    for (std::size_t i = 0; i < n_gates; ++i) {
        const std::uint32_t q = qubit(rng);
        switch (kind(rng)) {
            case 0: c.gates.push_back(Gate::h(q)); break;
            case 1: c.gates.push_back(Gate::x(q)); break;
            case 2: c.gates.push_back(Gate::z(q)); break;
            case 3: c.gates.push_back(Gate::s(q)); break;
            case 4: c.gates.push_back(Gate::sdg(q)); break;
            case 5: c.gates.push_back(Gate::t(q)); break;
            case 6: c.gates.push_back(Gate::tdg(q)); break;
            case 7:
            case 8: {
                if (n_qubits < 2) {
                    c.gates.push_back(Gate::t(q));
                    break;
                }
                std::uint32_t q2 = qubit(rng);
                while (q2 == q) q2 = qubit(rng);
                c.gates.push_back((rng() & 1) ? Gate::cnot(q, q2) : Gate::cz(q, q2));
                break;
            }
        }
    }
    return c;
}

/// Random Clifford circuit plus parametrized rotations, each rotation with a
/// fresh parameter symbol (so no parameter appears twice).
inline Circuit random_parametrized_clifford_circuit(std::mt19937_64& rng, std::uint32_t n_qubits,
                                                    std::size_t n_rotations, std::size_t* param_counter) {
    Circuit c;
    c.n_qubits = n_qubits;
    std::uniform_int_distribution<std::uint32_t> qubit(0, n_qubits - 1);
    std::uniform_int_distribution<int> kind(0, 7);
    std::size_t placed = 0;
    while (placed < n_rotations) {
        const std::uint32_t q = qubit(rng);
        switch (kind(rng)) {
            case 0: c.gates.push_back(Gate::h(q)); break;
            case 1: c.gates.push_back(Gate::s(q)); break;
            case 2: c.gates.push_back(Gate::x(q)); break;
            case 3:
            case 4: {
                if (n_qubits < 2) break;
                std::uint32_t q2 = qubit(rng);
                while (q2 == q) q2 = qubit(rng);
                c.gates.push_back((rng() & 1) ? Gate::cnot(q, q2) : Gate::cz(q, q2));
                break;
            }
            default: {
                c.gates.push_back(Gate::rz(Angle::parameter("a" + std::to_string((*param_counter)++)), q));
                ++placed;
                break;
            }
        }
    }
    return c;
}

inline std::map<std::string, double> random_assignment(std::mt19937_64& rng, const Circuit& c) {
    std::map<std::string, double> assignment;
    std::uniform_real_distribution<double> dist(0.0, 6.28318);
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::RZ)
            for (const auto& [name, coeff] : g.angle.params()) assignment.emplace(name, dist(rng));
    return assignment;
}

}  // namespace qcmerge::testing
