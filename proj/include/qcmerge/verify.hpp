#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcmerge/circuit.hpp"
#include "qcmerge/dense.hpp"
#include "qcmerge/errors.hpp"
#include "qcmerge/rotation_seq.hpp"

// Ground-truth equivalence oracles. All equivalence is modulo global phase.

namespace qcmerge {

struct EquivalenceReport {
    std::string method;  // dense_unitary | statevector_sampling
    bool equivalent = false;
    double max_deviation = 0.0;
    int samples = 0;
    std::vector<std::map<std::string, double>> assignments;
    std::uint64_t seed = 0;
};

namespace detail {

inline void apply_gate_to_state(const Gate& g, CVec& v, std::size_t n,
                                const std::map<std::string, double>& assignment) {
    constexpr double kInvSqrt2 = 0.7071067811865475244;
    static const Complex kI{0.0, 1.0};
    switch (g.kind) {
        case GateKind::H: {
            const Complex m[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
            apply_single_qubit(m, v, n, g.q0);
            return;
        }
        case GateKind::X: {
            const Complex m[4] = {0, 1, 1, 0};
            apply_single_qubit(m, v, n, g.q0);
            return;
        }
        case GateKind::CNOT: apply_cnot(v, n, g.q0, g.q1); return;
        case GateKind::CZ: apply_cz(v, n, g.q0, g.q1); return;
        default: {
            const double theta = g.rotation_angle().evaluate(assignment);
            const Complex m[4] = {std::exp(-kI * (theta / 2)), 0, 0, std::exp(kI * (theta / 2))};
            apply_single_qubit(m, v, n, g.q0);
            return;
        }
    }
}

}  // namespace detail

/// Exact gate-by-gate product; parametrized rotations are evaluated under the
/// assignment. Row-major 2^n x 2^n, qubit 0 the leftmost factor.
inline CMat dense_unitary(const Circuit& c, const std::map<std::string, double>& assignment = {},
                          std::size_t max_qubits = 10) {
    c.validate();
    if (c.n_qubits > max_qubits) throw ResourceError("dense_unitary: qubit cap exceeded");
    const std::size_t n = c.n_qubits;
    const std::size_t dim = std::size_t{1} << n;
    std::vector<CVec> cols(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        cols[b].assign(dim, Complex{0.0});
        cols[b][b] = 1.0;
    }
    for (const Gate& g : c.gates)
        for (std::size_t b = 0; b < dim; ++b) detail::apply_gate_to_state(g, cols[b], n, assignment);
    CMat u(dim * dim);
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t b = 0; b < dim; ++b) u[row * dim + b] = cols[b][row];
    return u;
}

/// Rebuilds the dense unitary of a rotation sequence: rotations in order,
/// then the trailing Clifford. Used to cross-check extraction.
inline CMat rotation_sequence_unitary(const RotationSequence& seq,
                                      const std::map<std::string, double>& assignment = {},
                                      std::size_t max_qubits = 10) {
    const std::size_t n = seq.clifford_inverse.n_qubits();
    if (n > max_qubits) throw ResourceError("rotation_sequence_unitary: qubit cap exceeded");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<CVec> cols(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        cols[b].assign(dim, Complex{0.0});
        cols[b][b] = 1.0;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const double theta = seq.angles[i].evaluate(assignment);
        const Complex c = std::cos(theta / 2), s = std::sin(theta / 2);
        for (std::size_t b = 0; b < dim; ++b) {
            CVec pv = cols[b];
            apply_pauli(seq.axes[i], pv);
            for (std::size_t r = 0; r < dim; ++r)
                cols[b][r] = c * cols[b][r] - Complex{0.0, 1.0} * s * pv[r];
        }
    }
    // clifford_inverse encodes C^dag; apply C = (C^dag)^dag.
    const CMat cdag = seq.clifford_inverse.to_unitary(max_qubits);
    const CMat cmat = cmat_adjoint(cdag, dim);
    CMat u(dim * dim, Complex{0.0});
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex a = cmat[r * dim + k];
            if (a == Complex{0.0}) continue;
            for (std::size_t b = 0; b < dim; ++b) u[r * dim + b] += a * cols[b][k];
        }
    return u;
}

namespace detail {

inline std::set<std::string> circuit_parameters(const Circuit& c) {
    std::set<std::string> names;
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::RZ)
            for (const auto& [name, coeff] : g.angle.params()) names.insert(name);
    return names;
}

/// Uniform draw from [0, 2pi) staying clear of the pi/2 grid.
inline double generic_angle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(0.0, 2 * std::numbers::pi);
    for (;;) {
        const double x = dist(rng);
        const double r = std::fmod(x, std::numbers::pi / 2);
        if (std::min(r, std::numbers::pi / 2 - r) > 1e-6) return x;
    }
}

}  // namespace detail

/// Compares two circuits up to a global phase. Dense matrices up to 10
/// qubits; statevector sampling with 8 shared random states up to 20.
/// Parametrized circuits are compared at n_param_samples random assignments.
inline EquivalenceReport equivalent_up_to_phase(const Circuit& c1, const Circuit& c2, double tol,
                                                int n_param_samples = 5,
                                                std::uint64_t seed = 0x5eed5eedULL) {
    if (c1.n_qubits != c2.n_qubits) throw DimensionError("equivalent_up_to_phase: qubit mismatch");
    if (tol <= 0) throw UsageError("equivalent_up_to_phase: tolerance must be positive");
    const std::size_t n = c1.n_qubits;
    if (n > 20) throw ResourceError("equivalent_up_to_phase: qubit cap exceeded");

    std::set<std::string> params = detail::circuit_parameters(c1);
    for (const std::string& name : detail::circuit_parameters(c2)) params.insert(name);

    EquivalenceReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    const int samples = params.empty() ? 1 : n_param_samples;

    for (int s = 0; s < samples; ++s) {
        std::map<std::string, double> assignment;
        for (const std::string& name : params) assignment[name] = detail::generic_angle(rng);
        report.assignments.push_back(assignment);
    }
    report.samples = samples;

    if (n <= 10) {
        report.method = "dense_unitary";
        for (const auto& assignment : report.assignments) {
            const CMat u1 = dense_unitary(c1, assignment);
            const CMat u2 = dense_unitary(c2, assignment);
            report.max_deviation = std::max(report.max_deviation, max_abs_diff_up_to_phase(u1, u2));
        }
        report.equivalent = report.max_deviation <= tol;
        return report;
    }

    report.method = "statevector_sampling";
    const std::size_t dim = std::size_t{1} << n;
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (const auto& assignment : report.assignments) {
        for (int k = 0; k < 8; ++k) {
            CVec psi(dim);
            double norm2 = 0.0;
            for (Complex& a : psi) {
                a = Complex{gauss(rng), gauss(rng)};
                norm2 += std::norm(a);
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (Complex& a : psi) a *= inv;
            CVec psi1 = psi, psi2 = psi;
            for (const Gate& g : c1.gates) detail::apply_gate_to_state(g, psi1, n, assignment);
            for (const Gate& g : c2.gates) detail::apply_gate_to_state(g, psi2, n, assignment);
            Complex overlap{0.0};
            for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(psi1[i]) * psi2[i];
            worst = std::max(worst, 1.0 - std::abs(overlap));
        }
    }
    report.max_deviation = worst;
    report.equivalent = worst <= tol;
    return report;
}

}  // namespace qcmerge
