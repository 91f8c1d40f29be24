#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcmerge/dense.hpp"
#include "qcmerge/errors.hpp"
#include "qcmerge/pauli.hpp"

namespace qcmerge {

enum class CliffordGateKind { H, S, Sdg, X, Z, CNOT, CZ };

/// A Clifford operator U on n qubits, stored as the images of the Pauli basis
/// under conjugation: row_x[i] = U X_i U^dag, row_z[i] = U Z_i U^dag, each a
/// signed PauliProduct (2n rows of 2n mask bits plus a sign bit each).
///
/// The mutation primitive composes onto the early side of the operator:
/// prepend(g) maps U to U g^dag, i.e. g^dag is applied before everything the
/// tableau already encodes. Feeding a circuit's gates through prepend in
/// program order therefore leaves the tableau encoding the inverse of that
/// circuit's Clifford content, which is exactly the frame in which rotation
/// axes are read off via stabilizer_generator. Every update is O(n) word ops.
class CliffordTableau {
public:
    explicit CliffordTableau(std::size_t n_qubits) : n_(n_qubits) {
        if (n_qubits == 0) throw UsageError("CliffordTableau needs at least one qubit");
        x_rows_.reserve(n_);
        z_rows_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            x_rows_.push_back(PauliProduct::single(n_, i, 'X'));
            z_rows_.push_back(PauliProduct::single(n_, i, 'Z'));
        }
    }

    static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }

    std::size_t n_qubits() const { return n_; }

    /// Destabilizer row: the image of X_i.
    const PauliProduct& destabilizer_generator(std::size_t i) const {
        check_index(i);
        return x_rows_[i];
    }

    /// Stabilizer row: the image of Z_i. Always Hermitian.
    const PauliProduct& stabilizer_generator(std::size_t i) const {
        check_index(i);
        return z_rows_[i];
    }

    /// U <- U g^dag.
    void prepend_gate(CliffordGateKind kind, std::size_t q0, std::size_t q1 = kNoQubit) {
        switch (kind) {
            case CliffordGateKind::H: prepend_h(q0); return;
            case CliffordGateKind::S: prepend_s(q0); return;
            case CliffordGateKind::Sdg: prepend_sdg(q0); return;
            case CliffordGateKind::X: prepend_x(q0); return;
            case CliffordGateKind::Z: prepend_z(q0); return;
            case CliffordGateKind::CNOT: prepend_cnot(q0, q1); return;
            case CliffordGateKind::CZ: prepend_cz(q0, q1); return;
        }
        throw UsageError("prepend_gate: unknown gate kind");
    }

    // Single-qubit updates. Each rewrites the affected basis rows using
    // g^dag B g expanded over the old rows.
    void prepend_h(std::size_t q) {
        check_index(q);
        std::swap(x_rows_[q], z_rows_[q]);
    }

    void prepend_s(std::size_t q) {
        check_index(q);
        // S^dag X S = -Y = -i XZ
        PauliProduct r = multiply(x_rows_[q], z_rows_[q]);
        r.set_phase((r.phase() + 3) & 3);
        x_rows_[q] = std::move(r);
    }

    void prepend_sdg(std::size_t q) {
        check_index(q);
        // S X S^dag = Y = i XZ
        PauliProduct r = multiply(x_rows_[q], z_rows_[q]);
        r.set_phase((r.phase() + 1) & 3);
        x_rows_[q] = std::move(r);
    }

    void prepend_x(std::size_t q) {
        check_index(q);
        z_rows_[q].negate();
    }

    void prepend_z(std::size_t q) {
        check_index(q);
        x_rows_[q].negate();
    }

    void prepend_cnot(std::size_t control, std::size_t target) {
        check_pair(control, target);
        x_rows_[control] = multiply(x_rows_[control], x_rows_[target]);
        z_rows_[target] = multiply(z_rows_[target], z_rows_[control]);
    }

    void prepend_cz(std::size_t a, std::size_t b) {
        check_pair(a, b);
        x_rows_[a] = multiply(x_rows_[a], z_rows_[b]);
        x_rows_[b] = multiply(x_rows_[b], z_rows_[a]);
    }

    /// Prepends the inverse of a quarter-turn Z rotation: the effect of
    /// prepend_gate with {identity, S, Z, Sdg} for quarter_turns 0..3.
    void prepend_z_rotation(int quarter_turns, std::size_t q) {
        switch (quarter_turns & 3) {
            case 0: check_index(q); return;
            case 1: prepend_s(q); return;
            case 2: prepend_z(q); return;
            case 3: prepend_sdg(q); return;
        }
    }

    /// Dense matrix of the encoded operator, fixed to a deterministic global
    /// phase. Test-only oracle; n is capped.
    CMat to_unitary(std::size_t max_qubits = 10) const {
        if (n_ > max_qubits) throw ResourceError("to_unitary: qubit cap exceeded");
        const std::size_t dim = std::size_t{1} << n_;
        // U|0..0> is the state stabilized by the Z-images; project a basis
        // vector onto the joint +1 eigenspace.
        CVec psi0;
        for (std::size_t k = 0; k < dim; ++k) {
            CVec v(dim, Complex{0.0});
            v[k] = 1.0;
            for (std::size_t i = 0; i < n_; ++i) {
                CVec pv = v;
                apply_pauli(z_rows_[i], pv);
                for (std::size_t j = 0; j < dim; ++j) v[j] = 0.5 * (v[j] + pv[j]);
            }
            double norm2 = 0.0;
            for (const Complex& c : v) norm2 += std::norm(c);
            if (norm2 > 1e-9) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (Complex& c : v) c *= inv;
                // Normalize the global phase on the largest amplitude.
                std::size_t best = 0;
                for (std::size_t j = 0; j < dim; ++j)
                    if (std::abs(v[j]) > std::abs(v[best])) best = j;
                const Complex ph = v[best] / std::abs(v[best]);
                for (Complex& c : v) c /= ph;
                psi0 = std::move(v);
                break;
            }
        }
        if (psi0.empty()) throw Error("to_unitary: stabilizer projection failed");
        CMat u(dim * dim, Complex{0.0});
        for (std::size_t col = 0; col < dim; ++col) {
            CVec v = psi0;
            for (std::size_t q = 0; q < n_; ++q)
                if ((col >> (n_ - 1 - q)) & 1) apply_pauli(x_rows_[q], v);
            for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = v[row];
        }
        return u;
    }

    /// Row-structure sanity check: every row Hermitian, row i anticommutes
    /// exactly with its partner and commutes with everything else.
    void check_invariants() const {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!x_rows_[i].is_hermitian() || !z_rows_[i].is_hermitian())
                throw Error("tableau invariant: non-Hermitian row");
            for (std::size_t j = 0; j < n_; ++j) {
                if (commutes(x_rows_[i], z_rows_[j]) != (i != j))
                    throw Error("tableau invariant: destabilizer/stabilizer pairing broken");
                if (!commutes(x_rows_[i], x_rows_[j]) || !commutes(z_rows_[i], z_rows_[j]))
                    throw Error("tableau invariant: rows of the same kind must commute");
            }
        }
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) out += "X" + std::to_string(i) + " -> " + x_rows_[i].str() + "\n";
        for (std::size_t i = 0; i < n_; ++i) out += "Z" + std::to_string(i) + " -> " + z_rows_[i].str() + "\n";
        return out;
    }

    bool operator==(const CliffordTableau& other) const {
        return n_ == other.n_ && x_rows_ == other.x_rows_ && z_rows_ == other.z_rows_;
    }

    static constexpr std::size_t kNoQubit = static_cast<std::size_t>(-1);

private:
    void check_index(std::size_t q) const {
        if (q >= n_) throw UsageError("tableau: qubit index out of range");
    }

    void check_pair(std::size_t a, std::size_t b) const {
        check_index(a);
        check_index(b);
        if (a == b) throw UsageError("tableau: two-qubit gate needs distinct qubits");
    }

    std::size_t n_;
    std::vector<PauliProduct> x_rows_;
    std::vector<PauliProduct> z_rows_;
};

}  // namespace qcmerge
