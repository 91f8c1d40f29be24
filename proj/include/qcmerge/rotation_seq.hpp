#pragma once

#include <cstddef>
#include <vector>

#include "qcmerge/angle.hpp"
#include "qcmerge/circuit.hpp"
#include "qcmerge/errors.hpp"
#include "qcmerge/gf2.hpp"
#include "qcmerge/pauli.hpp"
#include "qcmerge/tableau.hpp"

namespace qcmerge {

/// Normal form of a circuit: an ordered list of Pauli rotations (earliest
/// first, each axis expressed in the frame of the circuit start) followed by
/// one Clifford operator. `clifford_inverse` encodes the INVERSE of that
/// trailing Clifford, which is what the extraction tableau naturally tracks.
struct RotationSequence {
    std::vector<PauliProduct> axes;
    std::vector<Angle> angles;
    CliffordTableau clifford_inverse;
    std::vector<std::size_t> source_positions;  // gate index in the source circuit

    explicit RotationSequence(std::size_t n_qubits) : clifford_inverse(n_qubits) {}

    std::size_t size() const { return axes.size(); }
};

namespace detail {

/// Folds a Clifford circuit gate into the frame tableau.
inline void prepend_clifford(CliffordTableau& tab, const Gate& g) {
    switch (g.kind) {
        case GateKind::H: tab.prepend_h(g.q0); return;
        case GateKind::X: tab.prepend_x(g.q0); return;
        case GateKind::CNOT: tab.prepend_cnot(g.q0, g.q1); return;
        case GateKind::CZ: tab.prepend_cz(g.q0, g.q1); return;
        default: tab.prepend_z_rotation(g.rotation_angle().quarter_turns(), g.q0); return;
    }
}

}  // namespace detail

/// Single pass over the gate list: Clifford content folds into a frame
/// tableau, every non-Clifford Z rotation contributes its conjugated axis.
inline RotationSequence extract(const Circuit& c) {
    c.validate();
    RotationSequence seq(c.n_qubits);
    CliffordTableau frame(c.n_qubits);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.is_clifford()) {
            detail::prepend_clifford(frame, g);
            continue;
        }
        PauliProduct axis = frame.stabilizer_generator(g.q0);
        if (axis.is_identity_mask()) throw Error("extract: identity rotation axis");
        seq.axes.push_back(std::move(axis));
        seq.angles.push_back(g.rotation_angle());
        seq.source_positions.push_back(i);
    }
    seq.clifford_inverse = std::move(frame);
    return seq;
}

/// Strictly upper triangular anticommutation pattern of a rotation sequence.
struct CommutativityMatrix {
    std::size_t m = 0;
    BitMatrix bits;

    explicit CommutativityMatrix(std::size_t size) : m(size), bits(size, size) {}

    /// Requires i < j.
    bool anticommute_at(std::size_t i, std::size_t j) const { return bits.get(i, j); }

    std::size_t rank() const { return gf2_rank(bits); }
};

inline CommutativityMatrix commutativity_matrix(const RotationSequence& seq) {
    CommutativityMatrix a(seq.size());
    for (std::size_t j = 1; j < seq.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (anticommutes(seq.axes[i], seq.axes[j])) a.bits.set(i, j, true);
    return a;
}

/// Commutativity matrix of the circuit padded with one non-Clifford rotation
/// per qubit at the front and at the back. The pad angle is irrelevant as long
/// as it is not a pi/2 multiple; pi/4 is used.
inline CommutativityMatrix extended_commutativity_matrix(const Circuit& c) {
    Circuit padded;
    padded.n_qubits = c.n_qubits;
    padded.qubit_names = c.qubit_names;
    padded.gates.reserve(c.gates.size() + 2 * c.n_qubits);
    for (std::uint32_t q = 0; q < c.n_qubits; ++q) padded.gates.push_back(Gate::t(q));
    padded.gates.insert(padded.gates.end(), c.gates.begin(), c.gates.end());
    for (std::uint32_t q = 0; q < c.n_qubits; ++q) padded.gates.push_back(Gate::t(q));
    return commutativity_matrix(extract(padded));
}

/// Column rank profile of the commutativity matrix, built incrementally: for
/// each rotation the anticommutation column against all earlier rotations is
/// formed (O(n m / w) inner products) and reduced against a basis of at most
/// h previous pivot columns (O(m h / w)). The matrix itself is never stored.
inline RankVector rank_vector(const RotationSequence& seq) {
    const std::size_t m = seq.size();
    RankVector v;
    v.bits.assign(m, 0);
    if (m == 0) return v;
    const std::size_t words = word_count(m);
    IncrementalGf2Basis basis(words);
    std::vector<std::uint64_t> col(words);
    for (std::size_t t = 0; t < m; ++t) {
        std::fill(col.begin(), col.end(), 0);
        for (std::size_t i = 0; i < t; ++i)
            if (anticommutes(seq.axes[i], seq.axes[t]))
                col[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        if (basis.insert(col)) {
            v.bits[t] = 1;
            v.pivot_indices.push_back(t);
        }
    }
    return v;
}

}  // namespace qcmerge
