#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qcmerge/errors.hpp"
#include "qcmerge/pauli.hpp"

// Small dense complex-matrix helpers backing the verification oracles.
// Qubit 0 is the leftmost tensor factor, i.e. the most significant index bit.

namespace qcmerge {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using CMat = std::vector<Complex>;  // row-major, square

inline CMat cmat_identity(std::size_t dim) {
    CMat m(dim * dim, Complex{0.0});
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
    return m;
}

inline CMat cmat_mul(const CMat& a, const CMat& b, std::size_t dim) {
    CMat r(dim * dim, Complex{0.0});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex aik = a[i * dim + k];
            if (aik == Complex{0.0}) continue;
            for (std::size_t j = 0; j < dim; ++j) r[i * dim + j] += aik * b[k * dim + j];
        }
    return r;
}

inline CMat cmat_adjoint(const CMat& a, std::size_t dim) {
    CMat r(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) r[j * dim + i] = std::conj(a[i * dim + j]);
    return r;
}

/// v <- (g x I) v for a single-qubit gate g acting on `qubit` of an n-qubit state.
inline void apply_single_qubit(const Complex g[4], CVec& v, std::size_t n, std::size_t qubit) {
    const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t base = 0; base < dim; base += 2 * stride)
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off, i1 = i0 + stride;
            const Complex a = v[i0], b = v[i1];
            v[i0] = g[0] * a + g[1] * b;
            v[i1] = g[2] * a + g[3] * b;
        }
}

inline void apply_cnot(CVec& v, std::size_t n, std::size_t control, std::size_t target) {
    const std::size_t cm = std::size_t{1} << (n - 1 - control);
    const std::size_t tm = std::size_t{1} << (n - 1 - target);
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t i = 0; i < dim; ++i)
        if ((i & cm) && !(i & tm)) std::swap(v[i], v[i | tm]);
}

inline void apply_cz(CVec& v, std::size_t n, std::size_t a, std::size_t b) {
    const std::size_t am = std::size_t{1} << (n - 1 - a);
    const std::size_t bm = std::size_t{1} << (n - 1 - b);
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t i = 0; i < dim; ++i)
        if ((i & am) && (i & bm)) v[i] = -v[i];
}

/// v <- P v for a signed Pauli operator.
inline void apply_pauli(const PauliProduct& p, CVec& v) {
    const std::size_t n = p.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    static const Complex kI{0.0, 1.0};
    const Complex phases[4] = {1.0, kI, -1.0, -kI};
    std::size_t xmask = 0;
    for (std::size_t q = 0; q < n; ++q)
        if (p.x_bit(q)) xmask |= std::size_t{1} << (n - 1 - q);
    CVec out(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        // (P v)[r] = <r|P|c> v[c] with r = c ^ xmask.
        Complex amp = phases[p.phase()];
        const std::size_t r = c ^ xmask;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = (r >> (n - 1 - q)) & 1;
            const bool z = p.z_bit(q), x = p.x_bit(q);
            if (z && x) amp *= (bit ? kI : -kI);
            else if (z && bit) amp = -amp;
        }
        out[r] = amp * v[c];
    }
    v = std::move(out);
}

/// max_ij |a_ij - e^{i phi} b_ij| with phi aligned on the largest-magnitude entry.
inline double max_abs_diff_up_to_phase(const CMat& a, const CMat& b) {
    if (a.size() != b.size()) throw DimensionError("matrix size mismatch");
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double mag = std::abs(a[i]) * std::abs(b[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    Complex phase{1.0, 0.0};
    if (best_mag > 0) {
        phase = a[best] / b[best];
        phase /= std::abs(phase);
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - phase * b[i]));
    return dev;
}

}  // namespace qcmerge
