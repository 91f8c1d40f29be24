#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcmerge/errors.hpp"

namespace qcmerge {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// A signed Pauli operator on n qubits: i^phase * (sigma_0 x sigma_1 x ... x sigma_{n-1}).
///
/// Each qubit's factor is encoded by a (z, x) bit pair: (0,0)=I, (0,1)=X, (1,1)=Y, (1,0)=Z.
/// The phase exponent is tracked mod 4 so that products of Hermitian operators, which can
/// pick up factors of +-i, stay exact. An operator is Hermitian iff phase is 0 or 2.
class PauliProduct {
public:
    explicit PauliProduct(std::size_t n_qubits)
        : n_(n_qubits), z_(word_count(n_qubits), 0), x_(word_count(n_qubits), 0) {
        if (n_qubits == 0) throw UsageError("PauliProduct needs at least one qubit");
    }

    static PauliProduct identity(std::size_t n) { return PauliProduct(n); }

    static PauliProduct single(std::size_t n, std::size_t qubit, char axis, bool negative = false) {
        PauliProduct p(n);
        p.set_axis(qubit, axis);
        if (negative) p.phase_ = 2;
        return p;
    }

    /// Parses "+ZIX", "-Y", "iXX", "-iZ", ... (sign optional, defaults to +).
    static PauliProduct parse(std::string_view text) {
        std::size_t pos = 0;
        std::uint8_t phase = 0;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') phase = 2;
            ++pos;
        }
        if (pos < text.size() && text[pos] == 'i') {
            phase = (phase + 1) & 3;
            ++pos;
        }
        if (pos == text.size()) throw ParseError("empty Pauli string");
        PauliProduct p(text.size() - pos);
        for (std::size_t q = 0; pos < text.size(); ++q, ++pos) p.set_axis(q, text[pos]);
        p.phase_ = phase;
        return p;
    }

    std::size_t n_qubits() const { return n_; }
    std::uint8_t phase() const { return phase_; }
    void set_phase(std::uint8_t ph) { phase_ = ph & 3; }
    void negate() { phase_ = (phase_ + 2) & 3; }

    bool z_bit(std::size_t q) const { return (z_[q / kWordBits] >> (q % kWordBits)) & 1; }
    bool x_bit(std::size_t q) const { return (x_[q / kWordBits] >> (q % kWordBits)) & 1; }

    void set_z(std::size_t q, bool v) { set_bit(z_, q, v); }
    void set_x(std::size_t q, bool v) { set_bit(x_, q, v); }

    void set_axis(std::size_t q, char axis) {
        switch (axis) {
            case 'I': set_z(q, false); set_x(q, false); break;
            case 'X': set_z(q, false); set_x(q, true); break;
            case 'Y': set_z(q, true); set_x(q, true); break;
            case 'Z': set_z(q, true); set_x(q, false); break;
            default: throw ParseError(std::string("invalid Pauli axis '") + axis + "'");
        }
    }

    char axis_at(std::size_t q) const {
        return "IXZY"[static_cast<int>(x_bit(q)) + 2 * static_cast<int>(z_bit(q))];
    }

    bool is_identity_mask() const {
        for (std::size_t i = 0; i < z_.size(); ++i)
            if (z_[i] | x_[i]) return false;
        return true;
    }

    bool is_hermitian() const { return (phase_ & 1) == 0; }

    /// +1 or -1; only meaningful for Hermitian operators.
    int sign() const {
        if (!is_hermitian()) throw UsageError("sign() of a non-Hermitian Pauli");
        return phase_ == 0 ? 1 : -1;
    }

    bool masks_equal(const PauliProduct& other) const {
        return n_ == other.n_ && z_ == other.z_ && x_ == other.x_;
    }

    bool operator==(const PauliProduct& other) const {
        return masks_equal(other) && phase_ == other.phase_;
    }

    const std::vector<std::uint64_t>& z_words() const { return z_; }
    const std::vector<std::uint64_t>& x_words() const { return x_; }

    std::string str() const {
        static const char* kPhase[] = {"+", "i", "-", "-i"};
        std::string out = kPhase[phase_];
        out.reserve(out.size() + n_);
        for (std::size_t q = 0; q < n_; ++q) {
            bool z = z_bit(q), x = x_bit(q);
            out += z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I');
        }
        return out;
    }

    friend bool commutes(const PauliProduct& p, const PauliProduct& q) {
        if (p.n_ != q.n_) throw DimensionError("commutes: qubit count mismatch");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < p.z_.size(); ++i) {
            acc ^= static_cast<std::uint64_t>(std::popcount(p.z_[i] & q.x_[i]));
            acc ^= static_cast<std::uint64_t>(std::popcount(p.x_[i] & q.z_[i]));
        }
        return (acc & 1) == 0;
    }

    friend bool anticommutes(const PauliProduct& p, const PauliProduct& q) {
        return !commutes(p, q);
    }

    /// Exact matrix product p*q, including the mod-4 phase.
    friend PauliProduct multiply(const PauliProduct& p, const PauliProduct& q) {
        if (p.n_ != q.n_) throw DimensionError("multiply: qubit count mismatch");
        PauliProduct r(p.n_);
        int delta = 0;
        for (std::size_t i = 0; i < p.z_.size(); ++i) {
            const std::uint64_t z1 = p.z_[i], x1 = p.x_[i], z2 = q.z_[i], x2 = q.x_[i];
            const std::uint64_t y1 = z1 & x1, xo = x1 & ~z1, zo = z1 & ~x1;
            const std::uint64_t plus = (y1 & z2 & ~x2) | (xo & z2 & x2) | (zo & x2 & ~z2);
            const std::uint64_t minus = (y1 & x2 & ~z2) | (xo & z2 & ~x2) | (zo & x2 & z2);
            delta += std::popcount(plus) - std::popcount(minus);
            r.z_[i] = z1 ^ z2;
            r.x_[i] = x1 ^ x2;
        }
        r.phase_ = static_cast<std::uint8_t>((p.phase_ + q.phase_ + (delta % 4) + 8) & 3);
        return r;
    }

private:
    static void set_bit(std::vector<std::uint64_t>& words, std::size_t q, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (q % kWordBits);
        if (v)
            words[q / kWordBits] |= mask;
        else
            words[q / kWordBits] &= ~mask;
    }

    std::size_t n_;
    std::vector<std::uint64_t> z_;
    std::vector<std::uint64_t> x_;
    std::uint8_t phase_ = 0;
};

inline bool equal_up_to_sign(const PauliProduct& p, const PauliProduct& q) {
    return p.masks_equal(q);
}

/// +1 if p and q are the same operator, -1 if they differ by a sign.
inline int sign_ratio(const PauliProduct& p, const PauliProduct& q) {
    if (!p.masks_equal(q)) throw UsageError("sign_ratio: operators differ beyond sign");
    const int diff = (4 + p.phase() - q.phase()) & 3;
    if (diff == 0) return 1;
    if (diff == 2) return -1;
    throw UsageError("sign_ratio: operators differ by an odd power of i");
}

/// Dense 2^n x 2^n matrix (row-major), qubit 0 as the leftmost tensor factor.
inline std::vector<std::complex<double>> to_dense(const PauliProduct& p,
                                                  std::size_t max_qubits = 12) {
    if (p.n_qubits() > max_qubits) throw ResourceError("to_dense: qubit cap exceeded");
    const std::size_t dim = std::size_t{1} << p.n_qubits();
    static const std::complex<double> kI{0.0, 1.0};
    const std::complex<double> phases[4] = {1.0, kI, -1.0, -kI};
    std::vector<std::complex<double>> m(dim * dim, 0.0);
    // Pauli matrices are signed permutations: row r maps to column r ^ x_mask.
    for (std::size_t r = 0; r < dim; ++r) {
        std::size_t c = r;
        std::complex<double> amp = phases[p.phase()];
        for (std::size_t q = 0; q < p.n_qubits(); ++q) {
            const std::size_t bitpos = p.n_qubits() - 1 - q;
            const bool b = (r >> bitpos) & 1;  // row bit of qubit q
            const bool z = p.z_bit(q), x = p.x_bit(q);
            if (x) c ^= std::size_t{1} << bitpos;
            if (z && x) amp *= (b ? kI : -kI);  // Y: |0><1| has -i, |1><0| has i
            else if (z && b) amp = -amp;
        }
        m[r * dim + c] = amp;
    }
    return m;
}

}  // namespace qcmerge
