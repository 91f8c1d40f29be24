#pragma once

#include <cstdint>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qcmerge/errors.hpp"
#include "qcmerge/pauli.hpp"

// Word-packed boolean matrices and GF(2) rank machinery.

namespace qcmerge {

class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(word_count(cols == 0 ? 1 : cols)), w_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        if (v)
            w_[r * wpr_ + c / kWordBits] |= mask;
        else
            w_[r * wpr_ + c / kWordBits] &= ~mask;
    }

    /// Column c as a packed bit vector over the row index.
    std::vector<std::uint64_t> column(std::size_t c) const {
        std::vector<std::uint64_t> col(word_count(rows_ == 0 ? 1 : rows_), 0);
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, c)) col[r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
        return col;
    }

    /// ASCII bitmap in the portable-bitmap style, for debugging dumps.
    std::string to_pbm() const {
        std::string out = "P1\n" + std::to_string(cols_) + " " + std::to_string(rows_) + "\n";
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out += get(r, c) ? '1' : '0';
                if (c + 1 < cols_) out += ' ';
            }
            out += '\n';
        }
        return out;
    }

private:
    std::size_t rows_, cols_, wpr_;
    std::vector<std::uint64_t> w_;
};

/// Grows a reduced basis one vector at a time; insert() reports independence.
class IncrementalGf2Basis {
public:
    explicit IncrementalGf2Basis(std::size_t words) : words_(words) {}

    std::size_t size() const { return by_pivot_.size(); }

    /// Reduces `vec` in place against the basis. Returns true (and absorbs the
    /// reduced vector) when it was independent of the span.
    bool insert(std::vector<std::uint64_t>& vec) {
        for (;;) {
            const std::size_t pivot = lowest_set_bit(vec);
            if (pivot == kNone) return false;
            auto it = by_pivot_.find(pivot);
            if (it == by_pivot_.end()) {
                by_pivot_.emplace(pivot, vec);
                return true;
            }
            const std::vector<std::uint64_t>& basis_vec = it->second;
            for (std::size_t w = 0; w < words_; ++w) vec[w] ^= basis_vec[w];
        }
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    static std::size_t lowest_set_bit(const std::vector<std::uint64_t>& vec) {
        for (std::size_t w = 0; w < vec.size(); ++w)
            if (vec[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(vec[w]));
        return kNone;
    }

    std::size_t words_;
    std::map<std::size_t, std::vector<std::uint64_t>> by_pivot_;
};

inline std::size_t gf2_rank(const BitMatrix& m) {
    IncrementalGf2Basis basis(word_count(m.rows() == 0 ? 1 : m.rows()));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<std::uint64_t> col = m.column(c);
        if (basis.insert(col)) ++rank;
    }
    return rank;
}

/// Column rank profile: bits[i] == 1 iff column i enlarges the span of the
/// columns to its left; pivot_indices lists those i in order.
struct RankVector {
    std::vector<std::uint8_t> bits;
    std::vector<std::size_t> pivot_indices;

    std::size_t weight() const { return pivot_indices.size(); }
};

inline RankVector gf2_rank_profile(const BitMatrix& m) {
    RankVector v;
    v.bits.assign(m.cols(), 0);
    IncrementalGf2Basis basis(word_count(m.rows() == 0 ? 1 : m.rows()));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<std::uint64_t> col = m.column(c);
        if (basis.insert(col)) {
            v.bits[c] = 1;
            v.pivot_indices.push_back(c);
        }
    }
    return v;
}

}  // namespace qcmerge
