#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcmerge/angle.hpp"
#include "qcmerge/circuit.hpp"
#include "qcmerge/rotation_seq.hpp"

// Rotation-merging passes.
//
// All three passes share the same skeleton: walk the gate list once, fold
// Clifford content into a frame tableau, and give each non-Clifford Z rotation
// an axis read off the tableau. Two rotations with the same axis (up to sign)
// merge when no rotation between them anticommutes with that axis; a merged
// angle that lands on a multiple of pi/2 turns the survivor into Clifford
// content, which is folded into the frame on the spot. The passes differ only
// in how they find merge candidates and how they test for blockers:
//
//  - tmerge: scans backward over every still-live rotation. O(m^2) checks.
//  - bbmerge: tests only the nearest same-axis candidate, and only against
//    the pivot columns of the rank vector of the input sequence. O(h m)
//    checks. Misses merges whose blockers have since turned Clifford.
//  - fast_tmerge: bbmerge plus a recheck of the live rotations behind a
//    blocking pivot that has already turned Clifford. Restores tmerge's
//    reduction at O(m^2) worst-case checks.
//
// `checks` counts axis-pair commutativity tests and nothing else.

namespace qcmerge {

struct MergeRecord {
    std::size_t from;  // earlier rotation, angle moved away
    std::size_t into;  // later rotation, receives the sum
    int sign;          // +1 same axis sign, -1 opposite
};

struct MergeOutcome {
    Circuit circuit;
    std::string pass_name;
    std::size_t t_count_before = 0;
    std::size_t t_count_after = 0;
    std::size_t rz_count_after = 0;  // surviving non-Clifford rotations
    std::size_t checks = 0;
    std::vector<MergeRecord> merges;
    double wall_time_ms = 0.0;
};

namespace detail {

struct AxisKey {
    std::vector<std::uint64_t> zx;

    explicit AxisKey(const PauliProduct& p) {
        zx.reserve(p.z_words().size() * 2);
        zx.insert(zx.end(), p.z_words().begin(), p.z_words().end());
        zx.insert(zx.end(), p.x_words().begin(), p.x_words().end());
    }

    bool operator==(const AxisKey& other) const { return zx == other.zx; }
};

struct AxisKeyHash {
    std::size_t operator()(const AxisKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : k.zx) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Output circuit: Clifford gates verbatim, the t-th non-Clifford rotation of
/// the input re-angled to r[t]. Zero angles vanish, pi/2 multiples become
/// S/Z/S*, and an untouched angle keeps the original gate spelling.
inline Circuit rebuild_circuit(const Circuit& in, const std::vector<Angle>& r) {
    Circuit out;
    out.n_qubits = in.n_qubits;
    out.qubit_names = in.qubit_names;
    out.gates.reserve(in.gates.size());
    std::size_t t = 0;
    for (const Gate& g : in.gates) {
        if (g.is_clifford()) {
            out.gates.push_back(g);
            continue;
        }
        const Angle& a = r[t++];
        if (a.is_zero()) continue;
        if (a == g.rotation_angle()) {
            out.gates.push_back(g);
            continue;
        }
        if (a.is_half_pi_multiple()) {
            switch (a.quarter_turns()) {
                case 1: out.gates.push_back(Gate::s(g.q0)); break;
                case 2: out.gates.push_back(Gate::z(g.q0)); break;
                case 3: out.gates.push_back(Gate::sdg(g.q0)); break;
            }
            continue;
        }
        if (a.is_constant() && a.const_den() == 4 && a.const_num() == 1)
            out.gates.push_back(Gate::t(g.q0));
        else if (a.is_constant() && a.const_den() == 4 && a.const_num() == 7)
            out.gates.push_back(Gate::tdg(g.q0));
        else
            out.gates.push_back(Gate::rz(a, g.q0));
    }
    return out;
}

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void finish_outcome(MergeOutcome& out, const Circuit& in, const std::vector<Angle>& r,
                           const StopWatch& timer) {
    out.circuit = rebuild_circuit(in, r);
    out.t_count_before = stats(in).t_count;
    const CircuitStats after = stats(out.circuit);
    out.t_count_after = after.t_count;
    out.rz_count_after = after.non_clifford_rz_count;
    out.wall_time_ms = timer.ms();
}

}  // namespace detail

/// Exhaustive backward-scan merge. For every new rotation, walks the live
/// rotations from the most recent one: a same-axis rotation merges, an
/// anticommuting one blocks, anything else is stepped over.
inline MergeOutcome tmerge(const Circuit& c) {
    detail::StopWatch timer;
    c.validate();
    MergeOutcome out;
    out.pass_name = "tmerge";

    CliffordTableau frame(c.n_qubits);
    std::vector<PauliProduct> axes;
    std::vector<Angle> r;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> prev, next;
    std::size_t tail = kNone;

    auto unlink = [&](std::size_t s) {
        if (prev[s] != kNone) next[prev[s]] = next[s];
        if (next[s] != kNone) prev[next[s]] = prev[s];
        if (tail == s) tail = prev[s];
    };

    for (const Gate& g : c.gates) {
        if (g.is_clifford()) {
            detail::prepend_clifford(frame, g);
            continue;
        }
        const std::size_t t = axes.size();
        axes.push_back(frame.stabilizer_generator(g.q0));
        r.push_back(g.rotation_angle());
        prev.push_back(kNone);
        next.push_back(kNone);
        const PauliProduct& p = axes[t];

        bool live = true;
        for (std::size_t s = tail; s != kNone; s = prev[s]) {
            if (equal_up_to_sign(p, axes[s])) {
                const int sign = sign_ratio(p, axes[s]);
                r[t] = add(r[t], sign == 1 ? r[s] : negate(r[s]));
                r[s] = Angle::zero();
                unlink(s);
                out.merges.push_back({s, t, sign});
                if (r[t].is_half_pi_multiple()) {
                    frame.prepend_z_rotation(r[t].quarter_turns(), g.q0);
                    live = false;
                }
                break;
            }
            ++out.checks;
            if (anticommutes(p, axes[s])) break;
        }
        if (live) {
            prev[t] = tail;
            if (tail != kNone) next[tail] = t;
            tail = t;
        }
    }
    detail::finish_outcome(out, c, r, timer);
    return out;
}

/// Rank-pruned merge. Candidates come from a per-axis index; blocker tests
/// touch only the pivot positions of the input sequence's rank vector.
inline MergeOutcome bbmerge(const Circuit& c) {
    detail::StopWatch timer;
    c.validate();
    MergeOutcome out;
    out.pass_name = "bbmerge";

    const RankVector v = rank_vector(extract(c));
    const std::vector<std::size_t>& pivots = v.pivot_indices;

    CliffordTableau frame(c.n_qubits);
    std::vector<PauliProduct> axes;
    std::vector<Angle> r;
    std::unordered_map<detail::AxisKey, std::vector<std::size_t>, detail::AxisKeyHash> candidates;

    for (const Gate& g : c.gates) {
        if (g.is_clifford()) {
            detail::prepend_clifford(frame, g);
            continue;
        }
        const std::size_t t = axes.size();
        axes.push_back(frame.stabilizer_generator(g.q0));
        r.push_back(g.rotation_angle());
        const PauliProduct& p = axes[t];

        std::vector<std::size_t>& list = candidates[detail::AxisKey(p)];
        list.push_back(t);
        if (list.size() >= 2) {
            const std::size_t j = list[list.size() - 2];
            bool merge = true;
            auto it = std::lower_bound(pivots.begin(), pivots.end(), j);
            for (; it != pivots.end() && *it < t; ++it) {
                ++out.checks;
                if (anticommutes(p, axes[*it])) {
                    merge = false;
                    break;
                }
            }
            if (merge) {
                const int sign = sign_ratio(p, axes[j]);
                r[t] = add(r[t], sign == 1 ? r[j] : negate(r[j]));
                r[j] = Angle::zero();
                list.erase(list.end() - 2);
                out.merges.push_back({j, t, sign});
                if (r[t].is_half_pi_multiple()) {
                    frame.prepend_z_rotation(r[t].quarter_turns(), g.q0);
                    list.pop_back();
                }
            }
        }
    }
    detail::finish_outcome(out, c, r, timer);
    return out;
}

/// Rank-pruned merge with a recheck for stale blockers. A pivot that
/// anticommutes but has already turned Clifford no longer blocks by itself;
/// every live rotation behind it is then retested directly. Rescues cost
/// O(m) each, so the worst case matches the exhaustive scan, but they only
/// trigger once merges have started folding rotations into the frame.
inline MergeOutcome fast_tmerge(const Circuit& c) {
    detail::StopWatch timer;
    c.validate();
    MergeOutcome out;
    out.pass_name = "fasttmerge";

    const RankVector v = rank_vector(extract(c));
    const std::vector<std::size_t>& pivots = v.pivot_indices;

    CliffordTableau frame(c.n_qubits);
    std::vector<PauliProduct> axes;
    std::vector<Angle> r;
    std::unordered_map<detail::AxisKey, std::vector<std::size_t>, detail::AxisKeyHash> candidates;

    for (const Gate& g : c.gates) {
        if (g.is_clifford()) {
            detail::prepend_clifford(frame, g);
            continue;
        }
        const std::size_t t = axes.size();
        axes.push_back(frame.stabilizer_generator(g.q0));
        r.push_back(g.rotation_angle());
        const PauliProduct& p = axes[t];

        std::vector<std::size_t>& list = candidates[detail::AxisKey(p)];
        list.push_back(t);
        if (list.size() >= 2) {
            const std::size_t j = list[list.size() - 2];
            bool merge = true;
            auto it = std::lower_bound(pivots.begin(), pivots.end(), j);
            for (; it != pivots.end() && *it < t; ++it) {
                const std::size_t k = *it;
                ++out.checks;
                if (!anticommutes(p, axes[k])) continue;
                if (r[k].is_half_pi_multiple()) {
                    for (std::size_t ell = k + 1; ell < t; ++ell) {
                        if (r[ell].is_half_pi_multiple()) continue;
                        ++out.checks;
                        if (anticommutes(p, axes[ell])) {
                            merge = false;
                            break;
                        }
                    }
                } else {
                    merge = false;
                }
                break;
            }
            if (merge) {
                const int sign = sign_ratio(p, axes[j]);
                r[t] = add(r[t], sign == 1 ? r[j] : negate(r[j]));
                r[j] = Angle::zero();
                list.erase(list.end() - 2);
                out.merges.push_back({j, t, sign});
                if (r[t].is_half_pi_multiple()) {
                    frame.prepend_z_rotation(r[t].quarter_turns(), g.q0);
                    list.pop_back();
                }
            }
        }
    }
    detail::finish_outcome(out, c, r, timer);
    return out;
}

inline MergeOutcome run_pass(const Circuit& c, const std::string& pass) {
    if (pass == "tmerge") return tmerge(c);
    if (pass == "bbmerge") return bbmerge(c);
    if (pass == "fasttmerge") return fast_tmerge(c);
    throw UsageError("unknown pass '" + pass + "'");
}

/// Brute-force merge oracle over a rotation sequence with black-box angles:
/// repeatedly applies the leftmost pair with equal axes (up to sign) and no
/// anticommuting rotation strictly between, never turning a merged rotation
/// into Clifford content. Returns the applied pairs.
inline std::vector<MergeRecord> naive_problem1(const RotationSequence& seq) {
    const std::size_t m = seq.size();
    std::vector<bool> alive(m, true);
    std::vector<MergeRecord> records;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < m && !changed; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < m; ++j) {
                if (!alive[j]) continue;
                if (equal_up_to_sign(seq.axes[i], seq.axes[j])) {
                    bool blocked = false;
                    for (std::size_t k = i + 1; k < j && !blocked; ++k)
                        if (alive[k] && anticommutes(seq.axes[k], seq.axes[i])) blocked = true;
                    if (!blocked) {
                        alive[j] = false;
                        records.push_back({i, j, sign_ratio(seq.axes[j], seq.axes[i])});
                        changed = true;
                        break;
                    }
                } else if (anticommutes(seq.axes[i], seq.axes[j])) {
                    break;  // everything past j is unreachable for i
                }
            }
        }
    }
    return records;
}

}  // namespace qcmerge
