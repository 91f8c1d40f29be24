// Emits the reconstructible benchmark circuits as .qc files: the single-qubit
// showcase circuit, multiply-controlled-NOT ladders (tof_n), the Barenco-style
// ladders (barenco_tof_n), GF(2^k) multipliers, and a 3-bit ripple-carry
// adder. Toffolis are expanded into the standard 7-rotation Clifford+T form,
// matching the pre-decomposed corpora used by T-count optimizers.

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qcmerge/circuit.hpp"
#include "qcmerge/circuit_io.hpp"
#include "qcmerge/merge.hpp"

using namespace qcmerge;

namespace {

void ccx(Circuit& c, std::uint32_t a, std::uint32_t b, std::uint32_t t) {
    c.gates.push_back(Gate::h(t));
    c.gates.push_back(Gate::cnot(b, t));
    c.gates.push_back(Gate::tdg(t));
    c.gates.push_back(Gate::cnot(a, t));
    c.gates.push_back(Gate::t(t));
    c.gates.push_back(Gate::cnot(b, t));
    c.gates.push_back(Gate::tdg(t));
    c.gates.push_back(Gate::cnot(a, t));
    c.gates.push_back(Gate::t(b));
    c.gates.push_back(Gate::t(t));
    c.gates.push_back(Gate::h(t));
    c.gates.push_back(Gate::cnot(a, b));
    c.gates.push_back(Gate::tdg(b));
    c.gates.push_back(Gate::cnot(a, b));
    c.gates.push_back(Gate::t(a));
}

Circuit fig1() {
    Circuit c;
    c.n_qubits = 1;
    c.qubit_names = {"q"};
    c.gates = {Gate::t(0), Gate::h(0), Gate::s(0), Gate::t(0), Gate::t(0), Gate::h(0), Gate::t(0)};
    return c;
}

/// n-controlled NOT via the ancilla ladder: compute the AND chain up, flip the
/// target, uncompute. Qubits: controls x1..xn, ancillas, target last.
Circuit tof_ladder(int n) {
    Circuit c;
    c.n_qubits = static_cast<std::uint32_t>(2 * n - 1);
    for (int i = 1; i <= n; ++i) c.qubit_names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n - 2; ++i) c.qubit_names.push_back("anc" + std::to_string(i));
    c.qubit_names.push_back("tgt");
    const auto ctrl = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    const auto anc = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    const std::uint32_t tgt = c.n_qubits - 1;

    std::vector<std::array<std::uint32_t, 3>> up;
    up.push_back({ctrl(1), ctrl(2), anc(1)});
    for (int i = 2; i <= n - 2; ++i) up.push_back({ctrl(i + 1), anc(i - 1), anc(i)});
    for (const auto& g : up) ccx(c, g[0], g[1], g[2]);
    ccx(c, ctrl(n), anc(n - 2), tgt);
    for (auto it = up.rbegin(); it != up.rend(); ++it) ccx(c, (*it)[0], (*it)[1], (*it)[2]);
    return c;
}

/// Barenco-style ladder with dirty ancillas: the V-shaped half is run twice.
Circuit barenco_tof(int n) {
    Circuit c;
    c.n_qubits = static_cast<std::uint32_t>(2 * n - 1);
    for (int i = 1; i <= n; ++i) c.qubit_names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n - 2; ++i) c.qubit_names.push_back("anc" + std::to_string(i));
    c.qubit_names.push_back("tgt");
    const auto ctrl = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    const auto anc = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    const std::uint32_t tgt = c.n_qubits - 1;

    // G_n = CCX(x_n, anc_{n-2}, tgt), G_i = CCX(x_i, anc_{i-2}, anc_{i-1}),
    // G_2 = CCX(x_1, x_2, anc_1); one half is G_n .. G_2 G_3 .. G_{n-1}.
    auto emit_g = [&](int i) {
        if (i == n) ccx(c, ctrl(n), anc(n - 2), tgt);
        else if (i == 2) ccx(c, ctrl(1), ctrl(2), anc(1));
        else ccx(c, ctrl(i), anc(i - 2), anc(i - 1));
    };
    for (int half = 0; half < 2; ++half) {
        for (int i = n; i >= 2; --i) emit_g(i);
        for (int i = 3; i <= n - 1; ++i) emit_g(i);
    }
    return c;
}

/// GF(2^k) multiplication c += a*b over the named irreducible polynomial,
/// shift-and-add style. `taps` are the exponents of the middle polynomial
/// terms (e.g. {1} for x^k + x + 1).
///
/// variant 0 shifts the multiplicand register b (one CNOT per tap per step,
/// the cyclic relabeling absorbed into the Toffoli indexing); variant 1
/// shifts the accumulator c the same way.
Circuit gf2_mult(int k, const std::vector<int>& taps, int variant) {
    Circuit c;
    c.n_qubits = static_cast<std::uint32_t>(3 * k);
    for (int i = 0; i < k; ++i) c.qubit_names.push_back("a" + std::to_string(i));
    for (int i = 0; i < k; ++i) c.qubit_names.push_back("b" + std::to_string(i));
    for (int i = 0; i < k; ++i) c.qubit_names.push_back("c" + std::to_string(i));
    const auto A = [&](int i) { return static_cast<std::uint32_t>(i); };
    const auto B = [&](int i) { return static_cast<std::uint32_t>(k + i); };
    const auto C = [&](int i) { return static_cast<std::uint32_t>(2 * k + i); };
    const auto mod = [&](int x) { return ((x % k) + k) % k; };

    if (variant == 0) {
        // c += a_i * (x^i b mod p); b is shifted by relabeling, with the
        // wrapped top coefficient folded into the taps by CNOTs.
        int off = 0;  // logical index j lives on physical wire (j + off) mod k
        for (int i = 0; i < k; ++i) {
            if (i > 0) {
                const int top = mod(k - 1 + off);  // wire holding old b_{k-1}
                off = mod(off - 1);
                for (int tap : taps) c.gates.push_back(Gate::cnot(B(top), B(mod(tap + off))));
            }
            for (int j = 0; j < k; ++j) ccx(c, A(i), B(mod(j + off)), C(j));
        }
    } else {
        // MSB first: c <- x*c mod p between steps, shifting the accumulator.
        int off = 0;
        for (int i = k - 1; i >= 0; --i) {
            if (i != k - 1) {
                const int top = mod(k - 1 + off);
                off = mod(off - 1);
                for (int tap : taps) c.gates.push_back(Gate::cnot(C(top), C(mod(tap + off))));
            }
            for (int j = 0; j < k; ++j) ccx(c, A(i), B(j), C(mod(j + off)));
        }
    }
    return c;
}

/// 3-bit ripple-carry adder |a,b> -> |a, a+b>, plain carry/sum blocks.
Circuit vbe_adder_3() {
    Circuit c;
    c.n_qubits = 10;
    c.qubit_names = {"a0", "a1", "a2", "b0", "b1", "b2", "b3", "c0", "c1", "c2"};
    const std::uint32_t a0 = 0, a1 = 1, a2 = 2, b0 = 3, b1 = 4, b2 = 5, b3 = 6, c0 = 7, c1 = 8,
                        c2 = 9;
    auto carry = [&](std::uint32_t ci, std::uint32_t ai, std::uint32_t bi, std::uint32_t co) {
        ccx(c, ai, bi, co);
        c.gates.push_back(Gate::cnot(ai, bi));
        ccx(c, ci, bi, co);
    };
    auto rcarry = [&](std::uint32_t ci, std::uint32_t ai, std::uint32_t bi, std::uint32_t co) {
        ccx(c, ci, bi, co);
        c.gates.push_back(Gate::cnot(ai, bi));
        ccx(c, ai, bi, co);
    };
    auto sum = [&](std::uint32_t ci, std::uint32_t ai, std::uint32_t bi) {
        c.gates.push_back(Gate::cnot(ai, bi));
        c.gates.push_back(Gate::cnot(ci, bi));
    };
    carry(c0, a0, b0, c1);
    carry(c1, a1, b1, c2);
    carry(c2, a2, b2, b3);
    c.gates.push_back(Gate::cnot(a2, b2));
    sum(c2, a2, b2);
    rcarry(c1, a1, b1, c2);
    sum(c1, a1, b1);
    rcarry(c0, a0, b0, c1);
    sum(c0, a0, b0);
    return c;
}

void emit(const std::filesystem::path& dir, const std::string& name, const Circuit& c,
          bool check) {
    std::ofstream out(dir / (name + ".qc"));
    out << write_qc(c);
    if (check) {
        const MergeOutcome tm = tmerge(c);
        const MergeOutcome bb = bbmerge(c);
        const MergeOutcome ft = fast_tmerge(c);
        std::cout << name << ": n=" << c.n_qubits << " t_in=" << stats(c).t_count
                  << " tmerge=" << tm.t_count_after << " bbmerge=" << bb.t_count_after
                  << " fasttmerge=" << ft.t_count_after << " h=" << rank_vector(extract(c)).weight()
                  << " checks(bb)=" << bb.checks << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = "corpus";
    bool check = false;
    int gf_variant = 1;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--check") check = true;
        else if (arg == "--out" && i + 1 < argc) dir = argv[++i];
        else if (arg == "--gf-variant" && i + 1 < argc) gf_variant = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: gen_corpus [--out DIR] [--check] [--gf-variant N]\n";
            return 2;
        }
    }
    std::filesystem::create_directories(dir);

    emit(dir, "fig1", fig1(), check);
    for (int n : {3, 4, 5, 10}) emit(dir, "tof_" + std::to_string(n), tof_ladder(n), check);
    for (int n : {3, 4, 5, 10})
        emit(dir, "barenco_tof_" + std::to_string(n), barenco_tof(n), check);
    emit(dir, "gf2^4_mult", gf2_mult(4, {1}, gf_variant), check);
    emit(dir, "gf2^5_mult", gf2_mult(5, {2}, gf_variant), check);
    emit(dir, "gf2^6_mult", gf2_mult(6, {1}, gf_variant), check);
    emit(dir, "gf2^7_mult", gf2_mult(7, {1}, gf_variant), check);
    emit(dir, "gf2^8_mult", gf2_mult(8, {4, 3, 1}, gf_variant), check);
    emit(dir, "vbe_adder_3", vbe_adder_3(), check);
    return 0;
}
