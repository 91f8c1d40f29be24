#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qcmerge/dense.hpp"
#include "qcmerge/tableau.hpp"

using namespace qcmerge;

namespace {

struct GateRec {
    CliffordGateKind kind;
    std::size_t q0, q1;
};

GateRec random_gate(std::mt19937_64& rng, std::size_t n) {
    static const CliffordGateKind single[] = {CliffordGateKind::H, CliffordGateKind::S,
                                              CliffordGateKind::Sdg, CliffordGateKind::X,
                                              CliffordGateKind::Z};
    if (n >= 2 && rng() % 3 == 0) {
        std::size_t a = rng() % n, b = rng() % n;
        while (b == a) b = rng() % n;
        return {(rng() & 1) ? CliffordGateKind::CNOT : CliffordGateKind::CZ, a, b};
    }
    return {single[rng() % 5], rng() % n, CliffordTableau::kNoQubit};
}

CMat gate_dense(const GateRec& g, std::size_t n) {
    constexpr double s = 0.7071067811865475244;
    static const Complex kI{0.0, 1.0};
    const std::size_t dim = std::size_t{1} << n;
    CMat u = cmat_identity(dim);
    auto apply_cols = [&](auto&& fn) {
        for (std::size_t col = 0; col < dim; ++col) {
            CVec v(dim);
            for (std::size_t r = 0; r < dim; ++r) v[r] = u[r * dim + col];
            fn(v);
            for (std::size_t r = 0; r < dim; ++r) u[r * dim + col] = v[r];
        }
    };
    switch (g.kind) {
        case CliffordGateKind::H: {
            const Complex m[4] = {s, s, s, -s};
            apply_cols([&](CVec& v) { apply_single_qubit(m, v, n, g.q0); });
            break;
        }
        case CliffordGateKind::S: {
            const Complex m[4] = {1, 0, 0, kI};
            apply_cols([&](CVec& v) { apply_single_qubit(m, v, n, g.q0); });
            break;
        }
        case CliffordGateKind::Sdg: {
            const Complex m[4] = {1, 0, 0, -kI};
            apply_cols([&](CVec& v) { apply_single_qubit(m, v, n, g.q0); });
            break;
        }
        case CliffordGateKind::X: {
            const Complex m[4] = {0, 1, 1, 0};
            apply_cols([&](CVec& v) { apply_single_qubit(m, v, n, g.q0); });
            break;
        }
        case CliffordGateKind::Z: {
            const Complex m[4] = {1, 0, 0, -1};
            apply_cols([&](CVec& v) { apply_single_qubit(m, v, n, g.q0); });
            break;
        }
        case CliffordGateKind::CNOT:
            apply_cols([&](CVec& v) { apply_cnot(v, n, g.q0, g.q1); });
            break;
        case CliffordGateKind::CZ:
            apply_cols([&](CVec& v) { apply_cz(v, n, g.q0, g.q1); });
            break;
    }
    return u;
}

}  // namespace

TEST_CASE("identity tableau") {
    const CliffordTableau t = CliffordTableau::identity(3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t.stabilizer_generator(i) == PauliProduct::single(3, i, 'Z'));
        CHECK(t.destabilizer_generator(i) == PauliProduct::single(3, i, 'X'));
    }
    t.check_invariants();
    CHECK_THROWS_AS(t.stabilizer_generator(3), UsageError);
}

TEST_CASE("single prepends") {
    CliffordTableau t(1);
    t.prepend_gate(CliffordGateKind::H, 0);
    CHECK(t.stabilizer_generator(0) == PauliProduct::parse("+X"));

    CliffordTableau c(2);
    c.prepend_gate(CliffordGateKind::CNOT, 0, 1);
    CHECK(c.stabilizer_generator(1) == PauliProduct::parse("+ZZ"));
    CHECK(c.stabilizer_generator(0) == PauliProduct::parse("+ZI"));
    CHECK_THROWS_AS(c.prepend_gate(CliffordGateKind::CNOT, 1, 1), UsageError);
    CHECK_THROWS_AS(c.prepend_gate(CliffordGateKind::H, 5), UsageError);
}

TEST_CASE("circuit H then S leaves a +X stabilizer") {
    // Feeding circuit gates in program order: the axis equals (SH)^dag Z (SH) = +X.
    CliffordTableau t(1);
    t.prepend_gate(CliffordGateKind::H, 0);
    t.prepend_gate(CliffordGateKind::S, 0);
    CHECK(t.stabilizer_generator(0) == PauliProduct::parse("+X"));

    // Dense cross-check: U_enc = H^dag S^dag, stabilizer = U_enc Z U_enc^dag.
    const CMat h = gate_dense({CliffordGateKind::H, 0, 0}, 1);
    const CMat sdg = gate_dense({CliffordGateKind::Sdg, 0, 0}, 1);
    const CMat uenc = cmat_mul(h, sdg, 2);
    const CMat lhs = cmat_mul(cmat_mul(uenc, to_dense(PauliProduct::parse("Z")), 2),
                              cmat_adjoint(uenc, 2), 2);
    const CMat rhs = to_dense(t.stabilizer_generator(0));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12);
}

TEST_CASE("rotation axes of the single-qubit showcase circuit") {
    // T H S T T H T: pure extraction frame, axes must read Z, X, X, Y.
    CliffordTableau t(1);
    CHECK(t.stabilizer_generator(0) == PauliProduct::parse("+Z"));
    t.prepend_gate(CliffordGateKind::H, 0);
    t.prepend_gate(CliffordGateKind::S, 0);
    CHECK(t.stabilizer_generator(0) == PauliProduct::parse("+X"));
    CHECK(t.stabilizer_generator(0) == PauliProduct::parse("+X"));
    t.prepend_gate(CliffordGateKind::H, 0);
    CHECK(t.stabilizer_generator(0) == PauliProduct::parse("+Y"));
}

TEST_CASE("prepend_z_rotation quarter turns") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        CliffordTableau t(2);
        for (int k = 0; k < 10; ++k) {
            const GateRec g = random_gate(rng, 2);
            t.prepend_gate(g.kind, g.q0, g.q1);
        }
        CliffordTableau t0 = t, t1 = t, t2 = t, t3 = t;
        t0.prepend_z_rotation(0, 0);
        CHECK(t0 == t);
        t1.prepend_z_rotation(1, 0);
        CliffordTableau s = t;
        s.prepend_gate(CliffordGateKind::S, 0);
        CHECK(t1 == s);
        t2.prepend_z_rotation(2, 0);
        CliffordTableau z = t;
        z.prepend_gate(CliffordGateKind::Z, 0);
        CHECK(t2 == z);
        t3.prepend_z_rotation(3, 0);
        CliffordTableau sdg = t;
        sdg.prepend_gate(CliffordGateKind::Sdg, 0);
        CHECK(t3 == sdg);
    }
}

TEST_CASE("stabilizers match the dense conjugation oracle, sign included") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t dim = std::size_t{1} << n;
        const std::size_t len = rng() % 51;
        CliffordTableau t(n);
        CMat uenc = cmat_identity(dim);
        for (std::size_t k = 0; k < len; ++k) {
            const GateRec g = random_gate(rng, n);
            t.prepend_gate(g.kind, g.q0, g.q1);
            // prepend(g): U <- U g^dag
            uenc = cmat_mul(uenc, cmat_adjoint(gate_dense(g, n), dim), dim);
        }
        t.check_invariants();
        const CMat udag = cmat_adjoint(uenc, dim);
        for (std::size_t i = 0; i < n; ++i) {
            const CMat expect =
                cmat_mul(cmat_mul(uenc, to_dense(PauliProduct::single(n, i, 'Z')), dim), udag, dim);
            const CMat got = to_dense(t.stabilizer_generator(i));
            for (std::size_t e = 0; e < expect.size(); ++e)
                CHECK(std::abs(expect[e] - got[e]) < 1e-9);
        }
    }
}

TEST_CASE("prepending a gate then its inverse restores the tableau") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 1 + rng() % 3;
        CliffordTableau t(n);
        for (int k = 0; k < 15; ++k) {
            const GateRec g = random_gate(rng, n);
            t.prepend_gate(g.kind, g.q0, g.q1);
        }
        CliffordTableau before = t;
        const GateRec g = random_gate(rng, n);
        t.prepend_gate(g.kind, g.q0, g.q1);
        switch (g.kind) {
            case CliffordGateKind::S: t.prepend_gate(CliffordGateKind::Sdg, g.q0); break;
            case CliffordGateKind::Sdg: t.prepend_gate(CliffordGateKind::S, g.q0); break;
            default: t.prepend_gate(g.kind, g.q0, g.q1); break;  // self-inverse
        }
        CHECK(t == before);
    }
}

TEST_CASE("to_unitary") {
    CliffordTableau id(1);
    const CMat i2 = id.to_unitary();
    CHECK(max_abs_diff_up_to_phase(i2, cmat_identity(2)) < 1e-12);

    CliffordTableau h(1);
    h.prepend_gate(CliffordGateKind::H, 0);
    CHECK(max_abs_diff_up_to_phase(h.to_unitary(), gate_dense({CliffordGateKind::H, 0, 0}, 1)) < 1e-12);

    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t dim = std::size_t{1} << n;
        CliffordTableau t(n);
        CMat uenc = cmat_identity(dim);
        for (int k = 0; k < 20; ++k) {
            const GateRec g = random_gate(rng, n);
            t.prepend_gate(g.kind, g.q0, g.q1);
            uenc = cmat_mul(uenc, cmat_adjoint(gate_dense(g, n), dim), dim);
        }
        CHECK(max_abs_diff_up_to_phase(t.to_unitary(), uenc) < 1e-9);
    }

    CliffordTableau big(11);
    CHECK_THROWS_AS(big.to_unitary(), ResourceError);
}
