#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qcmerge/circuit.hpp"
#include "qcmerge/circuit_io.hpp"

using namespace qcmerge;

namespace {

// The single-qubit showcase circuit: T H S T T H T.
Circuit fig_circuit() {
    Circuit c;
    c.n_qubits = 1;
    c.gates = {Gate::t(0), Gate::h(0), Gate::s(0), Gate::t(0), Gate::t(0), Gate::h(0), Gate::t(0)};
    return c;
}

}  // namespace

TEST_CASE("parse_qc basics") {
    const Circuit c = parse_qc(".v a b c\nBEGIN\nH a\ntof a b\nT c\nS* b\nZ a b\nEND\n");
    CHECK(c.n_qubits == 3);
    REQUIRE(c.gates.size() == 5);
    CHECK(c.gates[0] == Gate::h(0));
    CHECK(c.gates[1] == Gate::cnot(0, 1));
    CHECK(c.gates[2] == Gate::t(2));
    CHECK(c.gates[3] == Gate::sdg(1));
    CHECK(c.gates[4] == Gate::cz(0, 1));
}

TEST_CASE("parse_qc corner cases") {
    const Circuit empty = parse_qc(".v q\nBEGIN\nEND\n");
    CHECK(empty.gates.empty());
    CHECK(empty.n_qubits == 1);

    CHECK_NOTHROW(parse_qc(".v a b\n.i a\n.o b\nBEGIN\r\ncnot a b\r\nEND\r\n"));
    CHECK_THROWS_AS(parse_qc(".v a b c\nBEGIN\ntof a b c\nEND\n"), UnsupportedGateError);
    CHECK_THROWS_AS(parse_qc(".v a\nBEGIN\nH q\nEND\n"), ParseError);
    CHECK_THROWS_AS(parse_qc(".v a\nBEGIN\nQQ a\nEND\n"), UnsupportedGateError);
    CHECK_THROWS_AS(parse_qc(".v a\nBEGIN\nH a\n"), ParseError);
    CHECK_THROWS_AS(parse_qc(".weird a\nBEGIN\nEND\n"), ParseError);
    CHECK_THROWS_AS(parse_qc(".v a b\nBEGIN\nZ a b c\nEND\n"), UnsupportedGateError);

    // Error messages carry the offending line.
    try {
        parse_qc(".v a b c\nBEGIN\ntof a b c\nEND\n");
        FAIL("expected a throw");
    } catch (const UnsupportedGateError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("parse_qasm basics") {
    const char* src = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
h q[0];
rz(pi/4) q[0];
cx q[0],q[1];
rz(a0) q[1];
sdg q[1];
)";
    const Circuit c = parse_qasm(src);
    CHECK(c.n_qubits == 2);
    REQUIRE(c.gates.size() == 5);
    CHECK(c.gates[1] == Gate::t(0));  // rz(pi/4) is a T up to phase
    CHECK(c.gates[2] == Gate::cnot(0, 1));
    CHECK(c.gates[3].kind == GateKind::RZ);
    CHECK(c.gates[3].angle == Angle::parameter("a0"));
    CHECK(c.gates[4] == Gate::sdg(1));
}

TEST_CASE("parse_qasm rejections") {
    CHECK_THROWS_AS(parse_qasm("qreg q[1];\nmeasure q[0] -> c[0];\n"), UnsupportedGateError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1];\ncreg c[1];\n"), UnsupportedGateError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1];\nqreg r[1];\n"), UnsupportedGateError);
    CHECK_THROWS_AS(parse_qasm("qreg q[2];\nccx q[0],q[1],q[0];\n"), UnsupportedGateError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1];\nh r[0];\n"), ParseError);
    // Non-dyadic numeric angles become opaque fresh parameters.
    const Circuit c = parse_qasm("qreg q[1];\nrz(1.0471975511965976) q[0];\nrz(0.5) q[0];\n");
    CHECK(c.gates[0].angle.params().size() == 1);
    CHECK(c.gates[1].angle.params().size() == 1);
    CHECK_FALSE(c.gates[0].angle == c.gates[1].angle);
}

TEST_CASE("stats") {
    const CircuitStats s = stats(fig_circuit());
    CHECK(s.t_count == 4);
    CHECK(s.internal_h_count == 2);
    CHECK(s.h_count == 2);
    CHECK(s.non_clifford_rz_count == 4);
    CHECK(s.gate_count == 7);

    const CircuitStats empty = stats(parse_qc(".v q\nBEGIN\nEND\n"));
    CHECK(empty.t_count == 0);
    CHECK(empty.h_count == 0);
    CHECK(empty.internal_h_count == 0);
    CHECK(empty.non_clifford_rz_count == 0);

    // Odd multiples of pi/4 count as T gates; pi/2 multiples never do.
    Circuit c;
    c.n_qubits = 1;
    c.gates = {Gate::rz(Angle::rational(3, 4), 0), Gate::rz(Angle::rational(1, 2), 0),
               Gate::rz(Angle::parameter("a"), 0)};
    const CircuitStats s2 = stats(c);
    CHECK(s2.t_count == 1);
    CHECK(s2.non_clifford_rz_count == 2);
}

TEST_CASE("write_qc") {
    Circuit c;
    c.n_qubits = 2;
    c.gates = {Gate::rz(Angle::rational(1, 2), 0), Gate::cnot(0, 1), Gate::rz(Angle::rational(1, 4), 1)};
    const std::string text = write_qc(c);
    CHECK(text.find("S q0") != std::string::npos);
    CHECK(text.find("tof q0 q1") != std::string::npos);
    CHECK(text.find("T q1") != std::string::npos);

    Circuit bad;
    bad.n_qubits = 1;
    bad.gates = {Gate::rz(Angle::parameter("a0"), 0)};
    CHECK_THROWS_AS(write_qc(bad), UsageError);

    Circuit eighth;
    eighth.n_qubits = 1;
    eighth.gates = {Gate::rz(Angle::rational(1, 8), 0)};
    CHECK_THROWS_AS(write_qc(eighth), UsageError);

    // 3pi/4 is spelled as two lines.
    Circuit composite;
    composite.n_qubits = 1;
    composite.gates = {Gate::rz(Angle::rational(3, 4), 0)};
    const Circuit back = parse_qc(write_qc(composite));
    REQUIRE(back.gates.size() == 2);
    CHECK(back.gates[0] == Gate::s(0));
    CHECK(back.gates[1] == Gate::t(0));
}

TEST_CASE("write_qasm keeps arbitrary angles") {
    Circuit c;
    c.n_qubits = 1;
    c.gates = {Gate::rz(add(Angle::parameter("a3"), Angle::rational(1, 4)), 0)};
    const std::string text = write_qasm(c);
    CHECK(text.find("rz(a3+pi/4) q[0];") != std::string::npos);
    const Circuit back = parse_qasm(text);
    CHECK(back.gates == c.gates);
}

TEST_CASE("parsers reject garbage without crashing") {
    std::mt19937_64 rng(42);
    const std::string alphabet = ".vBEGINENDtofcnotHXZSTqreg*[];() \n0123456789abcpi/+-";
    for (int rep = 0; rep < 2000; ++rep) {
        std::string text;
        const std::size_t len = rng() % 120;
        for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        try {
            parse_qc(text);
        } catch (const Error&) {
        }
        try {
            parse_qasm(text);
        } catch (const Error&) {
        }
    }
}

TEST_CASE("parse/write round trips on random circuits") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        Circuit c = testing::random_clifford_t_circuit(rng, 1 + rng() % 5, rng() % 40);
        c.ensure_names();
        const Circuit qc = parse_qc(write_qc(c));
        CHECK(qc.gates == c.gates);
        CHECK(stats(qc).t_count == stats(c).t_count);
        const Circuit qasm = parse_qasm(write_qasm(c));
        CHECK(qasm.gates == c.gates);
        CHECK(write_qasm(parse_qasm(write_qasm(c))) == write_qasm(c));
    }
}
