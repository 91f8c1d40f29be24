#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qcmerge/circuit.hpp"
#include "qcmerge/errors.hpp"

// Readers and writers for the .qc dialect and an OpenQASM 2 subset.

namespace qcmerge {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string_view line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.emplace_back(line);
            start = i + 1;
        }
    }
    return lines;
}

inline long parse_index(const std::string& digits, const std::string& context) {
    try {
        return std::stol(digits);
    } catch (const std::exception&) {
        throw ParseError(context + ": bad index '" + digits + "'");
    }
}

}  // namespace detail

inline Circuit parse_qc(std::string_view text) {
    Circuit c;
    std::map<std::string, std::uint32_t> wire_index;
    bool seen_v = false, in_body = false, ended = false;

    auto wire = [&](const std::string& name, std::size_t lineno) -> std::uint32_t {
        auto it = wire_index.find(name);
        if (it == wire_index.end())
            throw ParseError("qc line " + std::to_string(lineno) + ": undeclared wire '" + name + "'");
        return it->second;
    };

    const std::vector<std::string> lines = detail::split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t lineno = li + 1;
        std::string_view raw = lines[li];
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::vector<std::string> tok = detail::split_ws(raw);
        if (tok.empty()) continue;
        if (ended) throw ParseError("qc line " + std::to_string(lineno) + ": content after END");

        if (tok[0][0] == '.') {
            if (in_body) throw ParseError("qc line " + std::to_string(lineno) + ": header after BEGIN");
            if (tok[0] == ".v") {
                seen_v = true;
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    if (wire_index.count(tok[i]))
                        throw ParseError("qc line " + std::to_string(lineno) + ": duplicate wire '" + tok[i] + "'");
                    wire_index.emplace(tok[i], static_cast<std::uint32_t>(c.qubit_names.size()));
                    c.qubit_names.push_back(tok[i]);
                }
            } else if (tok[0] == ".i" || tok[0] == ".o") {
                // input/output markers carry no gate information
            } else {
                throw ParseError("qc line " + std::to_string(lineno) + ": unknown directive '" + tok[0] + "'");
            }
            continue;
        }
        if (tok[0] == "BEGIN") {
            if (!seen_v) throw ParseError("qc: BEGIN before .v header");
            in_body = true;
            continue;
        }
        if (tok[0] == "END") {
            if (!in_body) throw ParseError("qc line " + std::to_string(lineno) + ": END outside body");
            ended = true;
            continue;
        }
        if (!in_body) throw ParseError("qc line " + std::to_string(lineno) + ": gate outside BEGIN/END");

        const std::string& op = tok[0];
        const std::size_t argc = tok.size() - 1;
        auto one = [&]() {
            if (argc != 1)
                throw UnsupportedGateError("qc line " + std::to_string(lineno) + ": '" + op +
                                           "' expects one wire");
            return wire(tok[1], lineno);
        };
        auto two = [&]() {
            const std::uint32_t a = wire(tok[1], lineno), b = wire(tok[2], lineno);
            if (a == b) throw ParseError("qc line " + std::to_string(lineno) + ": repeated wire");
            return std::pair<std::uint32_t, std::uint32_t>{a, b};
        };

        if (op == "H") {
            c.gates.push_back(Gate::h(one()));
        } else if (op == "X") {
            c.gates.push_back(Gate::x(one()));
        } else if (op == "S") {
            c.gates.push_back(Gate::s(one()));
        } else if (op == "S*") {
            c.gates.push_back(Gate::sdg(one()));
        } else if (op == "T") {
            c.gates.push_back(Gate::t(one()));
        } else if (op == "T*") {
            c.gates.push_back(Gate::tdg(one()));
        } else if (op == "Z") {
            if (argc == 1) {
                c.gates.push_back(Gate::z(wire(tok[1], lineno)));
            } else if (argc == 2) {
                auto [a, b] = two();
                c.gates.push_back(Gate::cz(a, b));
            } else {
                throw UnsupportedGateError("qc line " + std::to_string(lineno) +
                                           ": multiply-controlled Z is not supported");
            }
        } else if (op == "cnot") {
            if (argc != 2)
                throw UnsupportedGateError("qc line " + std::to_string(lineno) + ": 'cnot' expects two wires");
            auto [a, b] = two();
            c.gates.push_back(Gate::cnot(a, b));
        } else if (op == "tof") {
            if (argc == 2) {
                auto [a, b] = two();
                c.gates.push_back(Gate::cnot(a, b));
            } else {
                throw UnsupportedGateError("qc line " + std::to_string(lineno) +
                                           ": 'tof' with " + std::to_string(argc) +
                                           " wires is not in the supported gate set");
            }
        } else {
            throw UnsupportedGateError("qc line " + std::to_string(lineno) + ": unknown gate '" + op + "'");
        }
    }
    if (!seen_v) throw ParseError("qc: missing .v header");
    if (in_body && !ended) throw ParseError("qc: missing END");
    c.n_qubits = static_cast<std::uint32_t>(c.qubit_names.size());
    if (c.n_qubits == 0) throw ParseError("qc: no wires declared");
    c.validate();
    return c;
}

inline Circuit parse_qasm(std::string_view text) {
    // Statement-level scan: strip // comments, split on ';'.
    std::string cleaned;
    cleaned.reserve(text.size());
    for (const std::string& line : detail::split_lines(text)) {
        const std::size_t slash = line.find("//");
        cleaned += (slash == std::string::npos) ? line : line.substr(0, slash);
        cleaned += '\n';
    }

    Circuit c;
    std::string reg_name;
    int fresh_counter = 0;
    auto fresh_symbol = [&]() { return "_f" + std::to_string(fresh_counter++); };

    auto parse_arg = [&](std::string arg, std::size_t stmtno) -> std::uint32_t {
        const std::size_t lb = arg.find('['), rb = arg.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw ParseError("qasm statement " + std::to_string(stmtno) + ": expected reg[idx], got '" + arg + "'");
        const std::string name = arg.substr(0, lb);
        if (name != reg_name)
            throw ParseError("qasm statement " + std::to_string(stmtno) + ": unknown register '" + name + "'");
        const long idx = detail::parse_index(arg.substr(lb + 1, rb - lb - 1), "qasm");
        if (idx < 0 || idx >= static_cast<long>(c.n_qubits))
            throw ParseError("qasm statement " + std::to_string(stmtno) + ": qubit index out of range");
        return static_cast<std::uint32_t>(idx);
    };

    std::size_t stmtno = 0;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        const std::size_t semi = cleaned.find(';', pos);
        std::string stmt = cleaned.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        pos = semi == std::string::npos ? cleaned.size() : semi + 1;
        // collapse whitespace
        std::string flat;
        for (char ch : stmt)
            flat += (ch == '\n' || ch == '\t') ? ' ' : ch;
        std::size_t b = flat.find_first_not_of(' ');
        if (b == std::string::npos) continue;
        flat = flat.substr(b, flat.find_last_not_of(' ') - b + 1);
        ++stmtno;

        if (flat.rfind("OPENQASM", 0) == 0 || flat.rfind("include", 0) == 0) continue;
        if (flat.rfind("qreg", 0) == 0) {
            if (!reg_name.empty()) throw UnsupportedGateError("qasm: multiple quantum registers");
            const std::size_t lb = flat.find('['), rb = flat.find(']');
            if (lb == std::string::npos || rb == std::string::npos)
                throw ParseError("qasm: malformed qreg declaration");
            std::string name = flat.substr(4, lb - 4);
            name.erase(0, name.find_first_not_of(' '));
            name.erase(name.find_last_not_of(' ') + 1);
            reg_name = name;
            const long count = detail::parse_index(flat.substr(lb + 1, rb - lb - 1), "qasm qreg");
            if (count <= 0 || count > (1 << 24)) throw ParseError("qasm: bad register size");
            c.n_qubits = static_cast<std::uint32_t>(count);
            for (std::uint32_t i = 0; i < c.n_qubits; ++i)
                c.qubit_names.push_back(reg_name + "[" + std::to_string(i) + "]");
            continue;
        }
        for (const char* bad : {"creg", "measure", "barrier", "reset", "if", "opaque", "gate"})
            if (flat.rfind(bad, 0) == 0)
                throw UnsupportedGateError("qasm: unsupported construct '" + std::string(bad) + "'");
        if (reg_name.empty()) throw ParseError("qasm: gate before qreg declaration");

        // <name>[(expr)] arg[,arg]
        std::size_t name_end = flat.find_first_of(" (");
        if (name_end == std::string::npos) throw ParseError("qasm: malformed statement '" + flat + "'");
        const std::string name = flat.substr(0, name_end);
        std::string expr;
        std::size_t args_at = name_end;
        if (flat[name_end] == '(') {
            const std::size_t close = flat.find(')', name_end);
            if (close == std::string::npos) throw ParseError("qasm: missing ')' in '" + flat + "'");
            expr = flat.substr(name_end + 1, close - name_end - 1);
            args_at = close + 1;
        }
        std::vector<std::string> args;
        {
            std::string cur;
            for (std::size_t i = args_at; i < flat.size(); ++i) {
                if (flat[i] == ',') {
                    args.push_back(cur);
                    cur.clear();
                } else if (flat[i] != ' ') {
                    cur += flat[i];
                }
            }
            if (!cur.empty()) args.push_back(cur);
        }
        auto q1 = [&]() {
            if (args.size() != 1) throw ParseError("qasm: '" + name + "' expects one qubit");
            return parse_arg(args[0], stmtno);
        };
        auto q2 = [&]() {
            if (args.size() != 2) throw ParseError("qasm: '" + name + "' expects two qubits");
            auto a = parse_arg(args[0], stmtno), b = parse_arg(args[1], stmtno);
            if (a == b) throw ParseError("qasm: repeated qubit in '" + name + "'");
            return std::pair{a, b};
        };

        if (name == "h") c.gates.push_back(Gate::h(q1()));
        else if (name == "x") c.gates.push_back(Gate::x(q1()));
        else if (name == "z") c.gates.push_back(Gate::z(q1()));
        else if (name == "s") c.gates.push_back(Gate::s(q1()));
        else if (name == "sdg") c.gates.push_back(Gate::sdg(q1()));
        else if (name == "t") c.gates.push_back(Gate::t(q1()));
        else if (name == "tdg") c.gates.push_back(Gate::tdg(q1()));
        else if (name == "cx") { auto [a, b] = q2(); c.gates.push_back(Gate::cnot(a, b)); }
        else if (name == "cz") { auto [a, b] = q2(); c.gates.push_back(Gate::cz(a, b)); }
        else if (name == "rz") c.gates.push_back(Gate::rz(Angle::parse(expr, fresh_symbol), q1()));
        else throw UnsupportedGateError("qasm: unsupported gate '" + name + "'");
    }
    if (reg_name.empty()) throw ParseError("qasm: missing qreg declaration");
    c.validate();
    return c;
}

/// .qc output. Every Z rotation must be an exact multiple of pi/4; angles that
/// are not directly a named gate are spelled as two lines (e.g. 3pi/4 -> S, T).
inline std::string write_qc(const Circuit& circuit) {
    Circuit c = circuit;
    c.ensure_names();
    std::ostringstream out;
    out << ".v";
    for (const std::string& name : c.qubit_names) out << ' ' << name;
    out << "\nBEGIN\n";
    auto wire = [&](std::uint32_t q) -> const std::string& { return c.qubit_names[q]; };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: out << "H " << wire(g.q0) << '\n'; continue;
            case GateKind::X: out << "X " << wire(g.q0) << '\n'; continue;
            case GateKind::CNOT: out << "tof " << wire(g.q0) << ' ' << wire(g.q1) << '\n'; continue;
            case GateKind::CZ: out << "Z " << wire(g.q0) << ' ' << wire(g.q1) << '\n'; continue;
            default: break;
        }
        const Angle a = g.rotation_angle();
        if (!a.is_constant() || (4 % a.const_den()) != 0)
            throw UsageError("write_qc: angle '" + a.to_string() + "' is not a pi/4 multiple");
        const int eighths = static_cast<int>((a.const_num() * (4 / a.const_den())) & 7);
        static const char* kSpelling[8] = {nullptr, "T", "S", "S\nT", "Z", "Z\nT", "S*", "T*"};
        if (eighths == 0) continue;  // identity rotation
        std::istringstream names(kSpelling[eighths]);
        std::string mnemonic;
        while (std::getline(names, mnemonic)) out << mnemonic << ' ' << wire(g.q0) << '\n';
    }
    out << "END\n";
    return out.str();
}

inline std::string write_qasm(const Circuit& circuit) {
    Circuit c = circuit;
    c.ensure_names();
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_qubits << "];\n";
    auto wire = [&](std::uint32_t q) { return "q[" + std::to_string(q) + "]"; };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: out << "h " << wire(g.q0) << ";\n"; break;
            case GateKind::X: out << "x " << wire(g.q0) << ";\n"; break;
            case GateKind::Z: out << "z " << wire(g.q0) << ";\n"; break;
            case GateKind::S: out << "s " << wire(g.q0) << ";\n"; break;
            case GateKind::Sdg: out << "sdg " << wire(g.q0) << ";\n"; break;
            case GateKind::T: out << "t " << wire(g.q0) << ";\n"; break;
            case GateKind::Tdg: out << "tdg " << wire(g.q0) << ";\n"; break;
            case GateKind::CNOT: out << "cx " << wire(g.q0) << "," << wire(g.q1) << ";\n"; break;
            case GateKind::CZ: out << "cz " << wire(g.q0) << "," << wire(g.q1) << ";\n"; break;
            case GateKind::RZ: out << "rz(" << g.angle.to_string() << ") " << wire(g.q0) << ";\n"; break;
        }
    }
    return out.str();
}

}  // namespace qcmerge
