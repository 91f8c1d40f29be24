// Command-line front end: optimize circuits, report statistics and rank
// certificates, verify equivalence, and run benchmark manifests.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qcmerge/circuit_io.hpp"
#include "qcmerge/merge.hpp"
#include "qcmerge/rotation_seq.hpp"
#include "qcmerge/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qcmerge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;     // parse errors, unsupported gates, missing files
constexpr int kExitInternal = 3;  // invariant failures

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class Format { QC, QASM };

Format resolve_format(const std::string& flag, const fs::path& path) {
    if (flag == "qc") return Format::QC;
    if (flag == "qasm") return Format::QASM;
    const std::string ext = path.extension().string();
    if (ext == ".qc") return Format::QC;
    if (ext == ".qasm") return Format::QASM;
    throw ParseError("cannot infer format of '" + path.string() + "' (use --format)");
}

Circuit load_circuit(const fs::path& path, const std::string& format_flag) {
    const std::string text = read_file(path);
    return resolve_format(format_flag, path) == Format::QC ? parse_qc(text) : parse_qasm(text);
}

std::string render_circuit(const Circuit& c, Format f) {
    return f == Format::QC ? write_qc(c) : write_qasm(c);
}

json stats_json(const Circuit& c) {
    const CircuitStats s = stats(c);
    return json{{"gate_count", s.gate_count},
                {"n", s.n_qubits},
                {"t_count", s.t_count},
                {"non_clifford_rz_count", s.non_clifford_rz_count},
                {"h_count", s.h_count},
                {"internal_h_count", s.internal_h_count}};
}

json outcome_json(const MergeOutcome& out) {
    json merges = json::array();
    for (const MergeRecord& m : out.merges)
        merges.push_back(json{{"i", m.from}, {"j", m.into}, {"sign", m.sign}});
    return json{{"pass", out.pass_name},
                {"t_count_before", out.t_count_before},
                {"t_count_after", out.t_count_after},
                {"rz_count_after", out.rz_count_after},
                {"checks", out.checks},
                {"merges", merges},
                {"wall_time_ms", out.wall_time_ms}};
}

json report_json(const EquivalenceReport& r) {
    return json{{"method", r.method},
                {"equivalent", r.equivalent},
                {"max_deviation", r.max_deviation},
                {"samples", r.samples},
                {"assignments", r.assignments},
                {"seed", r.seed}};
}

struct BenchRow {
    std::string circuit;
    std::string method;
    bool ok = false;
    std::string error;
    std::size_t n = 0, t_in = 0, t_out = 0, rz_out = 0, checks = 0, h = 0;
    double ms = 0.0;
    std::string verified;  // "", "true", "false"
};

void print_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "circuit,n,t_in,method,t_out,rz_out,checks,h,ms,verified\n";
    for (const BenchRow& r : rows) {
        if (!r.ok) {
            os << r.circuit << ",,," << r.method << ",,,,,,error: " << r.error << "\n";
            continue;
        }
        os << r.circuit << ',' << r.n << ',' << r.t_in << ',' << r.method << ',' << r.t_out << ','
           << r.rz_out << ',' << r.checks << ',' << r.h << ',' << r.ms << ',' << r.verified
           << "\n";
    }
}

void print_bench_md(std::ostream& os, const std::vector<BenchRow>& rows,
                    const std::vector<std::string>& methods) {
    os << "| Circuit | n | T-count |";
    for (const std::string& m : methods) os << ' ' << m << " T-count | t (ms) |";
    os << "\n|---|---|---|";
    for (std::size_t i = 0; i < methods.size(); ++i) os << "---|---|";
    os << "\n";
    for (std::size_t i = 0; i < rows.size(); i += methods.size()) {
        const BenchRow& first = rows[i];
        os << "| " << first.circuit << " | " << (first.ok ? std::to_string(first.n) : "-")
           << " | " << (first.ok ? std::to_string(first.t_in) : "-") << " |";
        for (std::size_t k = 0; k < methods.size(); ++k) {
            const BenchRow& r = rows[i + k];
            if (r.ok)
                os << ' ' << r.t_out << " | " << r.ms << " |";
            else
                os << " error | - |";
        }
        os << "\n";
    }
}

int cmd_optimize(const fs::path& in, const fs::path& out, const std::string& format,
                 const std::string& method, const fs::path& stats_path) {
    const Circuit c = load_circuit(in, format);
    const MergeOutcome outcome = run_pass(c, method);
    if (!out.empty()) {
        std::ofstream os(out);
        os << render_circuit(outcome.circuit, resolve_format(format, out));
    } else {
        std::cout << render_circuit(outcome.circuit, resolve_format(format, in));
    }
    if (!stats_path.empty()) {
        std::ofstream os(stats_path);
        os << outcome_json(outcome).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_stats(const fs::path& in, const std::string& format) {
    std::cout << stats_json(load_circuit(in, format)).dump(2) << "\n";
    return kExitOk;
}

int cmd_rank(const fs::path& in, const std::string& format, bool extended, bool vector) {
    const Circuit c = load_circuit(in, format);
    const RotationSequence seq = extract(c);
    const RankVector v = rank_vector(seq);
    json out{{"m", seq.size()}, {"h", v.weight()}, {"rank_A", v.weight()}};
    if (extended) out["rank_M"] = extended_commutativity_matrix(c).rank();
    if (vector) {
        out["v"] = v.bits;
        out["pivot_indices"] = v.pivot_indices;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const fs::path& a, const fs::path& b, const std::string& format, double tol,
               int samples) {
    const Circuit c1 = load_circuit(a, format);
    const Circuit c2 = load_circuit(b, format);
    std::cout << report_json(equivalent_up_to_phase(c1, c2, tol, samples)).dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const fs::path& manifest, const std::vector<std::string>& methods,
              std::size_t verify_max, const std::string& out_format, unsigned jobs,
              double time_budget_s) {
    const std::string text = read_file(manifest);
    std::vector<fs::path> paths;
    for (const std::string& line : detail::split_lines(text)) {
        std::string trimmed = line.substr(0, line.find('#'));
        const auto b = trimmed.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        trimmed = trimmed.substr(b, trimmed.find_last_not_of(" \t") - b + 1);
        fs::path p(trimmed);
        if (p.is_relative()) p = manifest.parent_path() / p;
        paths.push_back(p);
    }

    std::vector<BenchRow> rows(paths.size() * methods.size());
    std::vector<double> parse_ms(paths.size(), -1.0);
    std::atomic<std::size_t> next{0};
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_s = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= paths.size()) return;
            const std::string name = paths[i].stem().string();
            for (std::size_t k = 0; k < methods.size(); ++k) {
                BenchRow& row = rows[i * methods.size() + k];
                row.circuit = name;
                row.method = methods[k];
            }
            if (time_budget_s > 0 && elapsed_s() > time_budget_s) {
                for (std::size_t k = 0; k < methods.size(); ++k)
                    rows[i * methods.size() + k].error = "time budget exhausted";
                continue;
            }
            try {
                const auto parse_start = std::chrono::steady_clock::now();
                const Circuit c = load_circuit(paths[i], "auto");
                parse_ms[i] = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - parse_start)
                                  .count();
                const CircuitStats in_stats = stats(c);
                const std::size_t h = rank_vector(extract(c)).weight();
                for (std::size_t k = 0; k < methods.size(); ++k) {
                    BenchRow& row = rows[i * methods.size() + k];
                    const MergeOutcome out = run_pass(c, methods[k]);
                    row.ok = true;
                    row.n = c.n_qubits;
                    row.t_in = in_stats.t_count;
                    row.t_out = out.t_count_after;
                    row.rz_out = out.rz_count_after;
                    row.checks = out.checks;
                    row.h = h;
                    row.ms = out.wall_time_ms;
                    if (verify_max > 0 && c.n_qubits <= verify_max)
                        row.verified = equivalent_up_to_phase(c, out.circuit, 1e-9).equivalent
                                           ? "true"
                                           : "false";
                }
            } catch (const Error& e) {
                for (std::size_t k = 0; k < methods.size(); ++k) {
                    rows[i * methods.size() + k].ok = false;
                    rows[i * methods.size() + k].error = e.what();
                }
            }
        }
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    if (out_format == "md")
        print_bench_md(std::cout, rows, methods);
    else
        print_bench_csv(std::cout, rows);
    // Timings in the table cover the passes only; parsing is reported here.
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (parse_ms[i] >= 0)
            std::cerr << "parse " << paths[i].stem().string() << ": " << parse_ms[i] << " ms\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pauli-rotation merging optimizer for Clifford+RZ circuits"};
    app.require_subcommand(1);

    std::string format = "auto";
    app.add_option("--format", format, "circuit format: qc, qasm or auto (by extension)")
        ->check(CLI::IsMember({"qc", "qasm", "auto"}))
        ->capture_default_str();

    auto* opt = app.add_subcommand("optimize", "rewrite a circuit with merged rotations");
    std::string method = "fasttmerge";
    fs::path opt_in, opt_out, opt_stats;
    opt->add_option("--method", method, "merge pass")
        ->check(CLI::IsMember({"bbmerge", "fasttmerge", "tmerge"}))
        ->capture_default_str();
    opt->add_option("--in", opt_in, "input circuit")->required();
    opt->add_option("--out", opt_out, "output circuit (stdout if omitted)");
    opt->add_option("--stats-json", opt_stats, "write the merge outcome as JSON");

    auto* st = app.add_subcommand("stats", "gate statistics as JSON");
    fs::path st_in;
    st->add_option("--in", st_in, "input circuit")->required();

    auto* rk = app.add_subcommand("rank", "rank certificates of the rotation sequence");
    fs::path rk_in;
    bool rk_extended = false, rk_vector = false;
    rk->add_option("--in", rk_in, "input circuit")->required();
    rk->add_flag("--extended", rk_extended, "also report the extended-matrix rank");
    rk->add_flag("--vector", rk_vector, "include the rank vector itself");

    auto* vf = app.add_subcommand("verify", "equivalence of two circuits up to global phase");
    fs::path vf_a, vf_b;
    double vf_tol = 1e-9;
    int vf_samples = 5;
    vf->add_option("--a", vf_a, "first circuit")->required();
    vf->add_option("--b", vf_b, "second circuit")->required();
    vf->add_option("--tol", vf_tol, "tolerance")->capture_default_str();
    vf->add_option("--samples", vf_samples, "parameter samples")->capture_default_str();

    auto* bn = app.add_subcommand("bench", "run a manifest of circuits through the passes");
    fs::path bn_manifest;
    std::string bn_methods = "bbmerge,fasttmerge,tmerge";
    std::string bn_out = "csv";
    std::size_t bn_verify_max = 0;
    unsigned bn_jobs = 1;
    double bn_budget = 0.0;
    bn->add_option("--manifest", bn_manifest, "file listing circuit paths")->required();
    bn->add_option("--methods", bn_methods, "comma-separated subset of passes")
        ->capture_default_str();
    bn->add_option("--verify-max-qubits", bn_verify_max,
                   "verify outputs up to this many qubits (0 = off)")
        ->capture_default_str();
    bn->add_option("--out", bn_out, "report format")
        ->check(CLI::IsMember({"csv", "md"}))
        ->capture_default_str();
    bn->add_option("--jobs", bn_jobs, "circuits processed in parallel")->capture_default_str();
    bn->add_option("--time-budget-s", bn_budget,
                   "skip remaining circuits once this many seconds have passed (0 = off)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt->parsed()) return cmd_optimize(opt_in, opt_out, format, method, opt_stats);
        if (st->parsed()) return cmd_stats(st_in, format);
        if (rk->parsed()) return cmd_rank(rk_in, format, rk_extended, rk_vector);
        if (vf->parsed()) return cmd_verify(vf_a, vf_b, format, vf_tol, vf_samples);
        if (bn->parsed()) {
            std::vector<std::string> methods;
            std::stringstream ss(bn_methods);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) methods.push_back(item);
            for (const std::string& m : methods)
                if (m != "bbmerge" && m != "fasttmerge" && m != "tmerge")
                    throw ParseError("unknown method '" + m + "'");
            return cmd_bench(bn_manifest, methods, bn_verify_max, bn_out, bn_jobs, bn_budget);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
