// Copyright 2026 The qsearch developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 usage or domain error,
// 3 I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsearch/analysis.hpp"
#include "qsearch/circuit.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/state_prep.hpp"

namespace {

using nlohmann::json;
using namespace qsearch;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like FROM..TO, got '" + text + "'");
    std::size_t used = 0;
    const std::uint64_t from = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("bad range start in '" + text + "'");
    const std::string tail = text.substr(dots + 2);
    const std::uint64_t to = std::stoull(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("bad range end in '" + text + "'");
    return {from, to};
}

std::vector<std::uint64_t> canonical_marked(std::vector<std::uint64_t> marked) {
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    return marked;
}

std::string format_probability(double p) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12f", p);
    return buf;
}

std::string format_percent(double p) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", p);
    return buf;
}

void print_kv(const std::string& key, const std::string& value) {
    std::printf("%-26s %s\n", key.c_str(), value.c_str());
}

// ---------------------------------------------------------------- prepare --

int cmd_prepare(std::uint64_t n_items, bool with_probabilities,
                const std::string& qasm_path) {
    const Circuit prep = build_uniform_prep(n_items);
    print_kv("items", std::to_string(n_items));
    print_kv("qubits", std::to_string(prep.n_qubits));
    print_kv("gates", std::to_string(gate_count(prep)));
    print_kv("depth", std::to_string(depth(prep)));
    if (with_probabilities) {
        const std::vector<double> p = probabilities(prepare_uniform(n_items));
        double lo = 1.0, hi = 0.0, leakage = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j < n_items) {
                lo = std::min(lo, p[j]);
                hi = std::max(hi, p[j]);
            } else {
                leakage += p[j];
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.18e", hi);
        print_kv("max_probability", buf);
        std::snprintf(buf, sizeof(buf), "%.18e", lo);
        print_kv("min_probability", buf);
        std::snprintf(buf, sizeof(buf), "%.3e", leakage);
        print_kv("leakage", buf);
    }
    if (!qasm_path.empty()) {
        write_file(qasm_path, to_qasm3(prep));
        print_kv("qasm_written", qasm_path);
    }
    return 0;
}

// ----------------------------------------------------------------- search --

json report_to_json(const SearchReport& r, std::optional<double> eta_percent) {
    json doc{{"n_items", r.n_items},
             {"n_qubits", r.n_qubits},
             {"n_marked", r.n_marked},
             {"iterations", r.iterations_used},
             {"success_probability", r.success_probability},
             {"theoretical_probability", r.theoretical_probability},
             {"t_old", r.t_old},
             {"t_new", r.t_new},
             {"eta_percent", eta_percent ? json(*eta_percent) : json(nullptr)}};
    if (r.histogram) {
        json h = json::object();
        for (const auto& [index, count] : *r.histogram) h[std::to_string(index)] = count;
        doc["histogram"] = h;
    }
    if (r.seed) doc["seed"] = *r.seed;
    return doc;
}

int cmd_search(std::uint64_t n_items, std::vector<std::uint64_t> marked,
               std::optional<std::uint64_t> iterations, std::optional<std::uint64_t> shots,
               std::optional<std::uint64_t> seed, const std::string& format) {
    const SearchSpec spec{n_items, canonical_marked(std::move(marked))};
    const SearchReport r = run_search(spec, iterations, shots, seed);
    const std::optional<double> eta_percent = analysis::eta(n_items, spec.marked.size());

    if (format == "json") {
        std::printf("%s\n", report_to_json(r, eta_percent).dump(2).c_str());
        return 0;
    }
    if (format == "csv") {
        std::printf(
            "n_items,n_qubits,n_marked,iterations,success_probability,"
            "theoretical_probability,t_old,t_new,eta_percent\n");
        std::printf("%llu,%d,%llu,%llu,%s,%s,%llu,%llu,%s\n",
                    static_cast<unsigned long long>(r.n_items), r.n_qubits,
                    static_cast<unsigned long long>(r.n_marked),
                    static_cast<unsigned long long>(r.iterations_used),
                    format_probability(r.success_probability).c_str(),
                    format_probability(r.theoretical_probability).c_str(),
                    static_cast<unsigned long long>(r.t_old),
                    static_cast<unsigned long long>(r.t_new),
                    eta_percent ? format_percent(*eta_percent).c_str() : "");
        return 0;
    }

    print_kv("items", std::to_string(r.n_items));
    print_kv("qubits", std::to_string(r.n_qubits));
    print_kv("marked", std::to_string(r.n_marked));
    print_kv("iterations", std::to_string(r.iterations_used));
    print_kv("success_probability", format_probability(r.success_probability));
    print_kv("theoretical_probability", format_probability(r.theoretical_probability));
    print_kv("t_old", std::to_string(r.t_old));
    print_kv("t_new", std::to_string(r.t_new));
    print_kv("eta_percent", eta_percent ? format_percent(*eta_percent) : "-");
    if (r.seed) print_kv("seed", std::to_string(*r.seed));
    if (r.histogram) {
        std::printf("histogram:\n");
        for (const auto& [index, count] : *r.histogram)
            std::printf("  %-10llu %llu\n", static_cast<unsigned long long>(index),
                        static_cast<unsigned long long>(count));
    }
    return 0;
}

// ---------------------------------------------------------------- compare --

int cmd_compare(std::uint64_t n_items, std::uint64_t n_marked, const std::string& format) {
    const analysis::ImprovementRow row = analysis::improvement_row(n_items, n_marked);

    if (format == "json") {
        const json doc{
            {"n_items", row.n_items},
            {"n_qubits", row.n_qubits},
            {"n_marked", row.n_marked},
            {"t_old", row.t_old},
            {"t_new", row.t_new},
            {"factor", row.factor ? json(*row.factor) : json(nullptr)},
            {"eta_percent", row.eta_percent ? json(*row.eta_percent) : json(nullptr)},
            {"factor_asymptotic", row.factor_asymptotic},
            {"eta_asymptotic_percent", row.eta_asymptotic_percent}};
        std::printf("%s\n", doc.dump(2).c_str());
        return 0;
    }
    if (format == "csv") {
        std::printf("%s", analysis::to_csv({&row, 1}).c_str());
        return 0;
    }

    print_kv("items", std::to_string(row.n_items));
    print_kv("qubits", std::to_string(row.n_qubits));
    print_kv("marked", std::to_string(row.n_marked));
    print_kv("t_old", std::to_string(row.t_old));
    print_kv("t_new", std::to_string(row.t_new));
    print_kv("factor", row.factor ? format_percent(*row.factor) : "-");
    print_kv("eta_percent", row.eta_percent ? format_percent(*row.eta_percent) : "-");
    print_kv("factor_asymptotic", format_percent(row.factor_asymptotic));
    print_kv("eta_asymptotic_percent", format_percent(row.eta_asymptotic_percent));
    return 0;
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const std::string& sweep_range, const std::string& series_kind,
                const std::string& series_range, std::uint64_t n_marked,
                const std::string& out_path) {
    std::vector<analysis::ImprovementRow> rows;
    if (!sweep_range.empty()) {
        const auto [from, to] = parse_range(sweep_range);
        rows = analysis::sweep(from, to, n_marked);
    } else {
        if (series_kind != "pow2plus1")
            throw std::invalid_argument("unknown series '" + series_kind + "'");
        if (series_range.empty())
            throw std::invalid_argument("--series requires --n FROM..TO");
        const auto [from, to] = parse_range(series_range);
        if (from > static_cast<std::uint64_t>(INT32_MAX) ||
            to > static_cast<std::uint64_t>(INT32_MAX))
            throw std::invalid_argument("exponent range out of bounds");
        rows = analysis::series_pow2plus1(static_cast<int>(from), static_cast<int>(to),
                                          n_marked);
    }
    write_file(out_path, analysis::to_csv(rows));
    print_kv("rows_written", std::to_string(rows.size()));
    print_kv("out", out_path);
    return 0;
}

// ------------------------------------------------------------ export-qasm --

int cmd_export_qasm(const std::string& block, std::uint64_t n_items,
                    std::vector<std::uint64_t> marked, const std::string& out_path) {
    std::string text;
    if (block == "prep") {
        text = to_qasm3(build_uniform_prep(n_items));
    } else if (block == "zero-reflection") {
        text = to_qasm3(build_zero_reflection(qubits_for(n_items)));
    } else if (block == "oracle" || block == "grover") {
        if (marked.empty())
            throw std::invalid_argument("--marked is required for block '" + block + "'");
        const SearchSpec spec{n_items, canonical_marked(std::move(marked))};
        if (block == "oracle") {
            text = to_qasm3(build_oracle(spec));
        } else {
            const GroverOperator op =
                grover_operator(build_uniform_prep(n_items), build_oracle(spec));
            text = to_qasm3(op.circuit,
                            {"global phase: a factor of -1 per application is omitted"});
        }
    } else {
        throw std::invalid_argument("unknown block '" + block + "'");
    }
    write_file(out_path, text);
    print_kv("out", out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover search over arbitrary-size spaces with log-size preparation"};
    app.require_subcommand(1);

    // prepare
    auto* prepare = app.add_subcommand(
        "prepare", "Build the uniform-superposition circuit and report its shape");
    std::uint64_t prepare_n = 0;
    bool prepare_probs = false;
    std::string prepare_qasm;
    prepare->add_option("--n-items", prepare_n, "Search-space size N (>= 2)")->required();
    prepare->add_flag("--probabilities", prepare_probs,
                      "Simulate and report probability spread and leakage");
    prepare->add_option("--emit-qasm", prepare_qasm, "Write the circuit as OpenQASM 3");

    // search
    auto* search = app.add_subcommand("search", "Run the full search and report success");
    std::uint64_t search_n = 0;
    std::vector<std::uint64_t> search_marked;
    std::optional<std::uint64_t> search_iterations, search_shots, search_seed;
    std::string search_format = "human-table";
    search->add_option("--n-items", search_n, "Search-space size N (>= 2)")->required();
    search->add_option("--marked", search_marked, "Comma-separated marked indices")
        ->required()
        ->delimiter(',');
    search->add_option("--iterations", search_iterations,
                       "Iteration count (default: the optimal count)");
    search->add_option("--shots", search_shots, "Sample a measurement histogram");
    search->add_option("--seed", search_seed, "PRNG seed for --shots (default 0)");
    search->add_option("--format", search_format, "Output format")
        ->check(CLI::IsMember({"human-table", "json", "csv"}));

    // compare
    auto* compare =
        app.add_subcommand("compare", "Compare exact vs rounded-up iteration counts");
    std::uint64_t compare_n = 0, compare_m = 1;
    std::string compare_format = "human-table";
    compare->add_option("--n-items", compare_n, "Search-space size N (>= 2)")->required();
    compare->add_option("--m", compare_m, "Number of marked items (default 1)");
    compare->add_option("--format", compare_format, "Output format")
        ->check(CLI::IsMember({"human-table", "json", "csv"}));

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Write an iteration-savings CSV");
    std::string analyze_sweep, analyze_series, analyze_series_range, analyze_out;
    std::uint64_t analyze_m = 1;
    analyze->add_option("--sweep", analyze_sweep, "Row per N in FROM..TO");
    analyze->add_option("--series", analyze_series,
                        "Named series: pow2plus1 (N = 2^(n-1)+1)");
    analyze->add_option("--n", analyze_series_range, "Exponent range FROM..TO for --series");
    analyze->add_option("--m", analyze_m, "Number of marked items (default 1)");
    analyze->add_option("--out", analyze_out, "Output CSV path")->required();

    // export-qasm
    auto* export_qasm =
        app.add_subcommand("export-qasm", "Write one circuit block as OpenQASM 3");
    std::string export_block, export_out;
    std::uint64_t export_n = 0;
    std::vector<std::uint64_t> export_marked;
    export_qasm->add_option("--block", export_block, "prep|oracle|zero-reflection|grover")
        ->required()
        ->check(CLI::IsMember({"prep", "oracle", "zero-reflection", "grover"}));
    export_qasm->add_option("--n-items", export_n, "Search-space size N (>= 2)")->required();
    export_qasm->add_option("--marked", export_marked, "Comma-separated marked indices")
        ->delimiter(',');
    export_qasm->add_option("--out", export_out, "Output QASM path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (prepare->parsed()) return cmd_prepare(prepare_n, prepare_probs, prepare_qasm);
        if (search->parsed())
            return cmd_search(search_n, std::move(search_marked), search_iterations,
                              search_shots, search_seed, search_format);
        if (compare->parsed()) return cmd_compare(compare_n, compare_m, compare_format);
        if (analyze->parsed()) {
            if (analyze_sweep.empty() == (analyze_series.empty() && analyze_series_range.empty()))
                throw std::invalid_argument("pass exactly one of --sweep or --series/--n");
            return cmd_analyze(analyze_sweep, analyze_series, analyze_series_range, analyze_m,
                               analyze_out);
        }
        if (export_qasm->parsed())
            return cmd_export_qasm(export_block, export_n, std::move(export_marked),
                                   export_out);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
