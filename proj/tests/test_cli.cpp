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

// End-to-end checks of the command-line binary: each test spawns the real
// executable (path injected by the build) and inspects exit code and output.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qsearch/circuit.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/state_prep.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(QSEARCH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n_read = 0;
    while ((n_read = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n_read);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

// Value of a `key value` line in the human-table output.
std::string table_value(const std::string& output, const std::string& key) {
    std::istringstream in(output);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string k, v;
        fields >> k >> v;
        if (k == key) return v;
    }
    return "";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("prepare command") {
    TEST_CASE("reports the shape of the 273-item circuit") {
        const RunResult r = run_cli("prepare --n-items 273 --probabilities");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "qubits") == "9");
        CHECK(table_value(r.output, "gates") == "12");
        const double hi = std::strtod(table_value(r.output, "max_probability").c_str(), nullptr);
        const double lo = std::strtod(table_value(r.output, "min_probability").c_str(), nullptr);
        CHECK(hi - lo <= 1e-12);
        CHECK(std::strtod(table_value(r.output, "leakage").c_str(), nullptr) <= 1e-24);
    }

    TEST_CASE("a power of two degenerates to plain hadamards") {
        const RunResult r = run_cli("prepare --n-items 16");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "qubits") == "4");
        CHECK(table_value(r.output, "gates") == "4");
    }

    TEST_CASE("a degenerate size is a usage error") {
        CHECK(run_cli("prepare --n-items 1").exit_code == 2);
    }

    TEST_CASE("emitted qasm matches the library emitter byte for byte") {
        const std::string path = "cli_prepare_273.qasm";
        const RunResult r = run_cli("prepare --n-items 273 --emit-qasm " + path);
        REQUIRE(r.exit_code == 0);
        CHECK(read_file(path) == qsearch::to_qasm3(qsearch::build_uniform_prep(273)));
        std::remove(path.c_str());
    }
}

TEST_SUITE("search command") {
    TEST_CASE("the 273-item search reproduces the headline numbers") {
        const RunResult r = run_cli("search --n-items 273 --marked 9");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "iterations") == "12");
        CHECK(table_value(r.output, "t_old") == "17");
        CHECK(table_value(r.output, "t_new") == "12");
        CHECK(table_value(r.output, "eta_percent") == "29.411765");
        const double p =
            std::strtod(table_value(r.output, "success_probability").c_str(), nullptr);
        CHECK(std::abs(p - 0.996776974159) < 1e-9);
        CHECK(p >= 0.99);
    }

    TEST_CASE("four items hit with certainty") {
        const RunResult r = run_cli("search --n-items 4 --marked 2");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "iterations") == "1");
        CHECK(table_value(r.output, "success_probability") == "1.000000000000");
    }

    TEST_CASE("seeded histograms concentrate on the marked item") {
        const RunResult r = run_cli("search --n-items 273 --marked 9 --shots 4096 --seed 7");
        REQUIRE(r.exit_code == 0);
        std::istringstream in(r.output);
        std::string line;
        std::uint64_t marked_count = 0;
        bool in_histogram = false;
        while (std::getline(in, line)) {
            if (line == "histogram:") {
                in_histogram = true;
                continue;
            }
            if (!in_histogram) continue;
            std::istringstream fields(line);
            std::uint64_t index = 0, count = 0;
            fields >> index >> count;
            if (index == 9) marked_count = count;
        }
        CHECK(marked_count >= 3891);  // >= 95% of 4096
    }

    TEST_CASE("json output is well-formed, complete, and deterministic") {
        const RunResult a = run_cli("search --n-items 273 --marked 9 --shots 64 --seed 5 --format json");
        const RunResult b = run_cli("search --n-items 273 --marked 9 --shots 64 --seed 5 --format json");
        REQUIRE(a.exit_code == 0);
        CHECK(a.output == b.output);
        const nlohmann::json doc = nlohmann::json::parse(a.output);
        CHECK(doc.at("n_items") == 273);
        CHECK(doc.at("n_qubits") == 9);
        CHECK(doc.at("iterations") == 12);
        CHECK(doc.at("t_old") == 17);
        CHECK(doc.at("t_new") == 12);
        CHECK(doc.at("seed") == 5);
        CHECK(doc.at("eta_percent").get<double>() == doctest::Approx(29.411765).epsilon(1e-6));
        std::uint64_t total = 0;
        for (const auto& [key, value] : doc.at("histogram").items())
            total += value.get<std::uint64_t>();
        CHECK(total == 64);
    }

    TEST_CASE("csv output carries the report row") {
        const RunResult r = run_cli("search --n-items 273 --marked 9 --format csv");
        REQUIRE(r.exit_code == 0);
        std::istringstream in(r.output);
        std::string header, row;
        REQUIRE(std::getline(in, header));
        REQUIRE(std::getline(in, row));
        CHECK(header ==
              "n_items,n_qubits,n_marked,iterations,success_probability,"
              "theoretical_probability,t_old,t_new,eta_percent");
        CHECK(row.rfind("273,9,1,12,0.996776974159,0.996776974159,17,12,29.411765", 0) == 0);
    }

    TEST_CASE("bad instances are usage errors") {
        CHECK(run_cli("search --n-items 8 --marked 9").exit_code == 2);
        CHECK(run_cli("search --n-items 8").exit_code == 2);
        CHECK(run_cli("search --n-items 1 --marked 0").exit_code == 2);
    }

    TEST_CASE("marked lists are canonicalized") {
        const RunResult r = run_cli("search --n-items 8 --marked 5,1,5");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "marked") == "2");
        CHECK(table_value(r.output, "success_probability") == "1.000000000000");
    }
}

TEST_SUITE("compare command") {
    TEST_CASE("the 273-item comparison") {
        const RunResult r = run_cli("compare --n-items 273 --m 1");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "t_old") == "17");
        CHECK(table_value(r.output, "t_new") == "12");
        CHECK(table_value(r.output, "factor") == "1.416667");
        CHECK(table_value(r.output, "eta_percent") == "29.411765");
    }

    TEST_CASE("powers of two save nothing") {
        const RunResult r = run_cli("compare --n-items 512 --m 1");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "eta_percent") == "0.000000");
    }

    TEST_CASE("degenerate instances surface the undefined marker") {
        const RunResult r = run_cli("compare --n-items 3 --m 2");
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "t_new") == "0");
        CHECK(table_value(r.output, "factor") == "-");

        const RunResult j = run_cli("compare --n-items 3 --m 2 --format json");
        const nlohmann::json doc = nlohmann::json::parse(j.output);
        CHECK(doc.at("factor").is_null());
        CHECK(doc.at("eta_percent").get<double>() == 100.0);
    }

    TEST_CASE("csv format matches the analysis emitter") {
        const RunResult r = run_cli("compare --n-items 273 --m 1 --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(r.output ==
              "N,n,M,T_old,T_new,f,eta_percent,f_asymptotic,eta_asymptotic_percent\n"
              "273,9,1,17,12,1.416667,29.411765,1.369474,26.979241\n");
    }

    TEST_CASE("domain violations are usage errors") {
        CHECK(run_cli("compare --n-items 273 --m 0").exit_code == 2);
        CHECK(run_cli("compare --n-items 273 --m 300").exit_code == 2);
    }
}

TEST_SUITE("analyze command") {
    TEST_CASE("a full sweep writes one row per size") {
        const std::string path = "cli_sweep.csv";
        const RunResult r = run_cli("analyze --sweep 3..1024 --m 1 --out " + path);
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "rows_written") == "1022");
        std::istringstream in(read_file(path));
        std::string line;
        std::size_t lines = 0;
        while (std::getline(in, line)) ++lines;
        CHECK(lines == 1023);  // header + rows
        std::remove(path.c_str());
    }

    TEST_CASE("the power-of-two-plus-one series approaches the plateau") {
        const std::string path = "cli_series.csv";
        const RunResult r = run_cli("analyze --series pow2plus1 --n 3..30 --m 1 --out " + path);
        REQUIRE(r.exit_code == 0);
        CHECK(table_value(r.output, "rows_written") == "28");
        std::istringstream in(read_file(path));
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            std::string field;
            std::getline(fields, field, ',');  // N
            const std::uint64_t n_items = std::stoull(field);
            for (int skip = 0; skip < 5; ++skip) std::getline(fields, field, ',');  // n..f
            std::getline(fields, field, ',');
            const double eta = std::stod(field);
            if (n_items >= (std::uint64_t{1} << 19)) {
                CHECK(eta >= 29.0);
                CHECK(eta <= 29.6);
            }
        }
        std::remove(path.c_str());
    }

    TEST_CASE("range and flag misuse are usage errors") {
        CHECK(run_cli("analyze --sweep 10..3 --m 1 --out cli_x.csv").exit_code == 2);
        CHECK(run_cli("analyze --m 1 --out cli_x.csv").exit_code == 2);
        CHECK(run_cli("analyze --sweep 3..4 --series pow2plus1 --n 3..4 --m 1 --out cli_x.csv")
                  .exit_code == 2);
        CHECK(run_cli("analyze --series pow2plus1 --m 1 --out cli_x.csv").exit_code == 2);
    }

    TEST_CASE("an unwritable output path is an io error") {
        CHECK(run_cli("analyze --sweep 3..4 --m 1 --out /nonexistent-dir/x.csv").exit_code == 3);
    }
}

TEST_SUITE("export-qasm command") {
    TEST_CASE("each block matches the library emitter byte for byte") {
        using namespace qsearch;
        const std::string path = "cli_block.qasm";

        REQUIRE(run_cli("export-qasm --block prep --n-items 273 --out " + path).exit_code == 0);
        CHECK(read_file(path) == to_qasm3(build_uniform_prep(273)));

        REQUIRE(run_cli("export-qasm --block zero-reflection --n-items 512 --out " + path)
                    .exit_code == 0);
        CHECK(read_file(path) == to_qasm3(build_zero_reflection(9)));

        REQUIRE(run_cli("export-qasm --block oracle --n-items 273 --marked 9 --out " + path)
                    .exit_code == 0);
        CHECK(read_file(path) == to_qasm3(build_oracle(SearchSpec{273, {9}})));

        REQUIRE(run_cli("export-qasm --block grover --n-items 273 --marked 9 --out " + path)
                    .exit_code == 0);
        const std::string grover_text = read_file(path);
        const GroverOperator op =
            grover_operator(build_uniform_prep(273), build_oracle(SearchSpec{273, {9}}));
        CHECK(grover_text ==
              to_qasm3(op.circuit, {"global phase: a factor of -1 per application is omitted"}));
        CHECK(grover_text.find("// global phase") != std::string::npos);
        std::remove(path.c_str());
    }

    TEST_CASE("oracle and grover blocks require a marked list") {
        CHECK(run_cli("export-qasm --block oracle --n-items 273 --out cli_x.qasm").exit_code ==
              2);
        CHECK(run_cli("export-qasm --block grover --n-items 273 --out cli_x.qasm").exit_code ==
              2);
    }

    TEST_CASE("unknown blocks are rejected by flag validation") {
        CHECK(run_cli("export-qasm --block nonsense --n-items 4 --out cli_x.qasm").exit_code ==
              2);
    }
}
