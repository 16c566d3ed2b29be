// Copyright 2026 The QCW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcw/algorithms.h"
#include "qcw/bits.h"
#include "qcw/bool_circuit.h"
#include "qcw/communication.h"
#include "qcw/errors.h"
#include "qcw/gates.h"
#include "qcw/number_theory.h"
#include "qcw/oracle.h"
#include "qcw/rng.h"

namespace qcw::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::uint64_t seed = 0;
    double eps = 0.05;
    int trials = 1;
    std::string format = "json";
    bool timing = false;

    int n = 0;
    int n1 = 0;
    int n2 = 0;
    int rounds = 0;
    std::string marked;
    std::string oracle_path;
    std::string circuit_path;
    std::string encoding;
    std::string input;
    std::uint64_t a = 0;
    std::uint64_t modulus = 0;
};

/// One report produced by a trial.
struct Report {
    int n = 0;
    std::uint64_t queries = 0;
    std::uint64_t aux_gates = 0;
    json outcome;
    bool success = false;
    json details;     // optional extras, omitted when null
    json transcript;  // protocols only
};

using TrialFn = std::function<std::vector<Report>(const Config &, Rng &, std::uint64_t seed)>;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Reads and parses a file; parse failures count as file errors.
template <typename Parse>
auto load(const std::string &path, Parse parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const FileError &) {
        throw;
    } catch (const std::exception &e) {
        throw FileError(path + ": " + e.what());
    }
}

json bits_or_null(const std::optional<std::uint64_t> &v, int width) {
    return v ? json(index_to_string(*v, width)) : json(nullptr);
}

Bits random_bits(std::size_t n, Rng &rng) {
    Bits b(n);
    for (auto &v : b) {
        v = static_cast<std::uint8_t>(coin_flip(rng));
    }
    return b;
}

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw InputError(what);
    }
}

int log2_exact(std::size_t n) {
    require(n >= 2 && (n & (n - 1)) == 0, "--n must be a power of two >= 2");
    int k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------------------------
// Subcommands

std::vector<Report> run_deutsch(const Config &, Rng &rng, std::uint64_t) {
    std::vector<Report> out;
    for (int c0 = 0; c0 < 2; ++c0) {
        for (int c1 = 0; c1 < 2; ++c1) {
            const DeutschInstance inst{c0, c1};
            QueryCounter counter;
            LocalQueryAccess access(inst.oracle(), counter);
            const DeutschResult r = deutsch(access, rng);
            const Amplitude expected = c0 ? -1.0 : 1.0;
            const bool phase_ok = std::abs(r.final_state[(static_cast<std::uint64_t>(c1) << 1) | 1] - expected) < 1e-9;
            Report rep;
            rep.n = 1;
            rep.queries = counter.count();
            rep.aux_gates = 4;
            rep.outcome = {{"c0", c0}, {"c1", c1}, {"measured", r.c1}, {"probability", r.outcome_probability}};
            rep.success = r.c1 == c1 && phase_ok;
            out.push_back(std::move(rep));
        }
    }
    return out;
}

std::vector<Report> run_simon(const Config &cfg, Rng &rng, std::uint64_t) {
    require(cfg.n >= 1, "simon needs --n >= 1");
    const SimonInstance inst = random_simon_instance(cfg.n, rng);
    QueryCounter counter;
    LocalQueryAccess access(inst.f, counter);
    const SimonResult r = simon(access, rng);
    Report rep;
    rep.n = cfg.n;
    rep.queries = counter.count();
    rep.aux_gates = static_cast<std::uint64_t>(r.rounds) * 2 * static_cast<std::uint64_t>(cfg.n);
    rep.outcome = {{"s", index_to_string(r.s, cfg.n)}, {"expected", index_to_string(inst.s, cfg.n)}};
    rep.success = r.s == inst.s;
    rep.details = {{"rounds", r.rounds}};
    return {rep};
}

std::vector<Report> run_grover(const Config &cfg, Rng &rng, std::uint64_t) {
    std::optional<OracleFunction> f;
    if (!cfg.oracle_path.empty()) {
        f = load(cfg.oracle_path, [](const std::string &t) { return parse_truth_table(t); });
        require(f->out_bits() == 1, "grover needs a boolean oracle");
        require(cfg.n == 0 || cfg.n == f->in_bits(), "--n does not match the oracle width");
    } else {
        std::set<std::uint64_t> marked;
        int n = cfg.n;
        std::stringstream list(cfg.marked);
        for (std::string item; std::getline(list, item, ',');) {
            if (item.empty()) {
                continue;
            }
            require(n == 0 || static_cast<int>(item.size()) == n, "marked item " + item + " has the wrong length");
            n = static_cast<int>(item.size());
            marked.insert(string_to_index(item));
        }
        require(n >= 1, "grover needs --n, --marked or --oracle");
        if (cfg.marked.empty()) {
            marked.insert(uniform_below(rng, std::uint64_t{1} << n));
        }
        require(n <= kMaxGroverQubits, "grover supports n <= " + std::to_string(kMaxGroverQubits));
        f = OracleFunction::tabulate(n, 1, [&](std::uint64_t x) { return marked.count(x) ? 1u : 0u; });
    }
    const int n = f->in_bits();
    std::uint64_t solutions = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        solutions += (*f)(x);
    }
    QueryCounter counter;
    LocalQueryAccess access(*f, counter);
    const GroverRun run = grover_search(access, cfg.eps, rng);
    Report rep;
    rep.n = n;
    rep.queries = run.queries;
    rep.aux_gates = run.aux_gates;
    rep.outcome = {{"witness", bits_or_null(run.witness, n)}, {"solutions", solutions}};
    rep.success = solutions == 0 ? !run.witness : (run.witness && (*f)(*run.witness) == 1);
    rep.details = {{"measurements", run.measurements}};
    return {rep};
}

std::vector<Report> run_sat(const Config &cfg, Rng &rng, std::uint64_t) {
    CircuitEncoding enc;
    if (!cfg.circuit_path.empty()) {
        enc = encode(load(cfg.circuit_path, [](const std::string &t) { return bool_circuit_from_json(t); }));
    } else {
        require(!cfg.encoding.empty(), "sat needs --circuit or --encoding");
        enc = CircuitEncoding::from_hex(cfg.encoding);
    }
    const BoolCircuit c = decode(enc);
    const QuantumSatResult r = quantum_sat(enc, cfg.eps, rng);
    const SatResult brute = brute_force_sat(c);
    Report rep;
    rep.n = c.num_inputs();
    rep.queries = r.queries;
    rep.aux_gates = r.aux_gates;
    rep.outcome = {{"satisfiable", r.satisfiable}, {"witness", bits_or_null(r.witness, rep.n)}};
    rep.success = r.satisfiable == brute.satisfiable && (!r.witness || evaluate(c, *r.witness) == 1);
    rep.details = {{"gates_per_query", r.gates_per_query},
                   {"total_gates", r.total_gates},
                   {"ancillas", r.ancillas},
                   {"gate_level", r.gate_level}};
    return {rep};
}

/// Random f(x1, x2) whose OR-AND value is a fair coin: rows are all ones only where chosen.
OracleFunction random_or_and(int n1, int n2, Rng &rng) {
    const std::uint64_t rows = std::uint64_t{1} << n1, cols = std::uint64_t{1} << n2;
    std::vector<std::uint64_t> table(rows * cols);
    const std::optional<std::uint64_t> full =
        coin_flip(rng) ? std::optional<std::uint64_t>(uniform_below(rng, rows)) : std::nullopt;
    for (std::uint64_t r = 0; r < rows; ++r) {
        for (std::uint64_t c = 0; c < cols; ++c) {
            table[r * cols + c] = full == r ? 1 : static_cast<std::uint64_t>(coin_flip(rng));
        }
        if (full != r) {
            table[r * cols + uniform_below(rng, cols)] = 0;
        }
    }
    return OracleFunction(n1 + n2, 1, std::move(table));
}

std::vector<Report> run_or_and(const Config &cfg, Rng &rng, std::uint64_t) {
    require(cfg.n1 >= 1 && cfg.n2 >= 1, "or-and needs --n1 >= 1 and --n2 >= 1");
    require(cfg.n1 + cfg.n2 <= kMaxGroverQubits, "or-and supports n1 + n2 <= " + std::to_string(kMaxGroverQubits));
    OracleFunction f = cfg.oracle_path.empty()
                           ? random_or_and(cfg.n1, cfg.n2, rng)
                           : load(cfg.oracle_path, [](const std::string &t) { return parse_truth_table(t); });
    require(f.in_bits() == cfg.n1 + cfg.n2 && f.out_bits() == 1, "oracle must map n1 + n2 bits to one bit");
    int expected = 0;
    const std::uint64_t cols = std::uint64_t{1} << cfg.n2;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << cfg.n1) && !expected; ++r) {
        int row = 1;
        for (std::uint64_t c = 0; c < cols; ++c) {
            row &= static_cast<int>(f(r * cols + c));
        }
        expected = row;
    }
    const NestedResult r = nested_or_and(f, cfg.n1, cfg.n2, cfg.eps, rng);
    Report rep;
    rep.n = cfg.n1 + cfg.n2;
    rep.queries = r.queries;
    rep.outcome = {{"value", r.value}, {"x1", bits_or_null(r.x1, cfg.n1)}};
    rep.success = r.value == expected;
    rep.details = {{"outer_queries", r.outer_queries}, {"inner_cost", r.inner_cost}};
    return {rep};
}

std::vector<Report> run_parity(const Config &cfg, Rng &rng, std::uint64_t) {
    OracleFunction f = [&] {
        if (!cfg.oracle_path.empty()) {
            return load(cfg.oracle_path, [](const std::string &t) { return parse_truth_table(t); });
        }
        require(cfg.n >= 1 && cfg.n <= kMaxGroverQubits, "parity needs 1 <= --n <= " + std::to_string(kMaxGroverQubits));
        return OracleFunction::tabulate(cfg.n, 1, [&](std::uint64_t) { return static_cast<std::uint64_t>(coin_flip(rng)); });
    }();
    require(f.out_bits() == 1, "parity needs a boolean oracle");
    int expected = 0;
    for (std::uint64_t v : f.table()) {
        expected ^= static_cast<int>(v);
    }
    QueryCounter counter;
    LocalQueryAccess access(f, counter);
    const ParityResult r = parity_brute(access);
    Report rep;
    rep.n = f.in_bits();
    rep.queries = r.queries;
    rep.outcome = {{"value", r.value}};
    rep.success = r.value == expected;
    return {rep};
}

std::vector<Report> run_order(const Config &cfg, Rng &, std::uint64_t) {
    const OrderResult r = brute_force_order(cfg.a, cfg.modulus);
    Report rep;
    rep.n = static_cast<int>(std::bit_width(cfg.modulus));
    rep.queries = r.r;
    rep.outcome = {{"a", r.a}, {"N", r.modulus}, {"r", r.r}};
    rep.success = pow_mod(cfg.a, r.r, cfg.modulus) == 1;
    return {rep};
}

std::vector<Report> run_factor(const Config &cfg, Rng &rng, std::uint64_t) {
    const OrderSource order = [](std::uint64_t a, std::uint64_t m) { return brute_force_order(a, m).r; };
    const FactorResult r = factor_from_order(cfg.modulus, order, rng);
    Report rep;
    rep.n = static_cast<int>(std::bit_width(cfg.modulus));
    rep.queries = static_cast<std::uint64_t>(r.order_calls);
    rep.outcome = {{"N", r.n}, {"factors", r.factors}, {"complete", r.complete}};
    rep.success = r.complete;
    rep.details = {{"attempts", r.attempts}};
    return {rep};
}

Report protocol_report(const Config &cfg, ProtocolOutcome &p, std::uint64_t seed) {
    p.transcript.seed = seed;
    Report rep;
    rep.n = cfg.n;
    rep.queries = p.queries;
    rep.transcript = json::parse(p.transcript.to_json());
    return rep;
}

std::vector<Report> run_eq(const Config &cfg, Rng &rng, std::uint64_t seed) {
    require(cfg.n >= 2, "eq needs --n >= 2");
    const Bits x = random_bits(cfg.n, rng);
    Bits y = x;
    if (coin_flip(rng)) {
        while (y == x) {
            y = random_bits(cfg.n, rng);
        }
    }
    const int rounds = cfg.rounds > 0 ? cfg.rounds : fingerprint_rounds(cfg.eps);
    ProtocolOutcome p = eq_fingerprint(x, y, rounds, rng);
    Report rep = protocol_report(cfg, p, seed);
    const int truth = eq_function(x, y);
    rep.outcome = {{"output", p.output}, {"equal", truth == 1}};
    rep.success = p.output == truth;
    rep.details = {{"rounds", rounds}};
    return {rep};
}

/// Disjoint, single-common-index, or independent uniform pairs with equal probability.
std::pair<Bits, Bits> random_pair(std::size_t n, Rng &rng) {
    Bits x = random_bits(n, rng), y = random_bits(n, rng);
    const std::uint64_t kind = uniform_below(rng, 3);
    if (kind < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i]) {
                y[i] = 0;
            }
        }
        if (kind == 1) {
            const std::uint64_t i = uniform_below(rng, n);
            x[i] = y[i] = 1;
        }
    }
    return {x, y};
}

std::vector<Report> run_intersect(const Config &cfg, Rng &rng, std::uint64_t seed) {
    const int k = log2_exact(static_cast<std::size_t>(cfg.n));
    const auto [x, y] = random_pair(cfg.n, rng);
    ProtocolOutcome p = intersection_protocol(x, y, cfg.eps, rng);
    Report rep = protocol_report(cfg, p, seed);
    const int truth = in_function(x, y);
    rep.outcome = {{"output", p.output}, {"witness", bits_or_null(p.witness, k)}, {"intersect", truth == 1}};
    rep.success = p.output == truth && (!p.witness || (x[*p.witness] && y[*p.witness]));
    return {rep};
}

std::vector<Report> run_ip_check(const Config &cfg, Rng &rng, std::uint64_t) {
    log2_exact(static_cast<std::size_t>(cfg.n));
    std::uint64_t pairs = 0, mismatches = 0;
    auto check = [&](const Bits &x, const Bits &y) {
        const IpParity r = ip_parity_identity(x, y);
        ++pairs;
        mismatches += r.ip != r.parity;
    };
    constexpr int kExhaustiveLimit = 8;
    constexpr int kSampledPairs = 1000;
    if (cfg.n <= kExhaustiveLimit) {
        const std::uint64_t size = std::uint64_t{1} << cfg.n;
        for (std::uint64_t xi = 0; xi < size; ++xi) {
            for (std::uint64_t yi = 0; yi < size; ++yi) {
                check(index_to_bits(xi, cfg.n), index_to_bits(yi, cfg.n));
            }
        }
    } else {
        for (int i = 0; i < kSampledPairs; ++i) {
            check(random_bits(cfg.n, rng), random_bits(cfg.n, rng));
        }
    }
    Report rep;
    rep.n = cfg.n;
    rep.queries = pairs * static_cast<std::uint64_t>(cfg.n);
    rep.outcome = {{"pairs", pairs}, {"mismatches", mismatches}, {"exhaustive", cfg.n <= kExhaustiveLimit}};
    rep.success = mismatches == 0;
    return {rep};
}

std::vector<Report> run_simulate(const Config &cfg, Rng &rng, std::uint64_t) {
    require(!cfg.circuit_path.empty(), "simulate needs --circuit");
    const QuantumCircuit circuit =
        load(cfg.circuit_path, [](const std::string &t) { return parse_circuit_text(t); });
    const int m = circuit.num_qubits();
    const std::string input = cfg.input.empty() ? std::string(static_cast<std::size_t>(m), '0') : cfg.input;
    require(static_cast<int>(input.size()) == m, "--input must have " + std::to_string(m) + " bits");
    StateVector state = StateVector::basis(m, std::string_view(input));
    apply_circuit(state, circuit);
    json amps = json::array();
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        const Amplitude a = state[i];
        if (std::abs(a) > 1e-15) {
            amps.push_back({index_to_string(i, m), a.real(), a.imag()});
        }
    }
    const MeasurementSample sample = measure_all(state, rng);
    Report rep;
    rep.n = m;
    rep.aux_gates = circuit.size();
    rep.outcome = {{"amplitudes", std::move(amps)}, {"sample", sample.outcome}, {"probability", sample.probability}};
    rep.success = std::abs(state.norm_squared() - 1.0) < 1e-9;
    return {rep};
}

// ---------------------------------------------------------------------------------------------
// Rendering

std::string csv_cell(const json &v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

void render_rows(std::ostream &out, const std::vector<json> &rows, const std::string &format) {
    if (rows.empty()) {
        return;
    }
    std::vector<std::string> keys;
    for (const auto &[key, value] : rows.front().items()) {
        if (key != "type" && key != "transcript" && key != "details") {
            keys.push_back(key);
        }
    }
    std::vector<std::vector<std::string>> cells{keys};
    for (const auto &row : rows) {
        std::vector<std::string> line;
        for (const auto &key : keys) {
            line.push_back(row.contains(key) ? csv_cell(row[key]) : "");
        }
        cells.push_back(std::move(line));
    }
    if (format == "csv") {
        for (const auto &line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                out << (i ? "," : "") << line[i];
            }
            out << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto &line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    for (const auto &line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << (i ? "  " : "") << line[i] << std::string(width[i] - line[i].size(), ' ');
        }
        out << "\n";
    }
}

void render(std::ostream &out, const std::vector<json> &trials, const json &aggregate, const std::string &format) {
    if (format == "json") {
        for (const auto &t : trials) {
            out << t.dump() << "\n";
        }
        out << aggregate.dump() << "\n";
        return;
    }
    render_rows(out, trials, format);
    out << "\n";
    render_rows(out, {aggregate}, format);
}

int execute(const Config &cfg, const TrialFn &fn, std::ostream &out) {
    std::vector<json> lines;
    std::uint64_t queries = 0, successes = 0, qubits = 0, bits = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
        Rng rng(seed);
        const auto start = std::chrono::steady_clock::now();
        std::vector<Report> reports = fn(cfg, rng, seed);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        for (auto &r : reports) {
            json j;
            j["type"] = "trial";
            j["trial"] = t;
            j["algorithm"] = cfg.command;
            j["n"] = r.n;
            j["seed"] = seed;
            j["queries"] = r.queries;
            j["aux_gate_count"] = r.aux_gates;
            j["outcome"] = r.outcome;
            j["success"] = r.success;
            j["wall_time"] = cfg.timing ? json(elapsed.count() / static_cast<double>(reports.size())) : json(nullptr);
            if (!r.details.is_null()) {
                j["details"] = r.details;
            }
            if (!r.transcript.is_null()) {
                qubits += r.transcript["qubits_total"].get<std::uint64_t>();
                bits += r.transcript["bits_total"].get<std::uint64_t>();
                j["transcript"] = r.transcript;
            }
            queries += r.queries;
            successes += r.success ? 1 : 0;
            lines.push_back(std::move(j));
        }
    }
    const double count = static_cast<double>(lines.size());
    json agg;
    agg["type"] = "aggregate";
    agg["algorithm"] = cfg.command;
    agg["seed"] = cfg.seed;
    agg["reports"] = lines.size();
    agg["mean_queries"] = count > 0 ? static_cast<double>(queries) / count : 0.0;
    agg["success_rate"] = count > 0 ? static_cast<double>(successes) / count : 0.0;
    agg["qubits_total"] = qubits;
    agg["bits_total"] = bits;
    render(out, lines, agg, cfg.format);
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum circuit and query-complexity workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "Master seed (default: $QCW_SEED or 0)");
    app.add_option("--eps", cfg.eps, "Error budget in (0, 0.5]")->check([](const std::string &s) {
        double v = 0;
        return (CLI::detail::lexical_cast(s, v) && v > 0.0 && v <= 0.5) ? std::string() : "eps must lie in (0, 0.5]";
    });
    app.add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_flag("--timing", cfg.timing, "Report wall-clock time per trial (output is then not reproducible)");

    std::map<std::string, TrialFn> handlers;
    auto sub = [&](const std::string &name, const std::string &desc, TrialFn fn) {
        handlers[name] = std::move(fn);
        return app.add_subcommand(name, desc);
    };
    sub("deutsch", "Deutsch's algorithm on all four 1-bit functions", run_deutsch);
    sub("simon", "Simon's algorithm on random XOR-mask instances", run_simon)->add_option("--n", cfg.n)->required();
    auto *grover = sub("grover", "Grover search with verification", run_grover);
    grover->add_option("--n", cfg.n);
    grover->add_option("--marked", cfg.marked, "Comma-separated marked bit strings");
    grover->add_option("--oracle", cfg.oracle_path, "Truth-table file");
    auto *sat = sub("sat", "Satisfiability through the compiled oracle", run_sat);
    sat->add_option("--circuit", cfg.circuit_path, "Circuit JSON file");
    sat->add_option("--encoding", cfg.encoding, "Hex circuit encoding");
    auto *or_and = sub("or-and", "OR of ANDs by nested search", run_or_and);
    or_and->add_option("--n1", cfg.n1)->required();
    or_and->add_option("--n2", cfg.n2)->required();
    or_and->add_option("--oracle", cfg.oracle_path, "Truth-table file over n1 + n2 bits");
    auto *parity = sub("parity", "PARITY by querying every point", run_parity);
    parity->add_option("--n", cfg.n);
    parity->add_option("--oracle", cfg.oracle_path, "Truth-table file");
    auto *order = sub("order", "Multiplicative order by iteration", run_order);
    order->add_option("--a", cfg.a)->required();
    order->add_option("--N", cfg.modulus)->required();
    sub("factor", "Factoring from an order oracle", run_factor)->add_option("--N", cfg.modulus)->required();
    auto *eq = sub("eq", "Fingerprint equality protocol", run_eq);
    eq->add_option("--n", cfg.n)->required();
    eq->add_option("--rounds", cfg.rounds, "Fingerprint rounds (default ceil(log2(1/eps)))");
    sub("intersect", "Intersection protocol", run_intersect)->add_option("--n", cfg.n)->required();
    sub("ip-check", "IP versus PARITY(f_x AND f_y)", run_ip_check)->add_option("--n", cfg.n)->required();
    auto *simulate = sub("simulate", "Run a gate-list circuit on a basis state", run_simulate);
    simulate->add_option("--circuit", cfg.circuit_path, "Gate-list file")->required();
    simulate->add_option("--input", cfg.input, "Input basis state bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (seed) {
        cfg.seed = *seed;
    } else if (const char *env = std::getenv("QCW_SEED")) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) {
                throw std::invalid_argument(env);
            }
        } catch (const std::exception &) {
            err << "error: QCW_SEED must be an unsigned integer\n";
            return kExitConfig;
        }
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return execute(cfg, handlers.at(cfg.command), out);
    } catch (const FileError &e) {
        err << "file error: " << e.what() << "\n";
        return kExitFile;
    } catch (const InputError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ResourceError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DecodeError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace qcw::cli
