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


#include <cmath>
#include <numbers>

#include "qcw/algorithms.h"
#include "qcw/errors.h"
#include "qcw/gates.h"

namespace qcw {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InputError("eps must lie in (0, 1)");
    }
}

void check_search_oracle(const QueryAccess &oracle) {
    if (oracle.output_bits() != 1) {
        throw InputError("search needs a boolean oracle");
    }
    const int n = oracle.input_bits();
    if (n < 1 || n > kMaxGroverQubits) {
        throw ResourceError("search supports 1 <= n <= " + std::to_string(kMaxGroverQubits));
    }
    if (n + 1 + oracle.workspace_qubits() > kMaxDenseQubits) {
        throw ResourceError("search register exceeds the dense simulator");
    }
}

}  // namespace

int grover_iterations(int n, std::uint64_t solutions) {
    if (solutions == 0) {
        throw InputError("iteration count needs at least one solution");
    }
    const double ratio = std::ldexp(1.0, n) / static_cast<double>(solutions);
    return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

int grover_repetitions(double eps) {
    check_eps(eps);
    return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / eps) - 1e-12)));
}

std::uint64_t grover_query_budget(int n, double eps) {
    std::uint64_t sweep = 0;
    for (int j = n; j >= 0; --j) {
        sweep += static_cast<std::uint64_t>(grover_iterations(n, std::uint64_t{1} << j)) + 1;
    }
    return sweep * static_cast<std::uint64_t>(grover_repetitions(eps));
}

StateVector grover_state(QueryAccess &oracle, int iterations, std::uint64_t *aux_gates) {
    check_search_oracle(oracle);
    if (iterations < 0) {
        throw InputError("iteration count must be non-negative");
    }
    const int n = oracle.input_bits();
    const int work = oracle.workspace_qubits();
    const int low = 1 + work;  // qubits below the input register
    StateVector state = StateVector::basis(n + low, std::uint64_t{1} << work);
    const UnitaryMatrix h = gate_matrix(GateKind::H);
    QueryRegisters regs{{}, {n}, {}};
    for (int i = 0; i < n; ++i) {
        regs.input.push_back(i);
    }
    for (int w = 0; w < work; ++w) {
        regs.workspace.push_back(n + 1 + w);
    }

    // Target in (|0> - |1>)/sqrt2 turns each query into a phase oracle.
    state.apply_one_qubit(h, n);
    for (int i = 0; i < n; ++i) {
        state.apply_one_qubit(h, i);
    }
    std::uint64_t aux = static_cast<std::uint64_t>(n) + 2;
    for (int it = 0; it < iterations; ++it) {
        oracle.query(state, regs);
        for (int i = 0; i < n; ++i) {
            state.apply_one_qubit(h, i);
        }
        state.apply_phase_flip([low](std::uint64_t idx) { return (idx >> low) != 0; });
        for (int i = 0; i < n; ++i) {
            state.apply_one_qubit(h, i);
        }
        aux += 2 * static_cast<std::uint64_t>(n) + 1;
    }
    if (aux_gates) {
        *aux_gates += aux;
    }
    return state;
}

GroverRun grover_fixed(QueryAccess &oracle, int iterations, Rng &rng) {
    const std::uint64_t before = oracle.counter().count();
    GroverRun run;
    run.n = oracle.input_bits();
    StateVector state = grover_state(oracle, iterations, &run.aux_gates);
    const int low = 1 + oracle.workspace_qubits();
    const std::uint64_t x = measure_all(std::move(state), rng).index >> low;
    run.measurements = 1;
    if (oracle.query(x) == 1) {
        run.witness = x;
        run.success = true;
    }
    run.queries = oracle.counter().count() - before;
    return run;
}

GroverRun grover_search(QueryAccess &oracle, double eps, Rng &rng) {
    check_search_oracle(oracle);
    const int n = oracle.input_bits();
    const int sweeps = grover_repetitions(eps);
    const std::uint64_t before = oracle.counter().count();
    GroverRun total;
    total.n = n;
    for (int r = 0; r < sweeps && !total.success; ++r) {
        for (int j = n; j >= 0 && !total.success; --j) {
            const GroverRun attempt = grover_fixed(oracle, grover_iterations(n, std::uint64_t{1} << j), rng);
            total.aux_gates += attempt.aux_gates;
            total.measurements += attempt.measurements;
            total.witness = attempt.witness;
            total.success = attempt.success;
        }
    }
    total.queries = oracle.counter().count() - before;
    return total;
}

DecisionResult grover_or(QueryAccess &oracle, double eps, Rng &rng) {
    const GroverRun run = grover_search(oracle, eps, rng);
    return {run.success ? 1 : 0, run.queries, run.witness};
}

DecisionResult grover_and(QueryAccess &oracle, double eps, Rng &rng) {
    NegatedAccess negated(oracle);
    DecisionResult r = grover_or(negated, eps, rng);
    r.value ^= 1;
    return r;
}

NestedResult nested_or_and(const OracleFunction &f, int n1, int n2, double eps, Rng &rng) {
    check_eps(eps);
    if (n1 < 1 || n2 < 1 || f.in_bits() != n1 + n2 || f.out_bits() != 1) {
        throw InputError("nested OR-AND needs a boolean function of n1 + n2 bits with n1, n2 >= 1");
    }
    const double eps_outer = eps / 2.0;
    const std::uint64_t outer_budget = grover_query_budget(n1, eps_outer);
    const double eps_inner = eps / (2.0 * static_cast<double>(outer_budget));

    // Each outer query would run one amplified inner AND coherently; here every g(x1) is
    // obtained from an independent inner run and the outer search queries the table.
    const std::uint64_t rows = std::uint64_t{1} << n1;
    const std::uint64_t cols = std::uint64_t{1} << n2;
    std::vector<std::uint64_t> g(rows);
    for (std::uint64_t x1 = 0; x1 < rows; ++x1) {
        std::vector<std::uint64_t> slice(cols);
        for (std::uint64_t x2 = 0; x2 < cols; ++x2) {
            slice[x2] = f((x1 << n2) | x2);
        }
        QueryCounter inner_counter;
        LocalQueryAccess inner(OracleFunction(n2, 1, std::move(slice)), inner_counter);
        g[x1] = static_cast<std::uint64_t>(grover_and(inner, eps_inner, rng).value);
    }

    QueryCounter outer_counter;
    LocalQueryAccess outer(OracleFunction(n1, 1, std::move(g)), outer_counter);
    const DecisionResult top = grover_or(outer, eps_outer, rng);

    NestedResult result;
    result.value = top.value;
    result.outer_queries = top.queries;
    result.inner_cost = grover_query_budget(n2, eps_inner);
    result.queries = result.outer_queries * result.inner_cost;
    result.x1 = top.witness;
    return result;
}

}  // namespace qcw
