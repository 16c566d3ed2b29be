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


#include "qcw/algorithms.h"
#include "qcw/errors.h"
#include "qcw/gates.h"

namespace qcw {

namespace {

constexpr int kMaxGateLevelQubits = 20;

Gate remap(const Gate &g, const std::vector<int> &wire) {
    const auto &w = g.wires();
    switch (g.kind()) {
        case GateKind::CNOT:
            return Gate::cnot(wire[w[0]], wire[w[1]]);
        case GateKind::CV:
            return Gate::cv(wire[w[0]], wire[w[1]]);
        case GateKind::CVdg:
            return Gate::cvdg(wire[w[0]], wire[w[1]]);
        case GateKind::Toffoli:
            return Gate::toffoli(wire[w[0]], wire[w[1]], wire[w[2]]);
        case GateKind::ControlledU:
            return Gate::controlled_u(*g.controlled_matrix(), wire[w[0]], wire[w[1]]);
        case GateKind::OracleQuery: {
            std::vector<int> mapped;
            for (int q : w) {
                mapped.push_back(wire[q]);
            }
            return Gate::oracle(g.permutation(), std::move(mapped));
        }
        default:
            return Gate::one_qubit(g.kind(), wire[w[0]]);
    }
}

}  // namespace

CompiledOracleAccess::CompiledOracleAccess(CompiledOracle oracle, QueryCounter &counter, bool gate_level)
    : oracle_(std::move(oracle)),
      table_(tabulate_compiled(oracle_)),
      query_(table_),
      counter_(counter),
      gate_level_(gate_level) {
}

std::uint64_t CompiledOracleAccess::query(std::uint64_t x) {
    return classical_query(query_, x, 0, counter_).second;
}

void CompiledOracleAccess::query(StateVector &state, const QueryRegisters &regs) {
    if (!gate_level_) {
        quantum_query(state, query_, regs, counter_);
        return;
    }
    if (static_cast<int>(regs.input.size()) != oracle_.input_bits ||
        static_cast<int>(regs.output.size()) != oracle_.output_bits ||
        static_cast<int>(regs.workspace.size()) < oracle_.ancilla_bits) {
        throw InputError("query registers do not match the compiled oracle");
    }
    std::vector<int> wire(oracle_.width());
    for (int i = 0; i < oracle_.input_bits; ++i) {
        wire[oracle_.input_qubit(i)] = regs.input[i];
    }
    for (int j = 0; j < oracle_.output_bits; ++j) {
        wire[oracle_.output_qubit(j)] = regs.output[j];
    }
    for (int a = 0; a < oracle_.ancilla_bits; ++a) {
        wire[oracle_.ancilla_qubit(a)] = regs.workspace[a];
    }
    for (const Gate &g : oracle_.circuit.gates()) {
        apply_gate(state, remap(g, wire));
    }
    ++counter_.quantum;
}

QuantumSatResult quantum_sat(const CircuitEncoding &encoding, double eps, Rng &rng) {
    const BoolCircuit c = decode(encoding);
    if (c.has_coin()) {
        throw InputError("satisfiability needs a deterministic circuit");
    }
    const int n = c.num_inputs();
    if (n > kMaxSatQuantumInputs) {
        throw ResourceError("quantum satisfiability supports n <= " + std::to_string(kMaxSatQuantumInputs));
    }
    CompiledOracle compiled = compile_bool_circuit(c);
    const bool gate_level = compiled.width() <= kMaxGateLevelQubits;

    QueryCounter counter;
    CompiledOracleAccess access(std::move(compiled), counter, gate_level);
    const GroverRun run = grover_search(access, eps, rng);

    QuantumSatResult r;
    r.satisfiable = run.success;
    r.witness = run.witness;
    r.queries = run.queries;
    r.gates_per_query = access.compiled().circuit.size();
    r.aux_gates = run.aux_gates;
    r.total_gates = r.queries * r.gates_per_query + r.aux_gates;
    r.ancillas = access.compiled().ancilla_bits;
    r.gate_level = gate_level;
    return r;
}

ParityResult parity_brute(QueryAccess &oracle) {
    if (oracle.output_bits() != 1) {
        throw InputError("parity needs a boolean oracle");
    }
    const int n = oracle.input_bits();
    if (n < 0 || n > kMaxGroverQubits) {
        throw ResourceError("parity by enumeration supports n <= " + std::to_string(kMaxGroverQubits));
    }
    const std::uint64_t before = oracle.counter().count();
    std::uint64_t acc = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        acc ^= oracle.query(x);
    }
    return {static_cast<int>(acc & 1), oracle.counter().count() - before};
}

}  // namespace qcw
