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

#include "qcw/oracle.h"

#include <algorithm>
#include <sstream>

#include "qcw/bits.h"
#include "qcw/errors.h"
#include "qcw/number_theory.h"

namespace qcw {

namespace {

void check_widths(int in_bits, int out_bits) {
    if (in_bits < 1 || out_bits < 1 || out_bits > 63 || in_bits > 63) {
        throw InputError("oracle widths must be in 1..63 bits");
    }
}

std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

OracleFunction::OracleFunction(int in_bits, int out_bits, std::vector<std::uint64_t> table)
    : in_bits_(in_bits), out_bits_(out_bits), table_(std::move(table)) {
    check_widths(in_bits, out_bits);
    if (in_bits > kMaxTableBits) {
        throw ResourceError("dense truth tables are limited to " + std::to_string(kMaxTableBits) + " input bits");
    }
    if (table_.size() != (std::size_t{1} << in_bits)) {
        throw InputError("truth table must list all 2^m inputs");
    }
    for (auto v : table_) {
        if (v & ~low_mask(out_bits)) {
            throw InputError("truth table value wider than " + std::to_string(out_bits) + " bits");
        }
    }
}

OracleFunction OracleFunction::tabulate(int in_bits, int out_bits,
                                        const std::function<std::uint64_t(std::uint64_t)> &fn) {
    check_widths(in_bits, out_bits);
    if (in_bits > kMaxTableBits) {
        throw ResourceError("dense truth tables are limited to " + std::to_string(kMaxTableBits) + " input bits");
    }
    std::vector<std::uint64_t> table(std::size_t{1} << in_bits);
    for (std::size_t x = 0; x < table.size(); ++x) {
        table[x] = fn(x);
    }
    return OracleFunction(in_bits, out_bits, std::move(table));
}

OracleFunction OracleFunction::from_callable(int in_bits, int out_bits,
                                             std::function<std::uint64_t(std::uint64_t)> fn) {
    check_widths(in_bits, out_bits);
    OracleFunction f(1, 1, {0, 0});
    f.in_bits_ = in_bits;
    f.out_bits_ = out_bits;
    f.table_.clear();
    f.fn_ = std::move(fn);
    return f;
}

std::uint64_t OracleFunction::operator()(std::uint64_t x) const {
    if (in_bits_ < 64 && (x >> in_bits_) != 0) {
        throw InputError("oracle input wider than " + std::to_string(in_bits_) + " bits");
    }
    return fn_ ? (fn_(x) & low_mask(out_bits_)) : table_[x];
}

const std::vector<std::uint64_t> &OracleFunction::table() const {
    if (fn_) {
        throw InputError("oracle is callable-backed and has no table");
    }
    return table_;
}

bool OracleFunction::is_bijective() const {
    if (fn_ || in_bits_ != out_bits_) {
        return false;
    }
    std::vector<bool> seen(table_.size(), false);
    for (auto v : table_) {
        if (seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

ReversibleQuery::ReversibleQuery(OracleFunction f) : f_(std::move(f)) {
}

std::uint64_t ReversibleQuery::map_index(std::uint64_t combined) const {
    const int k = output_bits();
    const std::uint64_t x = combined >> k;
    return combined ^ f_(x);
}

std::vector<std::uint64_t> ReversibleQuery::as_permutation() const {
    const int width = input_bits() + output_bits();
    if (width > kMaxTableBits) {
        throw ResourceError("permutation tables are limited to " + std::to_string(kMaxTableBits) + " bits");
    }
    std::vector<std::uint64_t> table(std::size_t{1} << width);
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[i] = map_index(i);
    }
    return table;
}

std::shared_ptr<const BasisPermutation> ReversibleQuery::as_gate_permutation(std::string id) const {
    return std::make_shared<const BasisPermutation>(
        BasisPermutation{std::move(id), input_bits() + output_bits(), as_permutation()});
}

std::pair<std::uint64_t, std::uint64_t> classical_query(const ReversibleQuery &q, std::uint64_t x, std::uint64_t y,
                                                        QueryCounter &counter) {
    if ((x >> q.input_bits()) != 0 || (y >> q.output_bits()) != 0) {
        throw InputError("query arguments wider than the oracle registers");
    }
    ++counter.classical;
    return q.map(x, y);
}

void quantum_query(StateVector &state, const ReversibleQuery &q, const QueryRegisters &regs, QueryCounter &counter) {
    if (static_cast<int>(regs.input.size()) != q.input_bits() ||
        static_cast<int>(regs.output.size()) != q.output_bits()) {
        throw InputError("query registers must have " + std::to_string(q.input_bits()) + " input and " +
                         std::to_string(q.output_bits()) + " output qubits");
    }
    std::vector<int> all = regs.input;
    all.insert(all.end(), regs.output.begin(), regs.output.end());
    all.insert(all.end(), regs.workspace.begin(), regs.workspace.end());
    for (int w : all) {
        if (w < 0 || w >= state.num_qubits()) {
            throw InputError("query register qubit " + std::to_string(w) + " out of range");
        }
    }
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("query registers overlap");
    }
    std::vector<std::uint64_t> in_masks, out_masks;
    for (int w : regs.input) {
        in_masks.push_back(state.qubit_mask(w));
    }
    for (int w : regs.output) {
        out_masks.push_back(state.qubit_mask(w));
    }
    const auto &f = q.function();
    const int k = q.output_bits();
    state.apply_permutation([&](std::uint64_t idx) {
        std::uint64_t x = 0;
        for (auto m : in_masks) {
            x = (x << 1) | ((idx & m) ? 1u : 0u);
        }
        const std::uint64_t fx = f(x);
        std::uint64_t out = idx;
        for (int j = 0; j < k; ++j) {
            if ((fx >> (k - 1 - j)) & 1u) {
                out ^= out_masks[j];
            }
        }
        return out;
    });
    ++counter.quantum;
}

std::uint64_t LocalQueryAccess::query(std::uint64_t x) {
    return classical_query(q_, x, 0, counter_).second;
}

void LocalQueryAccess::query(StateVector &state, const QueryRegisters &regs) {
    quantum_query(state, q_, regs, counter_);
}

NegatedAccess::NegatedAccess(QueryAccess &inner) : inner_(inner) {
    if (inner.output_bits() != 1) {
        throw InputError("negation needs a boolean oracle");
    }
}

void NegatedAccess::query(StateVector &state, const QueryRegisters &regs) {
    inner_.query(state, regs);
    state.apply_one_qubit(gate_matrix(GateKind::X), regs.output.at(0));
}

namespace {

/// Emits gates XOR-ing node's value into `target`.
void emit_node(QuantumCircuit &out, const BoolNode &node, const std::vector<int> &wire, int target) {
    switch (node.kind) {
        case NodeKind::And:
            out.add(Gate::toffoli(wire[node.args[0]], wire[node.args[1]], target));
            break;
        case NodeKind::Or:
            // p OR q = p XOR q XOR (p AND q)
            out.add(Gate::cnot(wire[node.args[0]], target));
            out.add(Gate::cnot(wire[node.args[1]], target));
            out.add(Gate::toffoli(wire[node.args[0]], wire[node.args[1]], target));
            break;
        case NodeKind::Xor:
            out.add(Gate::cnot(wire[node.args[0]], target));
            out.add(Gate::cnot(wire[node.args[1]], target));
            break;
        case NodeKind::Not:
            out.add(Gate::cnot(wire[node.args[0]], target));
            out.add(Gate::x(target));
            break;
        case NodeKind::Coin:
        case NodeKind::Input:
            throw CompileError("node kind has no reversible form");
    }
}

}  // namespace

CompiledOracle compile_bool_circuit(const BoolCircuit &c, const std::vector<std::size_t> &outputs) {
    if (c.has_coin()) {
        throw CompileError("cannot compile a circuit with COIN gates into a reversible oracle");
    }
    if (outputs.empty()) {
        throw CompileError("compiled oracle needs at least one output");
    }
    const auto &nodes = c.nodes();
    const std::size_t n = static_cast<std::size_t>(c.num_inputs());
    for (auto o : outputs) {
        if (o >= nodes.size()) {
            throw CompileError("output node out of range");
        }
    }
    if (n == 0) {
        throw CompileError("compiled oracle needs at least one input");
    }

    std::vector<bool> needed(nodes.size(), false);
    for (auto o : outputs) {
        needed[o] = true;
    }
    for (std::size_t i = nodes.size(); i-- > 0;) {
        if (needed[i]) {
            for (auto a : nodes[i].args) {
                needed[a] = true;
            }
        }
    }
    std::vector<int> consumers(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (needed[i]) {
            for (auto a : nodes[i].args) {
                ++consumers[a];
            }
        }
    }
    std::vector<int> times_listed(nodes.size(), 0);
    for (auto o : outputs) {
        ++times_listed[o];
    }
    // Output gates nothing else reads are computed directly into their output wire.
    std::vector<int> direct_slot(nodes.size(), -1);
    for (std::size_t j = 0; j < outputs.size(); ++j) {
        const auto o = outputs[j];
        if (o >= n && consumers[o] == 0 && times_listed[o] == 1) {
            direct_slot[o] = static_cast<int>(j);
        }
    }

    const int k = static_cast<int>(outputs.size());
    std::vector<int> wire(nodes.size(), -1);
    for (std::size_t i = 0; i < n; ++i) {
        wire[i] = static_cast<int>(i);
    }
    int ancillas = 0;
    for (std::size_t i = n; i < nodes.size(); ++i) {
        if (needed[i] && direct_slot[i] < 0) {
            wire[i] = static_cast<int>(n) + k + ancillas++;
        }
    }

    const int width = static_cast<int>(n) + k + ancillas;
    QuantumCircuit compute(width);
    for (std::size_t i = n; i < nodes.size(); ++i) {
        if (needed[i] && direct_slot[i] < 0) {
            emit_node(compute, nodes[i], wire, wire[i]);
        }
    }
    QuantumCircuit circuit(width);
    circuit.append(compute);
    for (std::size_t j = 0; j < outputs.size(); ++j) {
        const auto o = outputs[j];
        const int target = static_cast<int>(n) + static_cast<int>(j);
        if (direct_slot[o] == static_cast<int>(j)) {
            emit_node(circuit, nodes[o], wire, target);
        } else {
            circuit.add(Gate::cnot(wire[o], target));
        }
    }
    circuit.append(compute.adjoint());
    return {std::move(circuit), static_cast<int>(n), k, ancillas};
}

CompiledOracle compile_bool_circuit(const BoolCircuit &c) {
    return compile_bool_circuit(c, {c.output()});
}

OracleFunction tabulate_compiled(const CompiledOracle &oracle) {
    const int m = oracle.input_bits;
    const int k = oracle.output_bits;
    const int a = oracle.ancilla_bits;
    if (m > kMaxTableBits) {
        throw ResourceError("compiled oracle has too many inputs to tabulate");
    }
    if (oracle.width() > 63) {
        throw ResourceError("compiled oracle is wider than 63 qubits");
    }
    return OracleFunction::tabulate(m, k, [&](std::uint64_t x) {
        const std::uint64_t in = x << (k + a);
        const std::uint64_t out = permute_basis(oracle.circuit, in);
        if ((out >> (k + a)) != x) {
            throw CompileError("compiled oracle modified its input register");
        }
        if ((out & low_mask(a)) != 0) {
            throw CompileError("compiled oracle left an ancilla dirty on input " + index_to_string(x, m));
        }
        return (out >> a) & low_mask(k);
    });
}

OracleFunction modexp_oracle(std::uint64_t a, std::uint64_t modulus, int n) {
    if (n < 1 || 2 * n > kMaxTableBits) {
        throw ResourceError("modular exponentiation oracle limited to n <= " + std::to_string(kMaxTableBits / 2));
    }
    if (modulus < 2 || modulus >= (std::uint64_t{1} << n)) {
        throw InputError("modulus must satisfy 2 <= N < 2^n");
    }
    if (gcd(a % modulus, modulus) != 1) {
        throw InputError("gcd(a, N) must be 1");
    }
    const std::uint64_t ymask = low_mask(n);
    return OracleFunction::tabulate(2 * n, 2 * n, [=](std::uint64_t xy) {
        const std::uint64_t x = xy >> n;
        const std::uint64_t y = xy & ymask;
        if (y >= modulus) {
            return xy;
        }
        return (x << n) | mul_mod(pow_mod(a, x, modulus), y, modulus);
    });
}

OracleFunction parse_truth_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int m = -1, k = -1;
    std::vector<std::uint64_t> table;
    std::vector<bool> seen;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string x, arrow, fx, extra;
        if (!(ls >> x)) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            return InputError("truth table line " + std::to_string(line_no) + ": " + why);
        };
        if (!(ls >> arrow >> fx) || arrow != "->" || (ls >> extra)) {
            throw fail("expected `x -> f(x)`");
        }
        if (m < 0) {
            m = static_cast<int>(x.size());
            k = static_cast<int>(fx.size());
            if (m < 1 || m > kMaxTableBits || k < 1 || k > 63) {
                throw fail("unsupported widths");
            }
            table.assign(std::size_t{1} << m, 0);
            seen.assign(table.size(), false);
        }
        if (static_cast<int>(x.size()) != m || static_cast<int>(fx.size()) != k) {
            throw fail("inconsistent bit widths");
        }
        std::uint64_t xi, fi;
        try {
            xi = string_to_index(x);
            fi = string_to_index(fx);
        } catch (const InputError &e) {
            throw fail(e.what());
        }
        if (seen[xi]) {
            throw fail("input " + x + " listed twice");
        }
        seen[xi] = true;
        table[xi] = fi;
    }
    if (m < 0) {
        throw InputError("truth table is empty");
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            throw InputError("truth table is missing input " + index_to_string(i, m));
        }
    }
    return OracleFunction(m, k, std::move(table));
}

std::string format_truth_table(const OracleFunction &f) {
    std::ostringstream out;
    const auto &t = f.table();
    for (std::size_t x = 0; x < t.size(); ++x) {
        out << index_to_string(x, f.in_bits()) << " -> " << index_to_string(t[x], f.out_bits()) << "\n";
    }
    return out.str();
}

}  // namespace qcw
