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

#ifndef QCW_ORACLE_H
#define QCW_ORACLE_H

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcw/bool_circuit.h"
#include "qcw/gates.h"
#include "qcw/state_vector.h"

namespace qcw {

inline constexpr int kMaxTableBits = 24;

/// f : {0,1}^m -> {0,1}^k, either tabulated (m <= 24) or backed by a callable.
class OracleFunction {
   public:
    OracleFunction(int in_bits, int out_bits, std::vector<std::uint64_t> table);
    static OracleFunction tabulate(int in_bits, int out_bits, const std::function<std::uint64_t(std::uint64_t)> &fn);
    static OracleFunction from_callable(int in_bits, int out_bits, std::function<std::uint64_t(std::uint64_t)> fn);

    int in_bits() const {
        return in_bits_;
    }
    int out_bits() const {
        return out_bits_;
    }
    std::uint64_t operator()(std::uint64_t x) const;
    bool is_tabulated() const {
        return !fn_;
    }
    /// Throws InputError for callable-backed functions.
    const std::vector<std::uint64_t> &table() const;
    /// Tabulated, in_bits == out_bits, and injective.
    bool is_bijective() const;

   private:
    int in_bits_;
    int out_bits_;
    std::vector<std::uint64_t> table_;
    std::function<std::uint64_t(std::uint64_t)> fn_;
};

/// f~(x, y) = (x, y XOR f(x)) on {0,1}^(m+k). The combined index is x << k | y.
class ReversibleQuery {
   public:
    explicit ReversibleQuery(OracleFunction f);

    const OracleFunction &function() const {
        return f_;
    }
    int input_bits() const {
        return f_.in_bits();
    }
    int output_bits() const {
        return f_.out_bits();
    }
    std::pair<std::uint64_t, std::uint64_t> map(std::uint64_t x, std::uint64_t y) const {
        return {x, y ^ f_(x)};
    }
    std::uint64_t map_index(std::uint64_t combined) const;
    /// Full permutation table over m + k bits (at most 24).
    std::vector<std::uint64_t> as_permutation() const;
    /// Gate form acting on `input_bits() + output_bits()` wires (inputs first).
    std::shared_ptr<const BasisPermutation> as_gate_permutation(std::string id) const;

   private:
    OracleFunction f_;
};

/// Number of oracle invocations, split by path. Only ever increases within a run.
struct QueryCounter {
    std::uint64_t quantum = 0;
    std::uint64_t classical = 0;

    std::uint64_t count() const {
        return quantum + classical;
    }
};

struct QueryRegisters {
    std::vector<int> input;
    std::vector<int> output;
    std::vector<int> workspace;  // extra qubits the query implementation may borrow; start and end at |0>
};

/// Classical reversible query; counter += 1.
std::pair<std::uint64_t, std::uint64_t> classical_query(const ReversibleQuery &q, std::uint64_t x, std::uint64_t y,
                                                        QueryCounter &counter);

/// |x>|y> -> |x>|y XOR f(x)> on the given registers; counter += 1. Registers must be disjoint and
/// sized m and k.
void quantum_query(StateVector &state, const ReversibleQuery &q, const QueryRegisters &regs, QueryCounter &counter);

/// The counted interface algorithms use to reach their oracle. Implementations decide how a
/// query is realized (local table, compiled circuit, two-party protocol).
class QueryAccess {
   public:
    virtual ~QueryAccess() = default;

    virtual int input_bits() const = 0;
    virtual int output_bits() const = 0;
    /// Workspace qubits the caller must allocate (in |0>) for each quantum query.
    virtual int workspace_qubits() const {
        return 0;
    }
    /// Classical query: returns f(x).
    virtual std::uint64_t query(std::uint64_t x) = 0;
    virtual void query(StateVector &state, const QueryRegisters &regs) = 0;
    virtual const QueryCounter &counter() const = 0;
    /// Uncounted table access, for test scaffolding only. Implementations without a local table
    /// throw ContractViolation.
    virtual std::uint64_t peek(std::uint64_t x) const = 0;
};

class LocalQueryAccess : public QueryAccess {
   public:
    LocalQueryAccess(ReversibleQuery q, QueryCounter &counter) : q_(std::move(q)), counter_(counter) {
    }
    explicit LocalQueryAccess(OracleFunction f, QueryCounter &counter) : LocalQueryAccess(ReversibleQuery(std::move(f)), counter) {
    }

    int input_bits() const override {
        return q_.input_bits();
    }
    int output_bits() const override {
        return q_.output_bits();
    }
    std::uint64_t query(std::uint64_t x) override;
    void query(StateVector &state, const QueryRegisters &regs) override;
    const QueryCounter &counter() const override {
        return counter_;
    }
    std::uint64_t peek(std::uint64_t x) const override {
        return q_.function()(x);
    }

   private:
    ReversibleQuery q_;
    QueryCounter &counter_;
};

/// Query access to NOT f for a boolean f, one underlying query per query.
class NegatedAccess : public QueryAccess {
   public:
    explicit NegatedAccess(QueryAccess &inner);

    int input_bits() const override {
        return inner_.input_bits();
    }
    int output_bits() const override {
        return 1;
    }
    int workspace_qubits() const override {
        return inner_.workspace_qubits();
    }
    std::uint64_t query(std::uint64_t x) override {
        return inner_.query(x) ^ 1u;
    }
    void query(StateVector &state, const QueryRegisters &regs) override;
    const QueryCounter &counter() const override {
        return inner_.counter();
    }
    std::uint64_t peek(std::uint64_t x) const override {
        return inner_.peek(x) ^ 1u;
    }

   private:
    QueryAccess &inner_;
};

/// Reversible realization of a deterministic boolean circuit. Wire layout: inputs
/// [0, m), outputs [m, m + k), ancillas [m + k, m + k + a).
struct CompiledOracle {
    QuantumCircuit circuit;
    int input_bits;
    int output_bits;
    int ancilla_bits;

    int input_qubit(int i) const {
        return i;
    }
    int output_qubit(int j) const {
        return input_bits + j;
    }
    int ancilla_qubit(int a) const {
        return input_bits + output_bits + a;
    }
    int width() const {
        return input_bits + output_bits + ancilla_bits;
    }
};

/// Compute / copy / uncompute compilation into X, CNOT and Toffoli. Each needed gate gets an
/// ancilla, except an output gate that nothing else consumes, which is computed straight into its
/// output wire. Throws CompileError if the circuit has COIN gates.
CompiledOracle compile_bool_circuit(const BoolCircuit &c, const std::vector<std::size_t> &outputs);
CompiledOracle compile_bool_circuit(const BoolCircuit &c);

/// Tabulates f from a compiled oracle by running every basis input |x>|0>|0^a> through it on
/// bits. Throws CompileError if any ancilla is left dirty or the input register changes.
OracleFunction tabulate_compiled(const CompiledOracle &oracle);

/// f_{a,N}(x, y) = (x, a^x y mod N) for y < N, identity for N <= y < 2^n, on 2n input bits.
OracleFunction modexp_oracle(std::uint64_t a, std::uint64_t modulus, int n);

/// Truth-table text: one `x -> f(x)` line per input, binary, `#` comments.
OracleFunction parse_truth_table(std::string_view text);
std::string format_truth_table(const OracleFunction &f);

}  // namespace qcw

#endif
