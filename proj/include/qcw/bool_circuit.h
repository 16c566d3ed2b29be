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

#ifndef QCW_BOOL_CIRCUIT_H
#define QCW_BOOL_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/rng.h"

namespace qcw {

enum class NodeKind { And, Or, Not, Xor, Coin, Input };

std::string_view node_kind_name(NodeKind kind);

struct BoolNode {
    NodeKind kind;
    std::vector<std::size_t> args;  // predecessor node indices

    bool operator==(const BoolNode &) const = default;
};

/// Boolean circuit DAG. Nodes 0..n-1 are the inputs x_0..x_{n-1}; gates follow in
/// topological order, each referring only to earlier nodes. Binary gates take two distinct
/// predecessors.
class BoolCircuit {
   public:
    explicit BoolCircuit(int num_inputs);

    std::size_t add_gate(NodeKind kind, std::vector<std::size_t> args);
    std::size_t add_and(std::size_t a, std::size_t b) {
        return add_gate(NodeKind::And, {a, b});
    }
    std::size_t add_or(std::size_t a, std::size_t b) {
        return add_gate(NodeKind::Or, {a, b});
    }
    std::size_t add_xor(std::size_t a, std::size_t b) {
        return add_gate(NodeKind::Xor, {a, b});
    }
    std::size_t add_not(std::size_t a) {
        return add_gate(NodeKind::Not, {a});
    }
    std::size_t add_coin() {
        return add_gate(NodeKind::Coin, {});
    }
    void set_output(std::size_t node);

    int num_inputs() const {
        return num_inputs_;
    }
    std::size_t gate_count() const {
        return nodes_.size() - static_cast<std::size_t>(num_inputs_);
    }
    const std::vector<BoolNode> &nodes() const {
        return nodes_;
    }
    std::size_t output() const {
        return output_;
    }
    bool has_coin() const;

   private:
    int num_inputs_;
    std::vector<BoolNode> nodes_;
    std::size_t output_;
};

/// Values of every node on input x (x_0 is the most significant bit of `x`). COIN gates draw
/// from `rng`, which may be null only for deterministic circuits.
std::vector<std::uint8_t> evaluate_nodes(const BoolCircuit &c, std::uint64_t x, Rng *rng = nullptr);
int evaluate(const BoolCircuit &c, std::uint64_t x, Rng *rng = nullptr);
int evaluate(const BoolCircuit &c, std::string_view x, Rng *rng = nullptr);

/// Five gates over {AND, OR, NOT} computing x_0 XOR x_1: (NOT x_0 AND x_1) OR (x_0 AND NOT x_1).
BoolCircuit parity_five_gate();
/// A single XOR gate on two inputs.
BoolCircuit parity_single_xor();
/// Balanced tree of n-1 XOR gates over n >= 2 inputs.
BoolCircuit parity_xor_tree(int n);

/// Bit encoding e(C) over the N = n + m nodes: the N x N adjacency matrix (row i, column j set
/// when node i feeds node j), row-major, then a 3-bit label per node
/// (000 AND, 001 OR, 010 NOT, 011 XOR, 100 COIN, 101 INPUT). Inputs are the first n nodes
/// and the output is the last node, so neither needs extra bits.
struct CircuitEncoding {
    std::vector<std::uint8_t> bits;

    std::string to_hex() const;
    /// Accepts the hex form; trailing pad bits are resolved from the N^2 + 3N length law.
    static CircuitEncoding from_hex(std::string_view hex);
};

/// Gates after the output node cannot affect it and are dropped. Throws InputError when the
/// output is an input node other than the last one.
CircuitEncoding encode(const BoolCircuit &c);
/// Throws DecodeError with the offending bit offset on malformed input.
BoolCircuit decode(const CircuitEncoding &e);

struct SatResult {
    bool satisfiable;
    std::optional<std::uint64_t> witness;  // lexicographically least satisfying input
};

/// Exhaustive search over all 2^n inputs (n <= 24). COIN gates are rejected.
SatResult brute_force_sat(const BoolCircuit &c);

/// Random deterministic circuit with `gates` gates drawn from {AND, OR, NOT, XOR}; the last gate
/// is the output.
BoolCircuit random_bool_circuit(int num_inputs, int gates, Rng &rng);

/// JSON form: {"n": N, "nodes": [{"kind": "AND", "args": [i, j]}, ...], "output": k}. `nodes`
/// lists the gates only; argument indices below n refer to inputs, gate j has index n + j.
BoolCircuit bool_circuit_from_json(std::string_view json_text);
std::string bool_circuit_to_json(const BoolCircuit &c);

}  // namespace qcw

#endif
