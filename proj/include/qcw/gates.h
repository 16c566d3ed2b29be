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

#ifndef QCW_GATES_H
#define QCW_GATES_H

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/state_vector.h"

namespace qcw {

enum class GateKind {
    H,
    V,
    Vdg,
    W,
    Wdg,
    X,
    CNOT,
    CV,    // controlled-V
    CVdg,  // controlled-V^dagger
    ControlledU,
    Toffoli,
    OracleQuery,
};

std::string_view gate_name(GateKind kind);

/// A basis-state permutation over a gate's wires (oracle-query gates). `table[v]` is the
/// image of the wire value v, read big-endian over the wires in order.
struct BasisPermutation {
    std::string id;
    int arity;
    std::vector<std::uint64_t> table;
};

/// One gate application. Wires list controls before targets.
class Gate {
   public:
    static Gate one_qubit(GateKind kind, int q);
    static Gate h(int q) {
        return one_qubit(GateKind::H, q);
    }
    static Gate x(int q) {
        return one_qubit(GateKind::X, q);
    }
    static Gate w(int q) {
        return one_qubit(GateKind::W, q);
    }
    static Gate cnot(int control, int target);
    static Gate cv(int control, int target);
    static Gate cvdg(int control, int target);
    static Gate controlled_u(UnitaryMatrix u, int control, int target);
    static Gate toffoli(int c0, int c1, int target);
    static Gate oracle(std::shared_ptr<const BasisPermutation> perm, std::vector<int> wires);

    GateKind kind() const {
        return kind_;
    }
    const std::vector<int> &wires() const {
        return wires_;
    }
    /// The target 2x2 matrix of ControlledU gates.
    const std::optional<UnitaryMatrix> &controlled_matrix() const {
        return u_;
    }
    const std::shared_ptr<const BasisPermutation> &permutation() const {
        return perm_;
    }

    Gate adjoint() const;
    bool operator==(const Gate &other) const;

   private:
    Gate(GateKind kind, std::vector<int> wires);

    GateKind kind_;
    std::vector<int> wires_;
    std::optional<UnitaryMatrix> u_;
    std::shared_ptr<const BasisPermutation> perm_;
};

/// Ordered gate list; the first gate is the leftmost in a circuit diagram.
class QuantumCircuit {
   public:
    explicit QuantumCircuit(int num_qubits);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    /// Throws InputError if a wire is out of range.
    QuantumCircuit &add(Gate gate);
    QuantumCircuit &append(const QuantumCircuit &other);

    QuantumCircuit adjoint() const;
    bool operator==(const QuantumCircuit &other) const = default;

   private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Exact matrix of a fixed gate: 2x2 for one-qubit kinds, 4x4 for CNOT/CV/CVdg, 8x8 for Toffoli.
/// ControlledU and OracleQuery have no fixed matrix and raise InputError.
UnitaryMatrix gate_matrix(GateKind kind);

void apply_gate(StateVector &state, const Gate &gate);
void apply_gate(SparseState &state, const Gate &gate);
void apply_circuit(StateVector &state, const QuantumCircuit &circuit);
void apply_circuit(SparseState &state, const QuantumCircuit &circuit);

/// Columns are the circuit's images of the basis states. Capped at 12 qubits.
UnitaryMatrix circuit_unitary(const QuantumCircuit &circuit);

/// Image of a basis state under a circuit of X / CNOT / Toffoli / oracle gates, computed on
/// bits. Throws InputError on any gate that does not permute basis states.
std::uint64_t permute_basis(const QuantumCircuit &circuit, std::uint64_t basis_index);

/// Toffoli on wires (0 = top control, 1 = middle control, 2 = target) from H and
/// controlled-V / controlled-V^dagger; the middle-wire CNOTs run top -> middle.
QuantumCircuit toffoli_decomposition();

/// Controlled-V on wires (0 = control, 1 = target) from W, W^dagger and CNOT.
QuantumCircuit controlled_v_decomposition();

/// Exact rewrite into {H, W, CNOT}. Accepts H, V, V^dagger, W, W^dagger, X, CNOT, CV,
/// CV^dagger and Toffoli; throws RewriteError naming any other gate.
QuantumCircuit rewrite_to_basis(const QuantumCircuit &circuit);

/// Gate-list text: `qubits N` header, then one `GATE q0 [q1 [q2]]` per line, `#` comments.
QuantumCircuit parse_circuit_text(std::string_view text);
std::string format_circuit_text(const QuantumCircuit &circuit);

}  // namespace qcw

#endif
