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

#include "qcw/gates.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcw/errors.h"

namespace qcw {

namespace {

constexpr int kMaxUnitaryQubits = 12;

const Amplitude kI{0.0, 1.0};

Amplitude eighth_root(int k) {
    return std::polar(1.0, k * std::numbers::pi / 4);
}

int arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::V:
        case GateKind::Vdg:
        case GateKind::W:
        case GateKind::Wdg:
        case GateKind::X:
            return 1;
        case GateKind::CNOT:
        case GateKind::CV:
        case GateKind::CVdg:
        case GateKind::ControlledU:
            return 2;
        case GateKind::Toffoli:
            return 3;
        case GateKind::OracleQuery:
            return -1;
    }
    return -1;
}

const UnitaryMatrix &one_qubit_matrix(GateKind kind) {
    static const double r = 1 / std::sqrt(2.0);
    static const UnitaryMatrix h{{r, r}, {r, -r}};
    static const UnitaryMatrix v{{1, 0}, {0, kI}};
    static const UnitaryMatrix vdg{{1, 0}, {0, -kI}};
    static const UnitaryMatrix w{{1, 0}, {0, eighth_root(1)}};
    static const UnitaryMatrix wdg{{1, 0}, {0, eighth_root(-1)}};
    static const UnitaryMatrix x{{0, 1}, {1, 0}};
    switch (kind) {
        case GateKind::H:
            return h;
        case GateKind::V:
        case GateKind::CV:
            return v;
        case GateKind::Vdg:
        case GateKind::CVdg:
            return vdg;
        case GateKind::W:
            return w;
        case GateKind::Wdg:
            return wdg;
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Toffoli:
            return x;
        default:
            throw InputError("gate " + std::string(gate_name(kind)) + " has no fixed matrix");
    }
}

template <class State>
void apply_gate_impl(State &state, const Gate &gate) {
    const auto &w = gate.wires();
    switch (gate.kind()) {
        case GateKind::H:
        case GateKind::V:
        case GateKind::Vdg:
        case GateKind::W:
        case GateKind::Wdg:
        case GateKind::X:
            state.apply_one_qubit(one_qubit_matrix(gate.kind()), w[0]);
            return;
        case GateKind::CNOT:
        case GateKind::CV:
        case GateKind::CVdg:
            state.apply_controlled(one_qubit_matrix(gate.kind()), w[0], w[1]);
            return;
        case GateKind::ControlledU:
            state.apply_controlled(*gate.controlled_matrix(), w[0], w[1]);
            return;
        case GateKind::Toffoli: {
            const int controls[] = {w[0], w[1]};
            state.apply_multi_controlled(one_qubit_matrix(GateKind::X), controls, w[2]);
            return;
        }
        case GateKind::OracleQuery: {
            const int m = state.num_qubits();
            const auto &perm = *gate.permutation();
            state.apply_permutation([&](std::uint64_t idx) {
                std::uint64_t v = 0;
                for (int q : w) {
                    v = (v << 1) | ((idx >> (m - 1 - q)) & 1u);
                }
                const std::uint64_t image = perm.table[v];
                std::uint64_t out = idx;
                const int a = static_cast<int>(w.size());
                for (int i = 0; i < a; ++i) {
                    const std::uint64_t bit = std::uint64_t{1} << (m - 1 - w[i]);
                    out = ((image >> (a - 1 - i)) & 1u) ? (out | bit) : (out & ~bit);
                }
                return out;
            });
            return;
        }
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::V:
            return "V";
        case GateKind::Vdg:
            return "VDG";
        case GateKind::W:
            return "W";
        case GateKind::Wdg:
            return "WDG";
        case GateKind::X:
            return "X";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CV:
            return "CV";
        case GateKind::CVdg:
            return "CVDG";
        case GateKind::ControlledU:
            return "CU";
        case GateKind::Toffoli:
            return "TOFFOLI";
        case GateKind::OracleQuery:
            return "ORACLE";
    }
    return "?";
}

Gate::Gate(GateKind kind, std::vector<int> wires) : kind_(kind), wires_(std::move(wires)) {
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        if (wires_[i] < 0) {
            throw InputError("negative wire index");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (wires_[i] == wires_[j]) {
                throw InputError(std::string(gate_name(kind_)) + " gate wires must be distinct");
            }
        }
    }
    const int a = arity(kind_);
    if (a >= 0 && static_cast<int>(wires_.size()) != a) {
        throw InputError(std::string(gate_name(kind_)) + " gate takes " + std::to_string(a) + " wires");
    }
}

Gate Gate::one_qubit(GateKind kind, int q) {
    if (arity(kind) != 1) {
        throw InputError(std::string(gate_name(kind)) + " is not a one-qubit gate");
    }
    return Gate(kind, {q});
}

Gate Gate::cnot(int control, int target) {
    return Gate(GateKind::CNOT, {control, target});
}

Gate Gate::cv(int control, int target) {
    return Gate(GateKind::CV, {control, target});
}

Gate Gate::cvdg(int control, int target) {
    return Gate(GateKind::CVdg, {control, target});
}

Gate Gate::controlled_u(UnitaryMatrix u, int control, int target) {
    if (u.dim() != 2) {
        throw InputError("controlled-U needs a 2x2 unitary");
    }
    Gate g(GateKind::ControlledU, {control, target});
    g.u_ = std::move(u);
    return g;
}

Gate Gate::toffoli(int c0, int c1, int target) {
    return Gate(GateKind::Toffoli, {c0, c1, target});
}

Gate Gate::oracle(std::shared_ptr<const BasisPermutation> perm, std::vector<int> wires) {
    if (!perm || perm->arity != static_cast<int>(wires.size()) || wires.empty() ||
        perm->table.size() != (std::size_t{1} << wires.size())) {
        throw InputError("oracle gate wires do not match its permutation table");
    }
    Gate g(GateKind::OracleQuery, std::move(wires));
    g.perm_ = std::move(perm);
    return g;
}

Gate Gate::adjoint() const {
    switch (kind_) {
        case GateKind::V:
            return Gate(GateKind::Vdg, wires_);
        case GateKind::Vdg:
            return Gate(GateKind::V, wires_);
        case GateKind::W:
            return Gate(GateKind::Wdg, wires_);
        case GateKind::Wdg:
            return Gate(GateKind::W, wires_);
        case GateKind::CV:
            return Gate(GateKind::CVdg, wires_);
        case GateKind::CVdg:
            return Gate(GateKind::CV, wires_);
        case GateKind::ControlledU:
            return controlled_u(u_->adjoint(), wires_[0], wires_[1]);
        case GateKind::OracleQuery: {
            auto inv = std::make_shared<BasisPermutation>(*perm_);
            inv->id = perm_->id + "^-1";
            for (std::size_t v = 0; v < perm_->table.size(); ++v) {
                inv->table[perm_->table[v]] = v;
            }
            return oracle(std::move(inv), wires_);
        }
        default:
            return *this;  // H, X, CNOT, Toffoli are self-inverse
    }
}

bool Gate::operator==(const Gate &other) const {
    if (kind_ != other.kind_ || wires_ != other.wires_) {
        return false;
    }
    if (kind_ == GateKind::ControlledU) {
        return u_->max_abs_diff(*other.u_) == 0.0;
    }
    if (kind_ == GateKind::OracleQuery) {
        return perm_->table == other.perm_->table;
    }
    return true;
}

QuantumCircuit::QuantumCircuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw InputError("a circuit needs at least one qubit");
    }
}

QuantumCircuit &QuantumCircuit::add(Gate gate) {
    for (int w : gate.wires()) {
        if (w >= num_qubits_) {
            throw InputError(std::string(gate_name(gate.kind())) + " wire " + std::to_string(w) + " outside " +
                             std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

QuantumCircuit &QuantumCircuit::append(const QuantumCircuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw InputError("appended circuit is wider than the target");
    }
    for (const auto &g : other.gates_) {
        add(g);
    }
    return *this;
}

QuantumCircuit QuantumCircuit::adjoint() const {
    QuantumCircuit out(num_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.add(it->adjoint());
    }
    return out;
}

UnitaryMatrix gate_matrix(GateKind kind) {
    switch (kind) {
        case GateKind::ControlledU:
        case GateKind::OracleQuery:
            throw InputError(std::string(gate_name(kind)) + " has no fixed matrix");
        default:
            break;
    }
    const int a = arity(kind);
    if (a == 1) {
        return one_qubit_matrix(kind);
    }
    QuantumCircuit c(a);
    if (a == 2) {
        c.add(kind == GateKind::CNOT ? Gate::cnot(0, 1) : kind == GateKind::CV ? Gate::cv(0, 1) : Gate::cvdg(0, 1));
    } else {
        c.add(Gate::toffoli(0, 1, 2));
    }
    return circuit_unitary(c);
}

void apply_gate(StateVector &state, const Gate &gate) {
    apply_gate_impl(state, gate);
}

void apply_gate(SparseState &state, const Gate &gate) {
    apply_gate_impl(state, gate);
}

void apply_circuit(StateVector &state, const QuantumCircuit &circuit) {
    if (circuit.num_qubits() > state.num_qubits()) {
        throw InputError("circuit is wider than the register");
    }
    for (const auto &g : circuit.gates()) {
        apply_gate(state, g);
    }
}

void apply_circuit(SparseState &state, const QuantumCircuit &circuit) {
    if (circuit.num_qubits() > state.num_qubits()) {
        throw InputError("circuit is wider than the register");
    }
    for (const auto &g : circuit.gates()) {
        apply_gate(state, g);
    }
}

UnitaryMatrix circuit_unitary(const QuantumCircuit &circuit) {
    const int m = circuit.num_qubits();
    if (m > kMaxUnitaryQubits) {
        throw ResourceError("circuit_unitary is limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << m;
    std::vector<Amplitude> entries(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto s = StateVector::basis(m, col);
        apply_circuit(s, circuit);
        for (std::size_t row = 0; row < dim; ++row) {
            entries[row * dim + col] = s[row];
        }
    }
    // Columns are images of an orthonormal basis under unitary gates.
    return UnitaryMatrix(UnitaryMatrix::Unchecked{}, dim, std::move(entries));
}

std::uint64_t permute_basis(const QuantumCircuit &circuit, std::uint64_t basis_index) {
    const int m = circuit.num_qubits();
    auto bit = [m](int q) { return std::uint64_t{1} << (m - 1 - q); };
    std::uint64_t v = basis_index;
    for (const auto &g : circuit.gates()) {
        const auto &w = g.wires();
        switch (g.kind()) {
            case GateKind::X:
                v ^= bit(w[0]);
                break;
            case GateKind::CNOT:
                if (v & bit(w[0])) {
                    v ^= bit(w[1]);
                }
                break;
            case GateKind::Toffoli:
                if ((v & bit(w[0])) && (v & bit(w[1]))) {
                    v ^= bit(w[2]);
                }
                break;
            case GateKind::OracleQuery: {
                std::uint64_t sub = 0;
                for (int q : w) {
                    sub = (sub << 1) | ((v & bit(q)) ? 1u : 0u);
                }
                const std::uint64_t image = g.permutation()->table[sub];
                const int a = static_cast<int>(w.size());
                for (int i = 0; i < a; ++i) {
                    v = ((image >> (a - 1 - i)) & 1u) ? (v | bit(w[i])) : (v & ~bit(w[i]));
                }
                break;
            }
            default:
                throw InputError(std::string(gate_name(g.kind())) + " does not permute basis states");
        }
    }
    return v;
}

QuantumCircuit toffoli_decomposition() {
    constexpr int top = 0, mid = 1, target = 2;
    QuantumCircuit c(3);
    c.add(Gate::h(target))
        .add(Gate::cv(mid, target))
        .add(Gate::cnot(top, mid))
        .add(Gate::cvdg(mid, target))
        .add(Gate::cnot(top, mid))
        .add(Gate::cv(top, target))
        .add(Gate::h(target));
    return c;
}

QuantumCircuit controlled_v_decomposition() {
    constexpr int control = 0, target = 1;
    QuantumCircuit c(2);
    c.add(Gate::w(control))
        .add(Gate::w(target))
        .add(Gate::cnot(control, target))
        .add(Gate::one_qubit(GateKind::Wdg, target))
        .add(Gate::cnot(control, target));
    return c;
}

namespace {

void emit_w_power(QuantumCircuit &out, int q, int power) {
    for (int i = 0; i < power; ++i) {
        out.add(Gate::w(q));
    }
}

void emit_cv(QuantumCircuit &out, int control, int target, bool dagger) {
    // W^dagger = W^7, V = W^2.
    if (!dagger) {
        out.add(Gate::w(control)).add(Gate::w(target)).add(Gate::cnot(control, target));
        emit_w_power(out, target, 7);
        out.add(Gate::cnot(control, target));
    } else {
        out.add(Gate::cnot(control, target)).add(Gate::w(target)).add(Gate::cnot(control, target));
        emit_w_power(out, target, 7);
        emit_w_power(out, control, 7);
    }
}

}  // namespace

QuantumCircuit rewrite_to_basis(const QuantumCircuit &circuit) {
    QuantumCircuit out(circuit.num_qubits());
    for (const auto &g : circuit.gates()) {
        const auto &w = g.wires();
        switch (g.kind()) {
            case GateKind::H:
            case GateKind::W:
            case GateKind::CNOT:
                out.add(g);
                break;
            case GateKind::Wdg:
                emit_w_power(out, w[0], 7);
                break;
            case GateKind::V:
                emit_w_power(out, w[0], 2);
                break;
            case GateKind::Vdg:
                emit_w_power(out, w[0], 6);
                break;
            case GateKind::X:
                // X = H Z H with Z = W^4.
                out.add(Gate::h(w[0]));
                emit_w_power(out, w[0], 4);
                out.add(Gate::h(w[0]));
                break;
            case GateKind::CV:
                emit_cv(out, w[0], w[1], false);
                break;
            case GateKind::CVdg:
                emit_cv(out, w[0], w[1], true);
                break;
            case GateKind::Toffoli: {
                const int top = w[0], mid = w[1], target = w[2];
                out.add(Gate::h(target));
                emit_cv(out, mid, target, false);
                out.add(Gate::cnot(top, mid));
                emit_cv(out, mid, target, true);
                out.add(Gate::cnot(top, mid));
                emit_cv(out, top, target, false);
                out.add(Gate::h(target));
                break;
            }
            case GateKind::ControlledU:
            case GateKind::OracleQuery:
                throw RewriteError("cannot rewrite " + std::string(gate_name(g.kind())) +
                                   " gate exactly into {H, W, CNOT}");
        }
    }
    return out;
}

QuantumCircuit parse_circuit_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<QuantumCircuit> circuit;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) {
            continue;
        }
        for (auto &ch : name) {
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        }
        auto fail = [&](const std::string &why) {
            return InputError("circuit text line " + std::to_string(line_no) + ": " + why);
        };
        std::vector<int> wires;
        int q;
        while (ls >> q) {
            wires.push_back(q);
        }
        if (!ls.eof()) {
            throw fail("expected integer wire indices");
        }
        if (name == "QUBITS") {
            if (circuit || wires.size() != 1 || wires[0] < 1) {
                throw fail("header must be a single `qubits N` line before any gate");
            }
            circuit.emplace(wires[0]);
            continue;
        }
        if (!circuit) {
            throw fail("missing `qubits N` header");
        }
        static const std::pair<std::string_view, GateKind> kNames[] = {
            {"H", GateKind::H},       {"V", GateKind::V},         {"VDG", GateKind::Vdg},
            {"W", GateKind::W},       {"WDG", GateKind::Wdg},     {"X", GateKind::X},
            {"NOT", GateKind::X},     {"CNOT", GateKind::CNOT},   {"CX", GateKind::CNOT},
            {"CV", GateKind::CV},     {"CVDG", GateKind::CVdg},   {"TOFFOLI", GateKind::Toffoli},
            {"CCX", GateKind::Toffoli},
        };
        std::optional<GateKind> kind;
        for (const auto &[n, k] : kNames) {
            if (name == n) {
                kind = k;
            }
        }
        if (!kind) {
            throw fail("unknown gate `" + name + "`");
        }
        try {
            switch (arity(*kind)) {
                case 1:
                    if (wires.size() != 1) {
                        throw fail(name + " takes 1 wire");
                    }
                    circuit->add(Gate::one_qubit(*kind, wires[0]));
                    break;
                case 2:
                    if (wires.size() != 2) {
                        throw fail(name + " takes 2 wires");
                    }
                    circuit->add(*kind == GateKind::CNOT ? Gate::cnot(wires[0], wires[1])
                                 : *kind == GateKind::CV ? Gate::cv(wires[0], wires[1])
                                                         : Gate::cvdg(wires[0], wires[1]));
                    break;
                default:
                    if (wires.size() != 3) {
                        throw fail(name + " takes 3 wires");
                    }
                    circuit->add(Gate::toffoli(wires[0], wires[1], wires[2]));
            }
        } catch (const InputError &e) {
            if (std::string_view(e.what()).starts_with("circuit text line")) {
                throw;
            }
            throw fail(e.what());
        }
    }
    if (!circuit) {
        throw InputError("circuit text: missing `qubits N` header");
    }
    return *std::move(circuit);
}

std::string format_circuit_text(const QuantumCircuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    for (const auto &g : circuit.gates()) {
        if (g.kind() == GateKind::ControlledU || g.kind() == GateKind::OracleQuery) {
            throw InputError(std::string(gate_name(g.kind())) + " gates have no text form");
        }
        out << gate_name(g.kind());
        for (int w : g.wires()) {
            out << ' ' << w;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qcw
