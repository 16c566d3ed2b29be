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

#include "qcw/bool_circuit.h"

#include <algorithm>

#include "json.hpp"
#include "qcw/bits.h"
#include "qcw/errors.h"

namespace qcw {

namespace {

constexpr int kMaxSatInputs = 24;

int arity(NodeKind kind) {
    switch (kind) {
        case NodeKind::And:
        case NodeKind::Or:
        case NodeKind::Xor:
            return 2;
        case NodeKind::Not:
            return 1;
        case NodeKind::Coin:
        case NodeKind::Input:
            return 0;
    }
    return 0;
}

std::uint8_t label_code(NodeKind kind) {
    switch (kind) {
        case NodeKind::And:
            return 0;
        case NodeKind::Or:
            return 1;
        case NodeKind::Not:
            return 2;
        case NodeKind::Xor:
            return 3;
        case NodeKind::Coin:
            return 4;
        case NodeKind::Input:
            return 5;
    }
    return 7;
}

std::optional<NodeKind> kind_from_name(std::string_view name) {
    for (auto k : {NodeKind::And, NodeKind::Or, NodeKind::Not, NodeKind::Xor, NodeKind::Coin}) {
        if (node_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

/// N with N^2 + 3N = bits, if any.
std::optional<std::size_t> node_count_for_length(std::size_t bits) {
    for (std::size_t n = 1; n * n + 3 * n <= bits; ++n) {
        if (n * n + 3 * n == bits) {
            return n;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::And:
            return "AND";
        case NodeKind::Or:
            return "OR";
        case NodeKind::Not:
            return "NOT";
        case NodeKind::Xor:
            return "XOR";
        case NodeKind::Coin:
            return "COIN";
        case NodeKind::Input:
            return "INPUT";
    }
    return "?";
}

BoolCircuit::BoolCircuit(int num_inputs) : num_inputs_(num_inputs) {
    if (num_inputs < 0) {
        throw InputError("input count must be non-negative");
    }
    for (int i = 0; i < num_inputs; ++i) {
        nodes_.push_back({NodeKind::Input, {}});
    }
    output_ = nodes_.empty() ? 0 : nodes_.size() - 1;
}

std::size_t BoolCircuit::add_gate(NodeKind kind, std::vector<std::size_t> args) {
    if (kind == NodeKind::Input) {
        throw InputError("inputs are created with the circuit");
    }
    if (static_cast<int>(args.size()) != arity(kind)) {
        throw InputError(std::string(node_kind_name(kind)) + " takes " + std::to_string(arity(kind)) +
                         " arguments, got " + std::to_string(args.size()));
    }
    for (auto a : args) {
        if (a >= nodes_.size()) {
            throw InputError("gate argument " + std::to_string(a) + " does not precede the gate");
        }
    }
    if (args.size() == 2 && args[0] == args[1]) {
        throw InputError("binary gate arguments must be distinct nodes");
    }
    nodes_.push_back({kind, std::move(args)});
    output_ = nodes_.size() - 1;
    return output_;
}

void BoolCircuit::set_output(std::size_t node) {
    if (node >= nodes_.size()) {
        throw InputError("output node out of range");
    }
    output_ = node;
}

bool BoolCircuit::has_coin() const {
    return std::any_of(nodes_.begin(), nodes_.end(), [](const BoolNode &n) { return n.kind == NodeKind::Coin; });
}

std::vector<std::uint8_t> evaluate_nodes(const BoolCircuit &c, std::uint64_t x, Rng *rng) {
    const int n = c.num_inputs();
    if (n < 64 && (x >> n) != 0) {
        throw InputError("input value wider than " + std::to_string(n) + " bits");
    }
    std::vector<std::uint8_t> v(c.nodes().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto &node = c.nodes()[i];
        switch (node.kind) {
            case NodeKind::Input:
                v[i] = static_cast<std::uint8_t>((x >> (n - 1 - static_cast<int>(i))) & 1u);
                break;
            case NodeKind::And:
                v[i] = v[node.args[0]] & v[node.args[1]];
                break;
            case NodeKind::Or:
                v[i] = v[node.args[0]] | v[node.args[1]];
                break;
            case NodeKind::Xor:
                v[i] = v[node.args[0]] ^ v[node.args[1]];
                break;
            case NodeKind::Not:
                v[i] = v[node.args[0]] ^ 1u;
                break;
            case NodeKind::Coin:
                if (rng == nullptr) {
                    throw InputError("circuit has COIN gates; a random source is required");
                }
                v[i] = static_cast<std::uint8_t>(coin_flip(*rng));
                break;
        }
    }
    return v;
}

int evaluate(const BoolCircuit &c, std::uint64_t x, Rng *rng) {
    if (c.nodes().empty()) {
        throw InputError("empty circuit has no output");
    }
    return evaluate_nodes(c, x, rng)[c.output()];
}

int evaluate(const BoolCircuit &c, std::string_view x, Rng *rng) {
    if (x.size() != static_cast<std::size_t>(c.num_inputs())) {
        throw InputError("input has " + std::to_string(x.size()) + " bits, circuit expects " +
                         std::to_string(c.num_inputs()));
    }
    return evaluate(c, string_to_index(x), rng);
}

BoolCircuit parity_five_gate() {
    BoolCircuit c(2);
    const auto not0 = c.add_not(0);
    const auto not1 = c.add_not(1);
    const auto top = c.add_and(not0, 1);
    const auto bottom = c.add_and(0, not1);
    c.add_or(top, bottom);
    return c;
}

BoolCircuit parity_single_xor() {
    BoolCircuit c(2);
    c.add_xor(0, 1);
    return c;
}

BoolCircuit parity_xor_tree(int n) {
    if (n < 2) {
        throw InputError("XOR tree needs at least two inputs");
    }
    BoolCircuit c(n);
    std::vector<std::size_t> layer(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        layer[i] = static_cast<std::size_t>(i);
    }
    while (layer.size() > 1) {
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
            next.push_back(c.add_xor(layer[i], layer[i + 1]));
        }
        if (layer.size() % 2 == 1) {
            next.push_back(layer.back());
        }
        layer = std::move(next);
    }
    c.set_output(layer[0]);
    return c;
}

std::string CircuitEncoding::to_hex() const {
    static const char *kDigits = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble = (nibble << 1) | (i + j < bits.size() ? bits[i + j] : 0);
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

CircuitEncoding CircuitEncoding::from_hex(std::string_view hex) {
    std::vector<std::uint8_t> raw;
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
        int v;
        if (ch >= '0' && ch <= '9') {
            v = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            v = ch - 'a' + 10;
        } else {
            throw DecodeError("invalid hex digit", 4 * i);
        }
        for (int b = 3; b >= 0; --b) {
            raw.push_back(static_cast<std::uint8_t>((v >> b) & 1));
        }
    }
    // N^2 + 3N grows by at least 4 per step, so at most one length fits in the last nibble.
    for (std::size_t pad = 0; pad < 4 && pad <= raw.size(); ++pad) {
        if (node_count_for_length(raw.size() - pad)) {
            for (std::size_t i = raw.size() - pad; i < raw.size(); ++i) {
                if (raw[i]) {
                    throw DecodeError("nonzero padding", i);
                }
            }
            raw.resize(raw.size() - pad);
            return {std::move(raw)};
        }
    }
    throw DecodeError("hex length matches no node count", raw.size());
}

CircuitEncoding encode(const BoolCircuit &c) {
    const std::size_t n = static_cast<std::size_t>(c.num_inputs());
    if (c.nodes().empty()) {
        throw InputError("cannot encode an empty circuit");
    }
    if (c.output() < n && c.output() + 1 != n) {
        throw InputError("encoding needs the output to be a gate or the last input");
    }
    const std::size_t count = c.output() < n ? n : c.output() + 1;
    CircuitEncoding e;
    e.bits.assign(count * count + 3 * count, 0);
    for (std::size_t j = 0; j < count; ++j) {
        for (auto i : c.nodes()[j].args) {
            e.bits[i * count + j] = 1;
        }
        const auto code = label_code(c.nodes()[j].kind);
        for (int b = 0; b < 3; ++b) {
            e.bits[count * count + 3 * j + b] = static_cast<std::uint8_t>((code >> (2 - b)) & 1u);
        }
    }
    return e;
}

BoolCircuit decode(const CircuitEncoding &e) {
    const auto count_opt = node_count_for_length(e.bits.size());
    if (!count_opt) {
        throw DecodeError("length " + std::to_string(e.bits.size()) + " is not N^2 + 3N for any node count",
                          e.bits.size());
    }
    const std::size_t count = *count_opt;
    const std::size_t label_base = count * count;
    std::vector<NodeKind> kinds(count);
    std::size_t inputs = 0;
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t off = label_base + 3 * j;
        const int code = (e.bits[off] << 2) | (e.bits[off + 1] << 1) | e.bits[off + 2];
        switch (code) {
            case 0:
                kinds[j] = NodeKind::And;
                break;
            case 1:
                kinds[j] = NodeKind::Or;
                break;
            case 2:
                kinds[j] = NodeKind::Not;
                break;
            case 3:
                kinds[j] = NodeKind::Xor;
                break;
            case 4:
                kinds[j] = NodeKind::Coin;
                break;
            case 5:
                kinds[j] = NodeKind::Input;
                if (inputs != j) {
                    throw DecodeError("input node after a gate", off);
                }
                ++inputs;
                break;
            default:
                throw DecodeError("unknown node label " + std::to_string(code), off);
        }
    }
    BoolCircuit c(static_cast<int>(inputs));
    for (std::size_t j = inputs; j < count; ++j) {
        std::vector<std::size_t> args;
        for (std::size_t i = 0; i < count; ++i) {
            if (!e.bits[i * count + j]) {
                continue;
            }
            if (i >= j) {
                throw DecodeError("edge does not respect node order", i * count + j);
            }
            args.push_back(i);
        }
        if (static_cast<int>(args.size()) != arity(kinds[j])) {
            throw DecodeError(std::string(node_kind_name(kinds[j])) + " node has in-degree " +
                                  std::to_string(args.size()),
                              label_base + 3 * j);
        }
        c.add_gate(kinds[j], std::move(args));
    }
    for (std::size_t j = 0; j < inputs; ++j) {
        for (std::size_t i = 0; i < count; ++i) {
            if (e.bits[i * count + j]) {
                throw DecodeError("input node has a predecessor", i * count + j);
            }
        }
    }
    c.set_output(count - 1);
    return c;
}

SatResult brute_force_sat(const BoolCircuit &c) {
    if (c.has_coin()) {
        throw InputError("satisfiability search needs a deterministic circuit");
    }
    if (c.num_inputs() > kMaxSatInputs) {
        throw ResourceError("brute-force satisfiability limited to " + std::to_string(kMaxSatInputs) + " inputs");
    }
    const std::uint64_t total = std::uint64_t{1} << c.num_inputs();
    for (std::uint64_t x = 0; x < total; ++x) {
        if (evaluate(c, x)) {
            return {true, x};
        }
    }
    return {false, std::nullopt};
}

BoolCircuit random_bool_circuit(int num_inputs, int gates, Rng &rng) {
    if (num_inputs < 2) {
        throw InputError("random circuits need at least two inputs");
    }
    BoolCircuit c(num_inputs);
    static constexpr NodeKind kKinds[] = {NodeKind::And, NodeKind::Or, NodeKind::Not, NodeKind::Xor};
    for (int g = 0; g < gates; ++g) {
        const NodeKind kind = kKinds[uniform_below(rng, 4)];
        const std::size_t avail = c.nodes().size();
        const std::size_t a = uniform_below(rng, avail);
        if (kind == NodeKind::Not) {
            c.add_not(a);
            continue;
        }
        std::size_t b = uniform_below(rng, avail - 1);
        if (b >= a) {
            ++b;
        }
        c.add_gate(kind, {a, b});
    }
    return c;
}

BoolCircuit bool_circuit_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("circuit JSON: ") + e.what());
    }
    try {
        BoolCircuit c(j.at("n").get<int>());
        for (const auto &node : j.at("nodes")) {
            const auto name = node.at("kind").get<std::string>();
            auto kind = kind_from_name(name);
            if (!kind) {
                throw InputError("circuit JSON: unknown node kind `" + name + "`");
            }
            std::vector<std::size_t> args;
            if (node.contains("args")) {
                args = node.at("args").get<std::vector<std::size_t>>();
            }
            c.add_gate(*kind, std::move(args));
        }
        if (j.contains("output")) {
            c.set_output(j.at("output").get<std::size_t>());
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("circuit JSON: ") + e.what());
    }
}

std::string bool_circuit_to_json(const BoolCircuit &c) {
    nlohmann::ordered_json j;
    j["n"] = c.num_inputs();
    j["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = static_cast<std::size_t>(c.num_inputs()); i < c.nodes().size(); ++i) {
        const auto &node = c.nodes()[i];
        j["nodes"].push_back({{"kind", node_kind_name(node.kind)}, {"args", node.args}});
    }
    j["output"] = c.output();
    return j.dump();
}

}  // namespace qcw
