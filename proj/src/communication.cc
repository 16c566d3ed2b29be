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


#include "qcw/communication.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "qcw/errors.h"
#include "qcw/number_theory.h"

namespace qcw {

namespace {

constexpr double kCleanTolerance = 1e-12;
constexpr int kMaxIntersectionK = 10;
constexpr std::size_t kMaxIpLength = std::size_t{1} << 16;
constexpr int kFieldCertificationRounds = 20;

Party other(Party p) {
    return p == Party::Alice ? Party::Bob : Party::Alice;
}

void check_pair(const Bits &x, const Bits &y) {
    if (x.size() != y.size()) {
        throw InputError("x and y must have the same length");
    }
}

}  // namespace

std::string_view party_name(Party p) {
    return p == Party::Alice ? "alice" : "bob";
}

void ProtocolTranscript::send(Party from, PayloadKind kind, std::uint64_t count, std::string purpose) {
    messages.push_back({from, other(from), kind, count, std::move(purpose)});
}

std::uint64_t ProtocolTranscript::qubits_total() const {
    std::uint64_t total = 0;
    for (const auto &m : messages) {
        total += m.kind == PayloadKind::Qubits ? m.count : 0;
    }
    return total;
}

std::uint64_t ProtocolTranscript::bits_total() const {
    std::uint64_t total = 0;
    for (const auto &m : messages) {
        total += m.kind == PayloadKind::Bits ? m.count : 0;
    }
    return total;
}

std::uint64_t ProtocolTranscript::bits_for(std::string_view purpose) const {
    std::uint64_t total = 0;
    for (const auto &m : messages) {
        total += (m.kind == PayloadKind::Bits && m.purpose == purpose) ? m.count : 0;
    }
    return total;
}

std::string ProtocolTranscript::to_json() const {
    nlohmann::ordered_json j;
    j["protocol"] = protocol;
    j["n"] = n;
    j["seed"] = seed;
    auto msgs = nlohmann::ordered_json::array();
    for (const auto &m : messages) {
        msgs.push_back({{"from", party_name(m.from)},
                        {"to", party_name(m.to)},
                        {"kind", m.kind == PayloadKind::Bits ? "bits" : "qubits"},
                        {"count", m.count},
                        {"purpose", m.purpose}});
    }
    j["messages"] = std::move(msgs);
    j["qubits_total"] = qubits_total();
    j["bits_total"] = bits_total();
    j["output"] = output ? nlohmann::ordered_json(*output) : nlohmann::ordered_json(nullptr);
    j["verified"] = verified;
    return j.dump();
}

DistributedState::DistributedState(StateVector state, std::vector<Party> owners)
    : state_(std::move(state)), owners_(std::move(owners)) {
    if (static_cast<int>(owners_.size()) != state_.num_qubits()) {
        throw InputError("owner map must cover every qubit");
    }
}

Party DistributedState::owner(int q) const {
    if (q < 0 || q >= num_qubits()) {
        throw InputError("qubit " + std::to_string(q) + " out of range");
    }
    return owners_[q];
}

void DistributedState::check_owned(Party actor, std::span<const int> qubits) const {
    for (int q : qubits) {
        if (owner(q) != actor) {
            throw OwnershipError(std::string(party_name(actor)) + " does not hold qubit " + std::to_string(q));
        }
    }
}

void DistributedState::apply(Party actor, const Gate &gate) {
    check_owned(actor, gate.wires());
    apply_gate(state_, gate);
}

void DistributedState::query(Party actor, const ReversibleQuery &q, const QueryRegisters &regs, QueryCounter &counter) {
    check_owned(actor, regs.input);
    check_owned(actor, regs.output);
    check_owned(actor, regs.workspace);
    quantum_query(state_, q, regs, counter);
}

void DistributedState::send(Party from, std::span<const int> qubits, ProtocolTranscript &transcript,
                            std::string purpose) {
    check_owned(from, qubits);
    for (int q : qubits) {
        owners_[q] = other(from);
    }
    transcript.send(from, PayloadKind::Qubits, qubits.size(), std::move(purpose));
}

BitstringOracle::BitstringOracle(Bits x) : x_(std::move(x)), k_(0) {
    if (x_.size() < 2 || !std::has_single_bit(x_.size())) {
        throw InputError("bit string length must be a power of two >= 2, got " + std::to_string(x_.size()));
    }
    k_ = std::countr_zero(x_.size());
}

OracleFunction BitstringOracle::function() const {
    return OracleFunction(k_, 1, std::vector<std::uint64_t>(x_.begin(), x_.end()));
}

FingerprintField FingerprintField::for_length(std::size_t n, Rng &rng) {
    if (n < 2) {
        throw InputError("fingerprinting needs n >= 2");
    }
    const std::uint64_t lo = 2 * static_cast<std::uint64_t>(n);
    const std::uint64_t hi = 4 * static_cast<std::uint64_t>(n);
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= hi; j += i) {
                composite[j] = true;
            }
        }
    }
    for (std::uint64_t p = lo; p <= hi; ++p) {
        if (!composite[p]) {
            if (solovay_strassen(p, kFieldCertificationRounds, rng) != PrimalityVerdict::ProbablyPrime) {
                throw ContractViolation("sieve prime rejected by certification");
            }
            return {p, static_cast<int>(std::bit_width(p - 1))};
        }
    }
    throw ContractViolation("no prime in [2n, 4n]");
}

std::uint64_t FingerprintField::evaluate(const Bits &x, std::uint64_t t) const {
    std::uint64_t acc = 0;
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
        acc = (mul_mod(acc, t, p) + *it) % p;
    }
    return acc;
}

int fingerprint_rounds(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InputError("eps must lie in (0, 1)");
    }
    return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / eps) - 1e-12)));
}

int eq_function(const Bits &x, const Bits &y) {
    check_pair(x, y);
    return x == y ? 1 : 0;
}

int in_function(const Bits &x, const Bits &y) {
    check_pair(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] && y[i]) {
            return 1;
        }
    }
    return 0;
}

int ip_function(const Bits &x, const Bits &y) {
    check_pair(x, y);
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc ^= x[i] & y[i];
    }
    return acc;
}

ProtocolOutcome trivial_protocol(const Bits &x, const Bits &y, const TwoPartyFunction &g) {
    check_pair(x, y);
    ProtocolOutcome out;
    out.transcript.protocol = "trivial";
    out.transcript.n = static_cast<int>(x.size());
    out.transcript.send(Party::Alice, PayloadKind::Bits, x.size(), "input");
    out.output = g(x, y);
    out.transcript.output = out.output;
    out.transcript.verified = true;
    return out;
}

ProtocolOutcome eq_fingerprint(const Bits &x, const Bits &y, int fp_rounds, Rng &rng) {
    check_pair(x, y);
    if (x.size() < 2) {
        throw InputError("fingerprinting needs n >= 2");
    }
    if (fp_rounds < 1) {
        throw InputError("fingerprinting needs at least one round");
    }
    const FingerprintField field = FingerprintField::for_length(x.size(), rng);
    ProtocolOutcome out;
    out.transcript.protocol = "eq-fingerprint";
    out.transcript.n = static_cast<int>(x.size());
    bool agree = true;
    for (int r = 0; r < fp_rounds; ++r) {
        const std::uint64_t t = uniform_below(rng, field.p);
        const std::uint64_t px = field.evaluate(x, t);
        out.transcript.send(Party::Alice, PayloadKind::Bits, 2 * static_cast<std::uint64_t>(field.width), "fingerprint");
        agree = agree && px == field.evaluate(y, t);
    }
    out.output = agree ? 1 : 0;
    out.transcript.output = out.output;
    // A mismatch proves x != y; agreement leaves the one-sided error.
    out.transcript.verified = !agree;
    return out;
}

std::string_view combiner_name(Combiner c) {
    switch (c) {
        case Combiner::And:
            return "and";
        case Combiner::Or:
            return "or";
        case Combiner::Xor:
            return "xor";
    }
    return "?";
}

int combine(Combiner c, int a, int b) {
    switch (c) {
        case Combiner::And:
            return a & b;
        case Combiner::Or:
            return a | b;
        case Combiner::Xor:
            return a ^ b;
    }
    return 0;
}

GadgetRegisters GadgetRegisters::standard(int k) {
    GadgetRegisters r{{}, k, k + 1, k + 2};
    for (int i = 0; i < k; ++i) {
        r.index.push_back(i);
    }
    return r;
}

std::vector<int> GadgetRegisters::all() const {
    std::vector<int> v = index;
    v.push_back(anc1);
    v.push_back(anc2);
    v.push_back(result);
    return v;
}

void distributed_query(DistributedState &d, const BitstringOracle &fx, const BitstringOracle &fy,
                       const GadgetRegisters &regs, Combiner combiner, ProtocolTranscript &transcript,
                       QueryCounter &counter) {
    if (fx.k() != fy.k() || static_cast<int>(regs.index.size()) != fx.k()) {
        throw InputError("index register must have k qubits for both oracles");
    }
    const std::vector<int> involved = regs.all();
    for (int q : involved) {
        if (d.owner(q) != Party::Bob) {
            throw PreconditionError("Bob must hold every gadget qubit at entry");
        }
    }
    const std::uint64_t anc_mask = d.state().qubit_mask(regs.anc1) | d.state().qubit_mask(regs.anc2);
    if (probability_of(d.state(), [anc_mask](std::uint64_t i) { return (i & anc_mask) != 0; }) > kCleanTolerance) {
        throw PreconditionError("gadget ancillas must start in |0>");
    }

    const ReversibleQuery qx(fx.function());
    const ReversibleQuery qy(fy.function());
    const QueryRegisters into1{regs.index, {regs.anc1}, {}};
    const QueryRegisters into2{regs.index, {regs.anc2}, {}};
    QueryCounter local;  // each party's own oracle calls are free

    d.query(Party::Bob, qy, into2, local);
    if (combiner == Combiner::Or) {
        d.apply(Party::Bob, Gate::x(regs.anc2));
    }
    d.send(Party::Bob, involved, transcript, "query");

    d.query(Party::Alice, qx, into1, local);
    switch (combiner) {
        case Combiner::And:
            d.apply(Party::Alice, Gate::toffoli(regs.anc1, regs.anc2, regs.result));
            break;
        case Combiner::Or:
            // f_x OR f_y = NOT (NOT f_x AND NOT f_y)
            d.apply(Party::Alice, Gate::x(regs.anc1));
            d.apply(Party::Alice, Gate::toffoli(regs.anc1, regs.anc2, regs.result));
            d.apply(Party::Alice, Gate::x(regs.result));
            d.apply(Party::Alice, Gate::x(regs.anc1));
            break;
        case Combiner::Xor:
            d.apply(Party::Alice, Gate::cnot(regs.anc1, regs.result));
            d.apply(Party::Alice, Gate::cnot(regs.anc2, regs.result));
            break;
    }
    d.query(Party::Alice, qx, into1, local);
    d.send(Party::Alice, involved, transcript, "query");

    if (combiner == Combiner::Or) {
        d.apply(Party::Bob, Gate::x(regs.anc2));
    }
    d.query(Party::Bob, qy, into2, local);
    ++counter.quantum;
}

DistributedQueryAccess::DistributedQueryAccess(BitstringOracle fx, BitstringOracle fy, Combiner combiner,
                                               ProtocolTranscript &transcript, QueryCounter &counter)
    : fx_(std::move(fx)), fy_(std::move(fy)), combiner_(combiner), transcript_(transcript), counter_(counter) {
    if (fx_.n() != fy_.n()) {
        throw InputError("x and y must have the same length");
    }
}

std::uint64_t DistributedQueryAccess::query(std::uint64_t i) {
    const int k = fx_.k();
    if (i >> k) {
        throw InputError("index out of range");
    }
    DistributedState d(StateVector::basis(k + 3, i << 3), std::vector<Party>(k + 3, Party::Bob));
    QueryCounter scratch;
    distributed_query(d, fx_, fy_, GadgetRegisters::standard(k), combiner_, transcript_, scratch);
    ++counter_.classical;
    const StateVector s = std::move(d).release();
    const auto amps = s.amplitudes();
    const auto hit = std::find_if(amps.begin(), amps.end(), [](Amplitude a) { return std::norm(a) > 0.5; });
    return static_cast<std::uint64_t>(hit - amps.begin()) & 1u;
}

void DistributedQueryAccess::query(StateVector &state, const QueryRegisters &regs) {
    if (static_cast<int>(regs.input.size()) != fx_.k() || regs.output.size() != 1 || regs.workspace.size() < 2) {
        throw InputError("distributed query needs k index qubits, one result qubit and two workspace qubits");
    }
    const GadgetRegisters g{regs.input, regs.workspace[0], regs.workspace[1], regs.output[0]};
    const int m = state.num_qubits();
    DistributedState d(std::move(state), std::vector<Party>(m, Party::Bob));
    try {
        distributed_query(d, fx_, fy_, g, combiner_, transcript_, counter_);
    } catch (...) {
        state = std::move(d).release();
        throw;
    }
    state = std::move(d).release();
}

std::uint64_t DistributedQueryAccess::peek(std::uint64_t) const {
    throw ContractViolation("f_x o f_y is only reachable through counted distributed queries");
}

ProtocolOutcome compile_query_to_protocol(const QueryAlgorithm &algorithm, Combiner combiner, const Bits &x,
                                          const Bits &y, double eps, Rng &rng) {
    check_pair(x, y);
    BitstringOracle fx(x), fy(y);
    const int k = fx.k();
    ProtocolOutcome out;
    out.transcript.protocol = std::string("compiled-") + std::string(combiner_name(combiner));
    out.transcript.n = static_cast<int>(x.size());
    QueryCounter counter;
    DistributedQueryAccess access(std::move(fx), std::move(fy), combiner, out.transcript, counter);
    const DecisionResult r = algorithm(access, eps, rng);
    out.output = r.value;
    out.witness = r.witness;
    out.queries = counter.count();
    if (out.transcript.qubits_total() != out.queries * 2 * static_cast<std::uint64_t>(k + 3)) {
        throw ContractViolation("qubit total does not match the query count");
    }
    out.transcript.output = out.output;
    return out;
}

ProtocolOutcome intersection_protocol(const Bits &x, const Bits &y, double eps, Rng &rng) {
    check_pair(x, y);
    const BitstringOracle probe(x);
    if (probe.k() > kMaxIntersectionK) {
        throw ResourceError("intersection protocol supports n <= 2^" + std::to_string(kMaxIntersectionK));
    }
    ProtocolOutcome out = compile_query_to_protocol(grover_or, Combiner::And, x, y, eps, rng);
    out.transcript.protocol = "intersection";
    if (out.witness) {
        const std::uint64_t i = *out.witness;
        out.transcript.send(Party::Bob, PayloadKind::Bits, static_cast<std::uint64_t>(probe.k()), "verify");
        out.transcript.send(Party::Alice, PayloadKind::Bits, 1, "verify");
        out.transcript.verified = x[i] && y[i];
        if (!out.transcript.verified) {
            throw ContractViolation("witness failed verification");
        }
    }
    return out;
}

IpParity ip_parity_identity(const Bits &x, const Bits &y) {
    check_pair(x, y);
    if (x.size() > kMaxIpLength) {
        throw ResourceError("IP identity supports n <= 2^16");
    }
    const BitstringOracle fx(x), fy(y);
    std::vector<std::uint64_t> table(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        table[i] = static_cast<std::uint64_t>(fx(i) & fy(i));
    }
    QueryCounter counter;
    LocalQueryAccess access(OracleFunction(fx.k(), 1, std::move(table)), counter);
    return {ip_function(x, y), parity_brute(access).value};
}

}  // namespace qcw
