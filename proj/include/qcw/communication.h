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

#ifndef QCW_COMMUNICATION_H
#define QCW_COMMUNICATION_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/algorithms.h"
#include "qcw/bits.h"
#include "qcw/gates.h"
#include "qcw/oracle.h"
#include "qcw/rng.h"
#include "qcw/state_vector.h"

namespace qcw {

enum class Party { Alice, Bob };
std::string_view party_name(Party p);

enum class PayloadKind { Bits, Qubits };

struct Message {
    Party from;
    Party to;
    PayloadKind kind;
    std::uint64_t count;
    std::string purpose;  // e.g. "query", "fingerprint", "verify"
};

/// Ordered two-party message log. Totals are always recomputed from the messages.
struct ProtocolTranscript {
    std::string protocol;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<Message> messages;
    std::optional<int> output;
    bool verified = false;  // the output is certain given the messages (no one-sided error left)

    void send(Party from, PayloadKind kind, std::uint64_t count, std::string purpose);
    std::uint64_t qubits_total() const;
    std::uint64_t bits_total() const;
    std::uint64_t bits_for(std::string_view purpose) const;

    /// One-line JSON: {protocol, n, seed, messages:[{from,to,kind,count,purpose}], qubits_total,
    /// bits_total, output, verified}.
    std::string to_json() const;
};

/// A shared register whose qubits are each held by one party. Gates and queries are refused
/// (OwnershipError) on qubits the acting party does not hold.
class DistributedState {
   public:
    DistributedState(StateVector state, std::vector<Party> owners);

    int num_qubits() const {
        return state_.num_qubits();
    }
    Party owner(int q) const;
    const StateVector &state() const {
        return state_;
    }
    StateVector release() && {
        return std::move(state_);
    }

    void apply(Party actor, const Gate &gate);
    void query(Party actor, const ReversibleQuery &q, const QueryRegisters &regs, QueryCounter &counter);
    /// Hands `qubits` from `from` to the other party and logs one qubit message.
    void send(Party from, std::span<const int> qubits, ProtocolTranscript &transcript, std::string purpose);

   private:
    void check_owned(Party actor, std::span<const int> qubits) const;

    StateVector state_;
    std::vector<Party> owners_;
};

/// x with n = 2^k bits viewed as f_x : {0,1}^k -> {0,1}, f_x(i) = x_i.
class BitstringOracle {
   public:
    explicit BitstringOracle(Bits x);

    int k() const {
        return k_;
    }
    std::size_t n() const {
        return x_.size();
    }
    const Bits &bits() const {
        return x_;
    }
    int operator()(std::uint64_t i) const {
        return x_.at(i);
    }
    OracleFunction function() const;

   private:
    Bits x_;
    int k_;
};

/// GF(p) with p the smallest prime in [2n, 4n], certified by Solovay-Strassen.
struct FingerprintField {
    std::uint64_t p;
    int width;  // ceil(log2 p) bits per element

    static FingerprintField for_length(std::size_t n, Rng &rng);
    /// p_x(t) = x_0 + x_1 t + ... + x_{n-1} t^(n-1) mod p.
    std::uint64_t evaluate(const Bits &x, std::uint64_t t) const;
};

/// ceil(log2(1/eps)), at least 1.
int fingerprint_rounds(double eps);

struct ProtocolOutcome {
    int output = 0;
    std::optional<std::uint64_t> witness;
    std::uint64_t queries = 0;  // (f_x o f_y)-queries in compiled protocols
    ProtocolTranscript transcript;
};

using TwoPartyFunction = std::function<int(const Bits &, const Bits &)>;
int eq_function(const Bits &x, const Bits &y);
int in_function(const Bits &x, const Bits &y);
int ip_function(const Bits &x, const Bits &y);

/// Alice sends all n bits; Bob evaluates g.
ProtocolOutcome trivial_protocol(const Bits &x, const Bits &y, const TwoPartyFunction &g);

/// Alice sends (t_i, p_x(t_i)) for fp_rounds uniform t_i; Bob accepts iff p_y agrees on every t_i.
ProtocolOutcome eq_fingerprint(const Bits &x, const Bits &y, int fp_rounds, Rng &rng);

enum class Combiner { And, Or, Xor };
std::string_view combiner_name(Combiner c);
int combine(Combiner c, int a, int b);

/// Qubits of one distributed query: the k-qubit index, Alice's ancilla, Bob's ancilla, result.
struct GadgetRegisters {
    std::vector<int> index;
    int anc1;
    int anc2;
    int result;

    /// |i>|anc1>|anc2>|result> at offsets 0 .. k+2.
    static GadgetRegisters standard(int k);
    std::vector<int> all() const;
};

/// One (f_x o f_y)-query as a two-party exchange. For And: Bob XORs f_y into anc2, sends the
/// k + 3 qubits, Alice XORs f_x into anc1, applies Toffoli(anc1, anc2 -> result), XORs f_x into
/// anc1 again and sends everything back; Bob XORs f_y into anc2. Or conjugates both ancillas by
/// X and flips the result; Xor replaces the Toffoli by two CNOTs. Costs exactly 2(k + 3) qubits.
/// Throws PreconditionError when an ancilla is not |0> or Bob does not hold every qubit.
void distributed_query(DistributedState &d, const BitstringOracle &fx, const BitstringOracle &fy,
                       const GadgetRegisters &regs, Combiner combiner, ProtocolTranscript &transcript,
                       QueryCounter &counter);

/// Bob's handle on f_x o f_y: every query, classical ones included, goes through the
/// distributed gadget. Needs two workspace qubits per quantum query. peek() is refused.
class DistributedQueryAccess : public QueryAccess {
   public:
    DistributedQueryAccess(BitstringOracle fx, BitstringOracle fy, Combiner combiner, ProtocolTranscript &transcript,
                           QueryCounter &counter);

    int input_bits() const override {
        return fx_.k();
    }
    int output_bits() const override {
        return 1;
    }
    int workspace_qubits() const override {
        return 2;
    }
    std::uint64_t query(std::uint64_t i) override;
    void query(StateVector &state, const QueryRegisters &regs) override;
    const QueryCounter &counter() const override {
        return counter_;
    }
    std::uint64_t peek(std::uint64_t x) const override;

   private:
    BitstringOracle fx_;
    BitstringOracle fy_;
    Combiner combiner_;
    ProtocolTranscript &transcript_;
    QueryCounter &counter_;
};

using QueryAlgorithm = std::function<DecisionResult(QueryAccess &, double eps, Rng &)>;

/// Runs `algorithm` at Bob against f_x o f_y with each query simulated by the gadget. The
/// transcript then holds exactly queries * 2(k + 3) qubits (checked; ContractViolation otherwise).
ProtocolOutcome compile_query_to_protocol(const QueryAlgorithm &algorithm, Combiner combiner, const Bits &x,
                                          const Bits &y, double eps, Rng &rng);

/// Grover OR over f_x AND f_y. A found index i is confirmed by Bob sending i (k bits) and Alice
/// answering x_i (1 bit); those bits carry the purpose "verify". n = 2^k with k <= 10.
ProtocolOutcome intersection_protocol(const Bits &x, const Bits &y, double eps, Rng &rng);

struct IpParity {
    int ip;      // XOR over i of x_i AND y_i
    int parity;  // PARITY(f_x AND f_y) by querying every index
};

IpParity ip_parity_identity(const Bits &x, const Bits &y);

}  // namespace qcw

#endif
