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

#ifndef QCW_ALGORITHMS_H
#define QCW_ALGORITHMS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qcw/bool_circuit.h"
#include "qcw/oracle.h"
#include "qcw/rng.h"
#include "qcw/state_vector.h"

namespace qcw {

// ---------------------------------------------------------------------------------------------
// Deutsch

/// f(t) = (c0 + c1 t) mod 2.
struct DeutschInstance {
    int c0;
    int c1;

    int operator()(int t) const {
        return (c0 + c1 * t) & 1;
    }
    OracleFunction oracle() const;
};

struct DeutschResult {
    int c1;                      // measured value of qubit 0
    double outcome_probability;  // Born probability of that value on the final state
    StateVector final_state;
};

/// |0>|1>, H on both, one query, H on both, measure qubit 0. Needs a 1-bit -> 1-bit oracle.
DeutschResult deutsch(QueryAccess &oracle, Rng &rng);

/// Two-query reversible classical circuit: b ^= f(0); NOT a; b ^= f(1). Returns the final b.
int classical_deutsch_two_query(QueryAccess &oracle);

/// A deterministic one-query strategy: query f at `query_point` and answer post(f(query_point)),
/// where post is the bit table {post(0), post(1)} packed as post(0) << 1 | post(1).
struct OneQueryStrategy {
    int query_point;
    int post_table;

    int answer(int observed) const {
        return (post_table >> (1 - observed)) & 1;
    }
};

struct StrategyRefutation {
    OneQueryStrategy strategy;
    DeutschInstance failing;  // instance the strategy answers wrongly
    // Two instances with the same observation but different c1.
    DeutschInstance collision_a;
    DeutschInstance collision_b;
};

/// Enumerates all 8 one-query strategies and refutes each.
std::vector<StrategyRefutation> classical_deutsch_impossibility();

// ---------------------------------------------------------------------------------------------
// Simon

struct SimonInstance {
    int n;
    std::uint64_t s;
    OracleFunction f;
};

/// Random f : {0,1}^n -> {0,1}^n with XOR-mask `s` (uniform nonzero when not given; 0 gives a
/// bijection).
SimonInstance random_simon_instance(int n, Rng &rng, std::optional<std::uint64_t> s = std::nullopt);

/// Exhaustive check: f(x) = f(y) iff x XOR y in {0, s}.
bool satisfies_xor_mask(const OracleFunction &f, std::uint64_t s);

struct SimonResult {
    std::uint64_t s;
    int rounds;                             // quantum sampling rounds
    std::vector<std::uint64_t> equations;   // sampled y with y.s = 0 over GF(2)
};

/// Samples y from H-query-H rounds until the equations have rank n - 1, solves for the nonzero
/// candidate, and settles s = candidate versus s = 0 with two classical queries. Throws
/// PromiseError when no rank progress is possible within `max_rounds` (0 = 16n + 32).
SimonResult simon(QueryAccess &oracle, Rng &rng, int max_rounds = 0);

// ---------------------------------------------------------------------------------------------
// Grover

inline constexpr int kMaxGroverQubits = 20;

/// floor((pi / 4) sqrt(2^n / t)).
int grover_iterations(int n, std::uint64_t solutions);

/// Independent sweeps used to push the error below eps: ceil(log2(1 / eps)).
int grover_repetitions(double eps);

/// Worst-case query count of grover_search: every sweep runs to completion.
std::uint64_t grover_query_budget(int n, double eps);

/// Documented constant c with grover_query_budget(n, eps) <= c sqrt(2^n ln(1/eps)) for
/// 2 <= n <= 20 and eps in [0.01, 0.5]. Checked in the unit tests.
inline constexpr double kGroverBudgetConstant = 10.0;

struct GroverRun {
    int n = 0;
    std::uint64_t queries = 0;
    std::uint64_t aux_gates = 0;  // H gates and reflections outside the oracle
    std::optional<std::uint64_t> witness;
    bool success = false;  // a witness was found and re-verified
    int measurements = 0;
};

/// Runs `iterations` Grover iterations from the uniform superposition without measuring.
/// Register layout: input [0, n), phase target n (in (|0> - |1>)/sqrt2), workspace after.
StateVector grover_state(QueryAccess &oracle, int iterations, std::uint64_t *aux_gates = nullptr);

/// Fixed iteration count, one measurement, one classical verification query.
GroverRun grover_fixed(QueryAccess &oracle, int iterations, Rng &rng);

/// Unknown number of solutions. Each sweep tries the guesses t = 2^n, 2^(n-1), ..., 1 with
/// grover_iterations(n, t) iterations, verifying every measured candidate classically; up to
/// grover_repetitions(eps) sweeps run. Never reports an unverified witness.
GroverRun grover_search(QueryAccess &oracle, double eps, Rng &rng);

struct DecisionResult {
    int value = 0;
    std::uint64_t queries = 0;
    std::optional<std::uint64_t> witness;  // x with f(x) = 1 for OR, f(x) = 0 for a false AND
};

DecisionResult grover_or(QueryAccess &oracle, double eps, Rng &rng);
/// AND(f) = NOT OR(NOT f).
DecisionResult grover_and(QueryAccess &oracle, double eps, Rng &rng);

struct NestedResult {
    int value = 0;
    std::uint64_t queries = 0;          // outer queries x inner cost per outer query
    std::uint64_t outer_queries = 0;
    std::uint64_t inner_cost = 0;       // worst-case queries of one amplified inner AND
    std::optional<std::uint64_t> x1;    // outer witness when value = 1
};

/// Documented constant c with nested_or_and queries <= c sqrt(2^n n ln(1/eps)) for the desk
/// sizes in the tests (n <= 16, eps in [0.01, 0.25]).
inline constexpr double kNestedBudgetConstant = 200.0;

/// OR over x1 of AND over x2 of f(x1, x2); f is indexed x1 << n2 | x2. The outer search runs on
/// g(x1) = AND_x2 f(x1, x2) where each g value comes from an inner AND amplified to error
/// eps / (2 B), B being the outer query budget; the outer search gets eps / 2.
NestedResult nested_or_and(const OracleFunction &f, int n1, int n2, double eps, Rng &rng);

// ---------------------------------------------------------------------------------------------
// Satisfiability through the compiled oracle

struct QuantumSatResult {
    bool satisfiable = false;
    std::optional<std::uint64_t> witness;
    std::uint64_t queries = 0;
    std::uint64_t gates_per_query = 0;
    std::uint64_t aux_gates = 0;
    std::uint64_t total_gates = 0;  // queries * gates_per_query + aux_gates
    int ancillas = 0;
    bool gate_level = false;        // oracle executed gate by gate on the state vector
};

inline constexpr int kMaxSatQuantumInputs = 12;

/// Decode, compile, then search with the compiled oracle. The compiled circuit runs gate by gate
/// when the whole register fits in 20 qubits; otherwise its basis action (ancillas verified
/// clean on every input) is applied as a permutation.
QuantumSatResult quantum_sat(const CircuitEncoding &encoding, double eps, Rng &rng);

/// QueryAccess backed by a compiled reversible oracle.
class CompiledOracleAccess : public QueryAccess {
   public:
    CompiledOracleAccess(CompiledOracle oracle, QueryCounter &counter, bool gate_level);

    int input_bits() const override {
        return oracle_.input_bits;
    }
    int output_bits() const override {
        return oracle_.output_bits;
    }
    int workspace_qubits() const override {
        return gate_level_ ? oracle_.ancilla_bits : 0;
    }
    std::uint64_t query(std::uint64_t x) override;
    void query(StateVector &state, const QueryRegisters &regs) override;
    const QueryCounter &counter() const override {
        return counter_;
    }
    std::uint64_t peek(std::uint64_t x) const override {
        return table_(x);
    }
    const CompiledOracle &compiled() const {
        return oracle_;
    }

   private:
    CompiledOracle oracle_;
    OracleFunction table_;
    ReversibleQuery query_;
    QueryCounter &counter_;
    bool gate_level_;
};

// ---------------------------------------------------------------------------------------------
// Parity

struct ParityResult {
    int value;
    std::uint64_t queries;
};

/// Classical PARITY(f) = sum f(x) mod 2 by querying all 2^n points (n <= 20).
ParityResult parity_brute(QueryAccess &oracle);

// ---------------------------------------------------------------------------------------------
// Order finding and factoring

struct OrderResult {
    std::uint64_t a;
    std::uint64_t modulus;
    std::uint64_t r;  // least r > 0 with a^r = 1 mod N
};

/// Iterated multiplication, N <= 2^20. Throws InputError when gcd(a, N) != 1.
OrderResult brute_force_order(std::uint64_t a, std::uint64_t modulus);

using OrderSource = std::function<std::uint64_t(std::uint64_t a, std::uint64_t modulus)>;

/// One reduction step for base a coprime to N: with r = order(a, N) even and a^(r/2) != -1,
/// returns (gcd(a^(r/2) - 1, N), gcd(a^(r/2) + 1, N)); otherwise nothing.
std::optional<std::pair<std::uint64_t, std::uint64_t>> split_with_base(std::uint64_t a, std::uint64_t modulus,
                                                                       const OrderSource &order);

struct FactorResult {
    std::uint64_t n;
    std::vector<std::uint64_t> factors;  // ascending, with multiplicity
    bool complete;                       // every factor certified prime and the product is n
    int attempts;                        // random bases drawn
    int order_calls;
};

/// Splits N with random bases: a gcd hit is used directly, otherwise an even order r with
/// a^(r/2) != -1 mod N yields gcd(a^(r/2) - 1, N). Even factors and perfect powers are handled
/// first, and primes are certified with 20 Solovay-Strassen rounds. A split that needs more than
/// `attempts_per_split` bases leaves its composite in the list and clears `complete`.
FactorResult factor_from_order(std::uint64_t n, const OrderSource &order, Rng &rng, int attempts_per_split = 64);

}  // namespace qcw

#endif
