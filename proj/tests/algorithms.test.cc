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


#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "qcw/algorithms.h"
#include "qcw/bits.h"
#include "qcw/errors.h"
#include "qcw/number_theory.h"
#include "reference.h"

namespace qcw {
namespace {

OracleFunction marked_function(int n, const std::set<std::uint64_t> &marked) {
    return OracleFunction::tabulate(n, 1, [&](std::uint64_t x) { return marked.count(x) ? 1u : 0u; });
}

TEST(Deutsch, ExactOnAllInstances) {
    Rng rng(1);
    for (int c0 = 0; c0 < 2; ++c0) {
        for (int c1 = 0; c1 < 2; ++c1) {
            const DeutschInstance inst{c0, c1};
            QueryCounter counter;
            LocalQueryAccess access(inst.oracle(), counter);
            const DeutschResult r = deutsch(access, rng);
            EXPECT_EQ(r.c1, c1);
            EXPECT_NEAR(r.outcome_probability, 1.0, 1e-12);
            EXPECT_EQ(counter.quantum, 1u);
            EXPECT_EQ(counter.classical, 0u);
            // (-1)^c0 |c1>|1>
            const std::uint64_t idx = (static_cast<std::uint64_t>(c1) << 1) | 1u;
            EXPECT_NEAR(std::abs(r.final_state[idx] - Amplitude(c0 ? -1.0 : 1.0)), 0.0, 1e-12);
        }
    }
}

TEST(Deutsch, ClassicalTwoQuery) {
    for (int c0 = 0; c0 < 2; ++c0) {
        for (int c1 = 0; c1 < 2; ++c1) {
            QueryCounter counter;
            LocalQueryAccess access(DeutschInstance{c0, c1}.oracle(), counter);
            EXPECT_EQ(classical_deutsch_two_query(access), c1);
            EXPECT_EQ(counter.classical, 2u);
        }
    }
}

TEST(Deutsch, NoOneQueryClassicalStrategy) {
    const auto refutations = classical_deutsch_impossibility();
    ASSERT_EQ(refutations.size(), 8u);
    std::set<std::pair<int, int>> seen;
    for (const auto &r : refutations) {
        const auto &s = r.strategy;
        seen.insert({s.query_point, s.post_table});
        EXPECT_NE(s.answer(r.failing(s.query_point)), r.failing.c1);
        EXPECT_EQ(r.collision_a(s.query_point), r.collision_b(s.query_point));
        EXPECT_NE(r.collision_a.c1, r.collision_b.c1);
        if (s.query_point == 0) {
            EXPECT_EQ(r.collision_a.c0, r.collision_b.c0);
        }
    }
    EXPECT_EQ(seen.size(), 8u);
}

TEST(Simon, SmallExample) {
    // s = 11: 00,11 -> 00 and 01,10 -> 01.
    const OracleFunction f(2, 2, {0b00, 0b01, 0b01, 0b00});
    EXPECT_TRUE(satisfies_xor_mask(f, 0b11));
    EXPECT_FALSE(satisfies_xor_mask(f, 0b01));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        QueryCounter counter;
        LocalQueryAccess access(f, counter);
        EXPECT_EQ(simon(access, rng).s, 0b11u);
    }
}

TEST(Simon, BijectionGivesZero) {
    Rng rng(4);
    for (int n = 1; n <= 6; ++n) {
        const SimonInstance inst = random_simon_instance(n, rng, 0);
        EXPECT_TRUE(inst.f.is_bijective());
        QueryCounter counter;
        LocalQueryAccess access(inst.f, counter);
        EXPECT_EQ(simon(access, rng).s, 0u);
    }
}

TEST(Simon, RandomInstancesAndOrthogonality) {
    Rng rng(5);
    for (int n : {4, 6}) {
        double rounds = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const SimonInstance inst = random_simon_instance(n, rng);
            EXPECT_TRUE(satisfies_xor_mask(inst.f, inst.s));
            QueryCounter counter;
            LocalQueryAccess access(inst.f, counter);
            const SimonResult r = simon(access, rng);
            ASSERT_EQ(r.s, inst.s);
            EXPECT_TRUE(satisfies_xor_mask(inst.f, r.s));
            for (auto y : r.equations) {
                EXPECT_EQ(popcount(y & inst.s) % 2, 0);
            }
            EXPECT_EQ(counter.quantum, static_cast<std::uint64_t>(r.rounds));
            EXPECT_EQ(counter.classical, 2u);
            rounds += r.rounds;
        }
        EXPECT_LE(rounds / 100, 3.0 * n);
    }
}

TEST(Simon, PromiseViolation) {
    Rng rng(6);
    // Periodic under a two-dimensional subgroup, so sampled vectors never reach rank n - 1.
    const OracleFunction f = OracleFunction::tabulate(3, 3, [](std::uint64_t x) { return x & 0b100u; });
    QueryCounter counter;
    LocalQueryAccess access(f, counter);
    EXPECT_THROW(simon(access, rng, 40), PromiseError);
    EXPECT_EQ(counter.quantum, 40u);
    QueryCounter big_counter;
    LocalQueryAccess big(OracleFunction::tabulate(11, 11, [](std::uint64_t x) { return x; }), big_counter);
    EXPECT_THROW(simon(big, rng), ResourceError);
    EXPECT_THROW(random_simon_instance(3, rng, 9), InputError);
}

TEST(Grover, ClosedFormIterations) {
    EXPECT_EQ(grover_iterations(10, 1), 25);
    EXPECT_EQ(grover_iterations(8, 16), 3);
    QueryCounter counter;
    LocalQueryAccess access(marked_function(10, {345}), counter);
    const StateVector s = grover_state(access, 25);
    const double p = probability_of(s, [](std::uint64_t i) { return (i >> 1) == 345; });
    EXPECT_NEAR(p, ref::grover_success(10, 1, 25), 1e-9);
    EXPECT_NEAR(p, std::pow(std::sin(51 * std::asin(std::pow(2.0, -5))), 2), 1e-9);
    EXPECT_GT(p, 0.999);
    EXPECT_EQ(counter.quantum, 25u);
}

TEST(Grover, MatchesRotationFormulaForManyCounts) {
    Rng rng(7);
    for (int n : {3, 5, 7}) {
        for (std::uint64_t t : {1u, 2u, 3u, 5u}) {
            std::set<std::uint64_t> marked;
            while (marked.size() < t) {
                marked.insert(uniform_below(rng, std::uint64_t{1} << n));
            }
            for (int k = 0; k <= 6; ++k) {
                QueryCounter counter;
                LocalQueryAccess access(marked_function(n, marked), counter);
                const StateVector s = grover_state(access, k);
                const double p = probability_of(s, [&](std::uint64_t i) { return marked.count(i >> 1) > 0; });
                ASSERT_NEAR(p, ref::grover_success(n, t, k), 1e-9) << n << " " << t << " " << k;
            }
        }
    }
}

TEST(Grover, NothingMarked) {
    Rng rng(8);
    QueryCounter counter;
    LocalQueryAccess access(marked_function(6, {}), counter);
    const GroverRun r = grover_search(access, 0.05, rng);
    EXPECT_FALSE(r.success);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.queries, grover_query_budget(6, 0.05));
    EXPECT_EQ(counter.count(), r.queries);
}

TEST(Grover, SixteenMarkedOfTwoFiftySix) {
    Rng rng(9);
    std::set<std::uint64_t> marked;
    for (std::uint64_t i = 0; i < 16; ++i) {
        marked.insert(i * 16 + (i % 5));
    }
    const int k = grover_iterations(8, 16);
    EXPECT_LE(k, static_cast<int>(kGroverBudgetConstant * std::sqrt(256.0 / 16)));
    int ok = 0;
    for (int trial = 0; trial < 200; ++trial) {
        QueryCounter counter;
        LocalQueryAccess access(marked_function(8, marked), counter);
        const GroverRun r = grover_search(access, 0.05, rng);
        if (r.success) {
            ASSERT_TRUE(marked.count(*r.witness));
            ++ok;
        }
    }
    EXPECT_GE(ok, 190);
    EXPECT_GT(ref::grover_success(8, 16, k), 0.9);
}

TEST(Grover, BudgetWithinDocumentedConstant) {
    for (int n = 2; n <= 20; ++n) {
        for (double eps : {0.5, 0.25, 0.1, 0.05, 0.01}) {
            const double bound = kGroverBudgetConstant * std::sqrt(std::ldexp(1.0, n) * std::log(1.0 / eps));
            EXPECT_LE(static_cast<double>(grover_query_budget(n, eps)), bound) << n << " " << eps;
        }
    }
    EXPECT_EQ(grover_repetitions(0.5), 1);
    EXPECT_EQ(grover_repetitions(0.01), 7);
}

TEST(Grover, FailureRateWithinEpsilon) {
    Rng rng(10);
    const double eps = 0.1;
    for (int n : {2, 4, 6}) {
        for (std::uint64_t t : {std::uint64_t{1}, std::uint64_t{1} << (n - 1)}) {
            std::set<std::uint64_t> marked;
            while (marked.size() < t) {
                marked.insert(uniform_below(rng, std::uint64_t{1} << n));
            }
            int failures = 0;
            const int trials = 400;
            for (int trial = 0; trial < trials; ++trial) {
                QueryCounter counter;
                LocalQueryAccess access(marked_function(n, marked), counter);
                const GroverRun r = grover_search(access, eps, rng);
                failures += r.success ? 0 : 1;
                ASSERT_LE(r.queries, grover_query_budget(n, eps));
            }
            // Allow 3 sigma of sampling noise on top of eps.
            EXPECT_LE(failures, trials * eps + 3 * std::sqrt(trials * eps)) << n << " " << t;
        }
    }
}

TEST(Grover, OrAndDecisions) {
    Rng rng(11);
    QueryCounter counter;
    LocalQueryAccess ones(OracleFunction::tabulate(5, 1, [](std::uint64_t) { return 1u; }), counter);
    EXPECT_EQ(grover_or(ones, 0.05, rng).value, 1);
    EXPECT_EQ(grover_and(ones, 0.05, rng).value, 1);
    LocalQueryAccess zeros(marked_function(5, {}), counter);
    EXPECT_EQ(grover_or(zeros, 0.05, rng).value, 0);
    EXPECT_EQ(grover_and(zeros, 0.05, rng).value, 0);
    LocalQueryAccess one(marked_function(5, {9}), counter);
    const DecisionResult r = grover_or(one, 0.01, rng);
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(r.witness, std::optional<std::uint64_t>(9));
    LocalQueryAccess all_but(OracleFunction::tabulate(5, 1, [](std::uint64_t x) { return x != 17 ? 1u : 0u; }), counter);
    const DecisionResult a = grover_and(all_but, 0.01, rng);
    EXPECT_EQ(a.value, 0);
    EXPECT_EQ(a.witness, std::optional<std::uint64_t>(17));
}

int brute_or_and(const OracleFunction &f, int n1, int n2) {
    for (std::uint64_t x1 = 0; x1 < (std::uint64_t{1} << n1); ++x1) {
        bool all = true;
        for (std::uint64_t x2 = 0; x2 < (std::uint64_t{1} << n2); ++x2) {
            all = all && f((x1 << n2) | x2) == 1;
        }
        if (all) {
            return 1;
        }
    }
    return 0;
}

TEST(Nested, SingleTrueRow) {
    Rng rng(12);
    const OracleFunction f = OracleFunction::tabulate(8, 1, [](std::uint64_t x) { return (x >> 4) == 0b0110 ? 1u : 0u; });
    EXPECT_EQ(brute_or_and(f, 4, 4), 1);
    const NestedResult r = nested_or_and(f, 4, 4, 0.05, rng);
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(r.x1, std::optional<std::uint64_t>(0b0110));
    EXPECT_EQ(r.queries, r.outer_queries * r.inner_cost);
}

TEST(Nested, RandomFunctionsMatchBruteForce) {
    Rng rng(13);
    const double eps = 0.05;
    const double bound = kNestedBudgetConstant * std::sqrt(1024.0 * 10 * std::log(1 / eps));
    for (int trial = 0; trial < 50; ++trial) {
        const int n1 = 5;
        const int n2 = 5;
        // Rows are all-ones with probability 1/8 so both answers occur.
        std::vector<std::uint64_t> table(1024);
        for (std::uint64_t x1 = 0; x1 < 32; ++x1) {
            const bool full = uniform_below(rng, 8) == 0;
            const std::uint64_t hole = uniform_below(rng, 32);
            for (std::uint64_t x2 = 0; x2 < 32; ++x2) {
                table[(x1 << 5) | x2] = full || x2 != hole ? 1u : coin_flip(rng);
            }
        }
        const OracleFunction f(10, 1, table);
        const NestedResult r = nested_or_and(f, n1, n2, eps, rng);
        EXPECT_EQ(r.value, brute_or_and(f, n1, n2)) << trial;
        EXPECT_LE(static_cast<double>(r.queries), bound);
    }
    EXPECT_THROW(nested_or_and(OracleFunction(2, 1, {0, 0, 0, 0}), 1, 2, 0.05, rng), InputError);
}

TEST(QuantumSat, Examples) {
    Rng rng(14);
    const QuantumSatResult fig = quantum_sat(encode(parity_five_gate()), 0.05, rng);
    EXPECT_TRUE(fig.satisfiable);
    ASSERT_TRUE(fig.witness.has_value());
    EXPECT_EQ(evaluate(parity_five_gate(), *fig.witness), 1);
    EXPECT_TRUE(fig.gate_level);
    EXPECT_EQ(fig.total_gates, fig.queries * fig.gates_per_query + fig.aux_gates);

    BoolCircuit zero(2);
    zero.add_and(0, zero.add_not(0));
    const QuantumSatResult none = quantum_sat(encode(zero), 0.05, rng);
    EXPECT_FALSE(none.satisfiable);
    EXPECT_FALSE(none.witness.has_value());

    CircuitEncoding broken = encode(zero);
    broken.bits.pop_back();
    EXPECT_THROW(quantum_sat(broken, 0.05, rng), DecodeError);
}

TEST(QuantumSat, AgreesWithBruteForce) {
    Rng rng(15);
    int agree = 0;
    const int trials = 30;
    for (int trial = 0; trial < trials; ++trial) {
        const BoolCircuit c = random_bool_circuit(8, 12, rng);
        const QuantumSatResult q = quantum_sat(encode(c), 0.05, rng);
        const SatResult b = brute_force_sat(c);
        if (q.satisfiable) {
            ASSERT_EQ(evaluate(c, *q.witness), 1);
        }
        agree += q.satisfiable == b.satisfiable ? 1 : 0;
    }
    EXPECT_GE(agree, trials - 3);
}

TEST(CompiledOracleAccess, GateLevelMatchesTable) {
    Rng rng(16);
    const BoolCircuit c = random_bool_circuit(4, 8, rng);
    for (bool gate_level : {true, false}) {
        QueryCounter counter;
        CompiledOracleAccess access(compile_bool_circuit(c), counter, gate_level);
        for (std::uint64_t x = 0; x < 16; ++x) {
            EXPECT_EQ(access.query(x), static_cast<std::uint64_t>(evaluate(c, x)));
        }
        const int work = access.workspace_qubits();
        EXPECT_EQ(work, gate_level ? access.compiled().ancilla_bits : 0);
        StateVector s = StateVector::basis(5 + work, 0);
        for (int q = 0; q < 4; ++q) {
            s.apply_one_qubit(gate_matrix(GateKind::H), q);
        }
        QueryRegisters regs{{0, 1, 2, 3}, {4}, {}};
        for (int w = 0; w < work; ++w) {
            regs.workspace.push_back(5 + w);
        }
        access.query(s, regs);
        for (std::uint64_t x = 0; x < 16; ++x) {
            const std::uint64_t idx = ((x << 1) | static_cast<std::uint64_t>(evaluate(c, x))) << work;
            EXPECT_NEAR(std::norm(s[idx]), 1.0 / 16, 1e-12);
        }
        EXPECT_EQ(counter.classical, 16u);
        EXPECT_EQ(counter.quantum, 1u);
    }
}

TEST(Parity, BruteForce) {
    Rng rng(17);
    QueryCounter c0;
    LocalQueryAccess zero(marked_function(5, {}), c0);
    EXPECT_EQ(parity_brute(zero).value, 0);
    EXPECT_EQ(c0.classical, 32u);
    QueryCounter c1;
    LocalQueryAccess single(marked_function(4, {11}), c1);
    const ParityResult r = parity_brute(single);
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(r.queries, 16u);
    std::vector<std::uint64_t> table(256);
    int ones = 0;
    for (auto &v : table) {
        v = coin_flip(rng);
        ones += static_cast<int>(v);
    }
    QueryCounter c2;
    LocalQueryAccess random(OracleFunction(8, 1, table), c2);
    EXPECT_EQ(parity_brute(random).value, ones % 2);
}

TEST(Order, BruteForce) {
    EXPECT_EQ(brute_force_order(2, 5).r, 4u);
    EXPECT_EQ(brute_force_order(7, 15).r, 4u);
    EXPECT_EQ(brute_force_order(1, 9).r, 1u);
    EXPECT_THROW(brute_force_order(6, 15), InputError);
    for (std::uint64_t n : {21u, 35u, 97u, 221u}) {
        for (std::uint64_t a = 2; a < n; ++a) {
            if (gcd(a, n) != 1) {
                continue;
            }
            const std::uint64_t r = brute_force_order(a, n).r;
            ASSERT_EQ(pow_mod(a, r, n), 1u);
            for (std::uint64_t j = 1; j < r; ++j) {
                ASSERT_NE(pow_mod(a, j, n), 1u);
            }
        }
    }
}

std::uint64_t order_oracle(std::uint64_t a, std::uint64_t n) {
    return brute_force_order(a, n).r;
}

TEST(Factoring, SplitWithBase) {
    const auto split = split_with_base(2, 15, order_oracle);
    ASSERT_TRUE(split.has_value());
    EXPECT_EQ(*split, std::make_pair(std::uint64_t{3}, std::uint64_t{5}));
    // 14 has order 2 mod 15 but 14 = -1.
    EXPECT_FALSE(split_with_base(14, 15, order_oracle).has_value());
    // Odd order.
    EXPECT_FALSE(split_with_base(4, 7 * 3, [](std::uint64_t, std::uint64_t) { return std::uint64_t{3}; }).has_value());
    EXPECT_THROW(split_with_base(2, 15, [](std::uint64_t, std::uint64_t) { return std::uint64_t{3}; }),
                 ContractViolation);
}

TEST(Factoring, FactorsSmallComposites) {
    Rng rng(18);
    for (std::uint64_t n : {15u, 21u, 35u, 91u, 2021u, 8u, 49u, 1001u, 3u * 3u * 5u * 7u, 65537u, 2u}) {
        const FactorResult r = factor_from_order(n, order_oracle, rng);
        EXPECT_TRUE(r.complete) << n;
        EXPECT_EQ(r.factors, ref::prime_factors(n)) << n;
        EXPECT_EQ(std::accumulate(r.factors.begin(), r.factors.end(), std::uint64_t{1}, std::multiplies<>()), n);
    }
    EXPECT_THROW(factor_from_order(1, order_oracle, rng), InputError);
}

TEST(Factoring, ThirtyFiveWithinTwentyAttempts) {
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const FactorResult r = factor_from_order(35, order_oracle, rng, 20);
        ASSERT_TRUE(r.complete);
        EXPECT_EQ(r.factors, (std::vector<std::uint64_t>{5, 7}));
        EXPECT_LE(r.attempts, 20);
    }
}

TEST(Factoring, UselessOrderSourceExhaustsBudget) {
    Rng rng(20);
    // 2 * phi(N) is a valid exponent with a^(r/2) = 1, so no base ever splits N.
    const std::uint64_t n = 1009 * 1013;
    const std::uint64_t twice_phi = 2 * 1008 * 1012;
    const FactorResult r = factor_from_order(n, [&](std::uint64_t, std::uint64_t) { return twice_phi; }, rng, 8);
    EXPECT_FALSE(r.complete);
    EXPECT_EQ(r.factors, std::vector<std::uint64_t>{n});
    EXPECT_EQ(r.attempts, 8);
}

}  // namespace
}  // namespace qcw
