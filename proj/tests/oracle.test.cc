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
#include <numbers>

#include "qcw/bits.h"
#include "qcw/errors.h"
#include "qcw/number_theory.h"
#include "qcw/oracle.h"
#include "reference.h"
#include "test_util.h"

namespace qcw {
namespace {

OracleFunction and2() {
    return OracleFunction(2, 1, {0, 0, 0, 1});
}

TEST(OracleFunction, Validation) {
    EXPECT_THROW(OracleFunction(2, 1, {0, 0, 0}), InputError);
    EXPECT_THROW(OracleFunction(1, 1, {0, 2}), InputError);
    EXPECT_THROW(OracleFunction::tabulate(25, 1, [](std::uint64_t) { return 0; }), ResourceError);
    const auto lazy = OracleFunction::from_callable(40, 1, [](std::uint64_t x) { return x & 1; });
    EXPECT_FALSE(lazy.is_tabulated());
    EXPECT_EQ(lazy(7), 1u);
    EXPECT_THROW(lazy.table(), InputError);
    EXPECT_TRUE(OracleFunction(2, 2, {2, 0, 3, 1}).is_bijective());
    EXPECT_FALSE(OracleFunction(2, 2, {2, 0, 2, 1}).is_bijective());
}

TEST(ClassicalQuery, Examples) {
    const ReversibleQuery q(and2());
    QueryCounter counter;
    EXPECT_EQ(classical_query(q, 0b11, 0, counter), std::make_pair(std::uint64_t{3}, std::uint64_t{1}));
    EXPECT_EQ(classical_query(q, 0b11, 1, counter).second, 0u);
    EXPECT_EQ(classical_query(q, 0b10, 1, counter).second, 1u);
    EXPECT_EQ(counter.classical, 3u);
    EXPECT_EQ(counter.quantum, 0u);
    EXPECT_THROW(classical_query(q, 4, 0, counter), InputError);
    EXPECT_THROW(classical_query(q, 0, 2, counter), InputError);
    EXPECT_EQ(counter.count(), 3u);
}

TEST(ReversibleQuery, InvolutionExhaustive) {
    Rng rng(4);
    for (int m = 1; m <= 8; ++m) {
        for (int k = 1; k <= 16 - m && k <= 8; k += 3) {
            std::vector<std::uint64_t> table(std::size_t{1} << m);
            for (auto &v : table) {
                v = uniform_below(rng, std::uint64_t{1} << k);
            }
            const ReversibleQuery q(OracleFunction(m, k, table));
            const auto perm = q.as_permutation();
            for (std::uint64_t i = 0; i < perm.size(); ++i) {
                ASSERT_EQ(perm[perm[i]], i);
                ASSERT_EQ(perm[i] >> k, i >> k);
                const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
                ASSERT_EQ(perm[i] & mask, (i & mask) ^ table[i >> k]);
            }
        }
    }
}

TEST(QuantumQuery, PhaseKickback) {
    // f(0) = 0, f(1) = 1 on (|0> + |1>)(|0> - |1>) / 2.
    const ReversibleQuery q(OracleFunction(1, 1, {0, 1}));
    StateVector s = StateVector::from_amplitudes({0.5, -0.5, 0.5, -0.5});
    QueryCounter counter;
    quantum_query(s, q, {{0}, {1}, {}}, counter);
    const std::vector<Amplitude> expected = {0.5, -0.5, -0.5, 0.5};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-12);
    }
    EXPECT_EQ(counter.quantum, 1u);
}

TEST(QuantumQuery, BasisAndSelfInverse) {
    Rng rng(8);
    const ReversibleQuery q(OracleFunction::tabulate(3, 2, [](std::uint64_t x) { return (x * 3) & 3; }));
    QueryCounter counter;
    for (std::uint64_t x = 0; x < 8; ++x) {
        StateVector s = StateVector::basis(5, x << 2);
        quantum_query(s, q, {{0, 1, 2}, {3, 4}, {}}, counter);
        EXPECT_NEAR(std::norm(s[(x << 2) | ((x * 3) & 3)]), 1.0, 1e-12);
    }
    const StateVector start = testing::random_state(6, rng);
    StateVector s = start;
    // Registers in shuffled order with a spare qubit.
    const QueryRegisters regs{{4, 0, 2}, {5, 1}, {}};
    quantum_query(s, q, regs, counter);
    EXPECT_GT(testing::max_diff(s, start), 1e-3);
    quantum_query(s, q, regs, counter);
    EXPECT_LT(testing::max_diff(s, start), 1e-12);
    EXPECT_EQ(counter.quantum, 10u);
    EXPECT_THROW(quantum_query(s, q, {{0, 1, 2}, {2, 3}, {}}, counter), InputError);
    EXPECT_THROW(quantum_query(s, q, {{0, 1}, {2, 3}, {}}, counter), InputError);
    EXPECT_THROW(quantum_query(s, q, {{0, 1, 2}, {3, 9}, {}}, counter), InputError);
}

TEST(QuantumQuery, MatchesDenseReference) {
    Rng rng(12);
    const ReversibleQuery q(OracleFunction::tabulate(2, 1, [](std::uint64_t x) { return x == 2; }));
    const StateVector start = testing::random_state(3, rng);
    StateVector s = start;
    QueryCounter counter;
    quantum_query(s, q, {{0, 1}, {2}, {}}, counter);
    // Doubly-controlled X with the first control negated.
    ref::Matrix u = ref::identity(8);
    std::swap(u[4], u[5]);
    const auto expected = ref::apply(u, testing::to_ref(start));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-12);
    }
}

TEST(NegatedAccess, FlipsBothPaths) {
    QueryCounter counter;
    LocalQueryAccess inner(OracleFunction(1, 1, {0, 1}), counter);
    NegatedAccess neg(inner);
    EXPECT_EQ(neg.query(0), 1u);
    EXPECT_EQ(neg.peek(1), 0u);
    StateVector s = StateVector::basis(2, 0b10);
    neg.query(s, {{0}, {1}, {}});
    EXPECT_NEAR(std::norm(s[0b10]), 1.0, 1e-12);
    EXPECT_EQ(counter.count(), 2u);
    LocalQueryAccess wide(OracleFunction(1, 2, {0, 1}), counter);
    EXPECT_THROW(NegatedAccess{wide}, InputError);
}

/// Runs the compiled circuit on every basis |x>|y>|0..0> and checks the oracle contract.
void expect_compiled_contract(const CompiledOracle &c, const std::function<std::uint64_t(std::uint64_t)> &f) {
    const int m = c.input_bits, k = c.output_bits, a = c.ancilla_bits;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) {
            const std::uint64_t in = ((x << k) | y) << a;
            const std::uint64_t out = permute_basis(c.circuit, in);
            ASSERT_EQ(out, ((x << k) | (y ^ f(x))) << a) << "x=" << x << " y=" << y;
        }
    }
}

TEST(Compile, TwoBitAndIsOneToffoli) {
    BoolCircuit c(2);
    c.add_and(0, 1);
    const CompiledOracle o = compile_bool_circuit(c);
    EXPECT_EQ(o.ancilla_bits, 0);
    ASSERT_EQ(o.circuit.size(), 1u);
    EXPECT_EQ(o.circuit.gates()[0].kind(), GateKind::Toffoli);
    EXPECT_EQ(o.circuit.gates()[0].wires(), (std::vector<int>{0, 1, 2}));
    expect_compiled_contract(o, [](std::uint64_t x) { return x == 3; });
}

TEST(Compile, ParityCircuitOnStatevector) {
    const CompiledOracle o = compile_bool_circuit(parity_five_gate());
    EXPECT_EQ(o.input_bits, 2);
    EXPECT_EQ(o.output_bits, 1);
    for (std::uint64_t x = 0; x < 4; ++x) {
        StateVector s = StateVector::basis(o.width(), x << (1 + o.ancilla_bits));
        apply_circuit(s, o.circuit);
        const std::uint64_t want = ((x << 1) | (popcount(x) & 1)) << o.ancilla_bits;
        EXPECT_NEAR(std::norm(s[want]), 1.0, 1e-12);
    }
    expect_compiled_contract(o, [](std::uint64_t x) { return popcount(x) & 1; });
    EXPECT_LE(o.circuit.size(), 6 * 5 + 1u);
}

TEST(Compile, RandomCircuitsRestoreAncillasExhaustively) {
    Rng rng(2024);
    for (int trial = 0; trial < 24; ++trial) {
        const int m = 2 + trial % 9;  // 2..10
        const int gates = 1 + static_cast<int>(uniform_below(rng, 30));
        const BoolCircuit c = random_bool_circuit(m, gates, rng);
        const CompiledOracle o = compile_bool_circuit(c);
        EXPECT_LE(o.circuit.size(), 6 * c.gate_count() + 1);
        expect_compiled_contract(o, [&](std::uint64_t x) { return evaluate(c, x); });
        const OracleFunction t = tabulate_compiled(o);
        for (std::uint64_t x = 0; x < t.table().size(); ++x) {
            ASSERT_EQ(t(x), static_cast<std::uint64_t>(evaluate(c, x)));
        }
    }
}

TEST(Compile, EightInputTwentyGateSuperposition) {
    Rng rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        const BoolCircuit c = random_bool_circuit(8, 20, rng);
        const CompiledOracle o = compile_bool_circuit(c);
        if (o.width() > 22) {
            continue;
        }
        // Uniform superposition over x; the compiled oracle should entangle f(x) and clear ancillas.
        StateVector s = StateVector::basis(o.width(), 0);
        for (int q = 0; q < 8; ++q) {
            apply_gate(s, Gate::h(q));
        }
        apply_circuit(s, o.circuit);
        for (std::uint64_t x = 0; x < 256; ++x) {
            const std::uint64_t idx = ((x << 1) | static_cast<std::uint64_t>(evaluate(c, x))) << o.ancilla_bits;
            ASSERT_NEAR(std::norm(s[idx]), 1.0 / 256, 1e-12);
        }
    }
}

TEST(Compile, MultipleOutputsAndErrors) {
    BoolCircuit c(3);
    const auto a = c.add_and(0, 1);
    const auto o = c.add_or(a, 2);
    const auto x = c.add_xor(0, 2);
    const CompiledOracle co = compile_bool_circuit(c, {o, x, 1});
    EXPECT_EQ(co.output_bits, 3);
    expect_compiled_contract(co, [&](std::uint64_t in) {
        const std::uint64_t b0 = (in >> 2) & 1, b1 = (in >> 1) & 1, b2 = in & 1;
        return (((b0 & b1) | b2) << 2) | ((b0 ^ b2) << 1) | b1;
    });
    BoolCircuit coin(1);
    coin.add_xor(0, coin.add_coin());
    EXPECT_THROW(compile_bool_circuit(coin), CompileError);
    EXPECT_THROW(compile_bool_circuit(c, {}), CompileError);
    EXPECT_THROW(compile_bool_circuit(c, {42}), CompileError);
}

TEST(ModExp, Examples) {
    const OracleFunction f = modexp_oracle(2, 5, 3);
    EXPECT_EQ(f((3u << 3) | 1u), (3u << 3) | 3u);
    EXPECT_EQ(f((5u << 3) | 6u), (5u << 3) | 6u);
    EXPECT_THROW(modexp_oracle(5, 10, 4), InputError);
    EXPECT_THROW(modexp_oracle(2, 9, 3), InputError);
    EXPECT_THROW(modexp_oracle(2, 5, 13), ResourceError);
}

TEST(ModExp, BijectiveForSmallWidths) {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t N = 2; N < (std::uint64_t{1} << n); ++N) {
            for (std::uint64_t a = 1; a < N; ++a) {
                if (gcd(a, N) != 1) {
                    continue;
                }
                const OracleFunction f = modexp_oracle(a, N, n);
                ASSERT_TRUE(f.is_bijective()) << a << " " << N;
                // Reference: y -> a^x y mod N by repeated multiplication.
                for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x += 5) {
                    std::uint64_t ax = 1;
                    for (std::uint64_t i = 0; i < x; ++i) {
                        ax = ax * a % N;
                    }
                    for (std::uint64_t y = 0; y < N; ++y) {
                        ASSERT_EQ(f((x << n) | y), (x << n) | (ax * y % N));
                    }
                }
            }
        }
    }
}

TEST(TruthTable, ParseAndFormat) {
    const OracleFunction f = parse_truth_table("# comment\n00 -> 1\n01 -> 0\n\n10 -> 0\n11 -> 1   # end\n");
    EXPECT_EQ(f.in_bits(), 2);
    EXPECT_EQ(f.table(), (std::vector<std::uint64_t>{1, 0, 0, 1}));
    EXPECT_EQ(parse_truth_table(format_truth_table(f)).table(), f.table());
    EXPECT_THROW(parse_truth_table(""), InputError);
    EXPECT_THROW(parse_truth_table("0 -> 1\n"), InputError);
    EXPECT_THROW(parse_truth_table("0 -> 1\n1 -> 10\n"), InputError);
    EXPECT_THROW(parse_truth_table("0 -> 1\n0 -> 1\n"), InputError);
    EXPECT_THROW(parse_truth_table("0 => 1\n1 -> 1\n"), InputError);
    EXPECT_THROW(parse_truth_table("0 -> 1\n2 -> 1\n"), InputError);
}

}  // namespace
}  // namespace qcw
