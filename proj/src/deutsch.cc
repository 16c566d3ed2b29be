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


#include <array>

#include "qcw/algorithms.h"
#include "qcw/errors.h"
#include "qcw/gates.h"

namespace qcw {

OracleFunction DeutschInstance::oracle() const {
    return OracleFunction(1, 1, {static_cast<std::uint64_t>((*this)(0)), static_cast<std::uint64_t>((*this)(1))});
}

DeutschResult deutsch(QueryAccess &oracle, Rng &rng) {
    if (oracle.input_bits() != 1 || oracle.output_bits() != 1) {
        throw InputError("Deutsch's problem needs a 1-bit to 1-bit oracle");
    }
    const int work = oracle.workspace_qubits();
    StateVector state = StateVector::basis(2 + work, std::uint64_t{1} << work);
    const UnitaryMatrix h = gate_matrix(GateKind::H);
    state.apply_one_qubit(h, 0);
    state.apply_one_qubit(h, 1);
    QueryRegisters regs{{0}, {1}, {}};
    for (int w = 0; w < work; ++w) {
        regs.workspace.push_back(2 + w);
    }
    oracle.query(state, regs);
    state.apply_one_qubit(h, 0);
    state.apply_one_qubit(h, 1);

    const std::uint64_t top = state.qubit_mask(0);
    const double p1 = probability_of(state, [top](std::uint64_t i) { return (i & top) != 0; });
    const int c1 = uniform_unit(rng) < p1 ? 1 : 0;
    return {c1, c1 ? p1 : 1.0 - p1, std::move(state)};
}

int classical_deutsch_two_query(QueryAccess &oracle) {
    if (oracle.input_bits() != 1 || oracle.output_bits() != 1) {
        throw InputError("Deutsch's problem needs a 1-bit to 1-bit oracle");
    }
    std::uint64_t a = 0, b = 0;
    b ^= oracle.query(a);
    a ^= 1;
    b ^= oracle.query(a);
    return static_cast<int>(b);
}

std::vector<StrategyRefutation> classical_deutsch_impossibility() {
    const std::array<DeutschInstance, 4> instances{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    std::vector<StrategyRefutation> out;
    for (int t = 0; t < 2; ++t) {
        for (int post = 0; post < 4; ++post) {
            const OneQueryStrategy s{t, post};
            StrategyRefutation ref{s, {}, {}, {}};
            bool failing_found = false, collision_found = false;
            for (const auto &f : instances) {
                if (!failing_found && s.answer(f(t)) != f.c1) {
                    ref.failing = f;
                    failing_found = true;
                }
                for (const auto &g : instances) {
                    if (!collision_found && f(t) == g(t) && f.c1 != g.c1) {
                        ref.collision_a = f;
                        ref.collision_b = g;
                        collision_found = true;
                    }
                }
            }
            if (!failing_found || !collision_found) {
                throw ContractViolation("one-query strategy without refutation");
            }
            out.push_back(ref);
        }
    }
    return out;
}

}  // namespace qcw
