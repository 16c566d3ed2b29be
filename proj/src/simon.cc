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


#include <map>
#include <numeric>

#include "qcw/algorithms.h"
#include "qcw/errors.h"
#include "qcw/gates.h"

namespace qcw {

namespace {

constexpr int kMaxSimonBits = 10;  // 2n qubits on the dense simulator

/// Equations over GF(2) kept in reduced row echelon form, keyed by pivot bit.
class Gf2Rows {
   public:
    /// Returns true when `y` is independent of the rows so far.
    bool insert(std::uint64_t y) {
        for (const auto &[pivot, row] : rows_) {
            if (y >> pivot & 1) {
                y ^= row;
            }
        }
        if (y == 0) {
            return false;
        }
        const int pivot = 63 - __builtin_clzll(y);
        for (auto &[p, row] : rows_) {
            if (row >> pivot & 1) {
                row ^= y;
            }
        }
        rows_[pivot] = y;
        return true;
    }

    int rank() const {
        return static_cast<int>(rows_.size());
    }

    /// Unique nonzero solution of row . s = 0 when the rank is n - 1.
    std::uint64_t null_vector(int n) const {
        int free_bit = -1;
        for (int b = 0; b < n; ++b) {
            if (!rows_.count(b)) {
                free_bit = b;
                break;
            }
        }
        std::uint64_t s = std::uint64_t{1} << free_bit;
        for (const auto &[pivot, row] : rows_) {
            if (row >> free_bit & 1) {
                s |= std::uint64_t{1} << pivot;
            }
        }
        return s;
    }

   private:
    std::map<int, std::uint64_t> rows_;
};

}  // namespace

SimonInstance random_simon_instance(int n, Rng &rng, std::optional<std::uint64_t> s) {
    if (n < 1 || n > kMaxTableBits) {
        throw InputError("Simon instances need 1 <= n <= " + std::to_string(kMaxTableBits));
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t mask = s ? *s : 1 + uniform_below(rng, size - 1);
    if (mask >= size) {
        throw InputError("mask wider than n bits");
    }
    std::vector<std::uint64_t> values(size);
    std::iota(values.begin(), values.end(), 0);
    for (std::uint64_t i = size - 1; i > 0; --i) {
        std::swap(values[i], values[uniform_below(rng, i + 1)]);
    }
    std::vector<std::uint64_t> table(size);
    std::vector<bool> done(size, false);
    std::uint64_t next = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (done[x]) {
            continue;
        }
        table[x] = table[x ^ mask] = values[next++];
        done[x] = done[x ^ mask] = true;
    }
    return {n, mask, OracleFunction(n, n, std::move(table))};
}

bool satisfies_xor_mask(const OracleFunction &f, std::uint64_t s) {
    const int n = f.in_bits();
    const std::uint64_t size = std::uint64_t{1} << n;
    if (s >= size) {
        return false;
    }
    std::map<std::uint64_t, std::uint64_t> first;
    for (std::uint64_t x = 0; x < size; ++x) {
        const auto [it, fresh] = first.emplace(f(x), x);
        if (fresh) {
            continue;
        }
        // A repeated value must come from the partner x ^ s and nothing else.
        if (s == 0 || it->second != (x ^ s)) {
            return false;
        }
    }
    if (s != 0) {
        for (std::uint64_t x = 0; x < size; ++x) {
            if (f(x) != f(x ^ s)) {
                return false;
            }
        }
    }
    return true;
}

SimonResult simon(QueryAccess &oracle, Rng &rng, int max_rounds) {
    const int n = oracle.input_bits();
    if (oracle.output_bits() != n) {
        throw InputError("Simon's problem needs an n-bit to n-bit oracle");
    }
    if (n < 1 || n > kMaxSimonBits) {
        throw ResourceError("Simon sampling supports 1 <= n <= " + std::to_string(kMaxSimonBits));
    }
    const int work = oracle.workspace_qubits();
    if (2 * n + work > kMaxDenseQubits) {
        throw ResourceError("Simon register exceeds the dense simulator");
    }
    if (max_rounds <= 0) {
        max_rounds = 16 * n + 32;
    }
    QueryRegisters regs;
    for (int i = 0; i < n; ++i) {
        regs.input.push_back(i);
        regs.output.push_back(n + i);
    }
    for (int w = 0; w < work; ++w) {
        regs.workspace.push_back(2 * n + w);
    }
    const UnitaryMatrix h = gate_matrix(GateKind::H);

    SimonResult result{0, 0, {}};
    Gf2Rows rows;
    while (rows.rank() < n - 1) {
        if (result.rounds >= max_rounds) {
            throw PromiseError("no rank-" + std::to_string(n - 1) + " system after " + std::to_string(max_rounds) +
                               " rounds; the XOR-mask promise may not hold");
        }
        StateVector state = StateVector::basis(2 * n + work, 0);
        for (int i = 0; i < n; ++i) {
            state.apply_one_qubit(h, i);
        }
        oracle.query(state, regs);
        for (int i = 0; i < n; ++i) {
            state.apply_one_qubit(h, i);
        }
        const MeasurementSample sample = measure_all(std::move(state), rng);
        const std::uint64_t y = sample.index >> (n + work);
        ++result.rounds;
        result.equations.push_back(y);
        rows.insert(y);
    }
    // Rank n - 1 leaves one nonzero candidate; f(0) = f(candidate) exactly when it is the mask.
    const std::uint64_t candidate = rows.null_vector(n);
    const std::uint64_t f0 = oracle.query(0);
    const std::uint64_t fc = oracle.query(candidate);
    result.s = (f0 == fc) ? candidate : 0;
    return result;
}

}  // namespace qcw
