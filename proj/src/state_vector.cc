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

#include "qcw/state_vector.h"

#include <algorithm>
#include <cmath>

#include "qcw/bits.h"
#include "qcw/errors.h"

namespace qcw {

namespace {

bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

int log2_exact(std::size_t v) {
    int k = 0;
    while ((std::size_t{1} << k) < v) {
        ++k;
    }
    return k;
}

void check_unitary(std::size_t dim, const std::vector<Amplitude> &m) {
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Amplitude acc = 0;
            for (std::size_t j = 0; j < dim; ++j) {
                acc += m[r * dim + j] * std::conj(m[c * dim + j]);
            }
            const Amplitude expected = r == c ? 1.0 : 0.0;
            if (std::abs(acc - expected) > kIdentityTolerance) {
                throw InputError("matrix is not unitary (U U^dagger deviates at " + std::to_string(r) + "," +
                                 std::to_string(c) + ")");
            }
        }
    }
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(std::size_t dim, std::vector<Amplitude> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
    if (!is_power_of_two(dim_)) {
        throw InputError("unitary dimension must be a power of two");
    }
    if (entries_.size() != dim_ * dim_) {
        throw InputError("unitary entry count does not match dimension");
    }
    check_unitary(dim_, entries_);
}

UnitaryMatrix::UnitaryMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows)
    : UnitaryMatrix(rows.size(), [&] {
          std::vector<Amplitude> flat;
          for (const auto &row : rows) {
              if (row.size() != rows.size()) {
                  throw InputError("unitary rows must be square");
              }
              flat.insert(flat.end(), row.begin(), row.end());
          }
          return flat;
      }()) {
}

UnitaryMatrix::UnitaryMatrix(Unchecked, std::size_t dim, std::vector<Amplitude> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    std::vector<Amplitude> m(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        m[i * dim + i] = 1.0;
    }
    return UnitaryMatrix(dim, std::move(m));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    std::vector<Amplitude> m(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return UnitaryMatrix(Unchecked{}, dim_, std::move(m));
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw InputError("unitary dimension mismatch in product");
    }
    std::vector<Amplitude> m(dim_ * dim_, 0.0);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const Amplitude a = entries_[r * dim_ + j];
            if (a == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                m[r * dim_ + c] += a * rhs.entries_[j * dim_ + c];
            }
        }
    }
    return UnitaryMatrix(Unchecked{}, dim_, std::move(m));
}

UnitaryMatrix UnitaryMatrix::pow(unsigned exponent) const {
    UnitaryMatrix out = identity(dim_);
    for (unsigned i = 0; i < exponent; ++i) {
        out = out * *this;
    }
    return out;
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix &other) const {
    if (other.dim_ != dim_) {
        throw InputError("unitary dimension mismatch in comparison");
    }
    double worst = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1) {
        throw InputError("a register needs at least one qubit");
    }
    if (num_qubits > kMaxDenseQubits) {
        throw ResourceError("dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw InputError("basis index out of range");
    }
    std::vector<Amplitude> amps(dim, 0.0);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::basis(int num_qubits, std::string_view bits) {
    if (bits.size() != static_cast<std::size_t>(num_qubits)) {
        throw InputError("basis bitstring length " + std::to_string(bits.size()) + " does not match " +
                         std::to_string(num_qubits) + " qubits");
    }
    return basis(num_qubits, string_to_index(bits));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (!is_power_of_two(amplitudes.size()) || amplitudes.size() < 2) {
        throw InputError("amplitude count must be 2^m with m >= 1");
    }
    double norm = 0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kIdentityTolerance) {
        throw InputError("amplitudes are not normalized");
    }
    const int m = log2_exact(amplitudes.size());
    if (m > kMaxDenseQubits) {
        throw ResourceError("dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    return StateVector(m, std::move(amplitudes));
}

Amplitude StateVector::amplitude(std::string_view bits) const {
    if (bits.size() != static_cast<std::size_t>(num_qubits_)) {
        throw InputError("bitstring length does not match register");
    }
    return amps_[string_to_index(bits)];
}

double StateVector::norm_squared() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::check_qubit(int k) const {
    if (k < 0 || k >= num_qubits_) {
        throw InputError("qubit index " + std::to_string(k) + " out of range for " + std::to_string(num_qubits_) +
                         "-qubit register");
    }
}

void StateVector::apply_one_qubit(const UnitaryMatrix &u, int k) {
    if (u.dim() != 2) {
        throw InputError("one-qubit gate needs a 2x2 unitary");
    }
    check_qubit(k);
    const std::uint64_t bit = qubit_mask(k);
    const Amplitude u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const std::size_t dim = amps_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) {
            continue;
        }
        const std::size_t j = i | bit;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[j];
        amps_[i] = u00 * a0 + u01 * a1;
        amps_[j] = u10 * a0 + u11 * a1;
    }
    ops_ += dim;
}

void StateVector::apply_controlled(const UnitaryMatrix &u, int control, int target) {
    const int controls[] = {control};
    apply_multi_controlled(u, controls, target);
}

void StateVector::apply_multi_controlled(const UnitaryMatrix &u, std::span<const int> controls, int target) {
    if (u.dim() != 2) {
        throw InputError("controlled gate needs a 2x2 unitary");
    }
    check_qubit(target);
    std::uint64_t cmask = 0;
    for (int c : controls) {
        check_qubit(c);
        if (c == target || (cmask & qubit_mask(c))) {
            throw InputError("control and target qubits must be distinct");
        }
        cmask |= qubit_mask(c);
    }
    const std::uint64_t bit = qubit_mask(target);
    const Amplitude u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const std::size_t dim = amps_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit) || (i & cmask) != cmask) {
            continue;
        }
        const std::size_t j = i | bit;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[j];
        amps_[i] = u00 * a0 + u01 * a1;
        amps_[j] = u10 * a0 + u11 * a1;
        ops_ += 2;
    }
}

void StateVector::apply_permutation(const std::function<std::uint64_t(std::uint64_t)> &pi) {
    const std::size_t dim = amps_.size();
    std::vector<Amplitude> out(dim);
    std::vector<bool> hit(dim, false);
    for (std::size_t x = 0; x < dim; ++x) {
        const std::uint64_t y = pi(x);
        if (y >= dim || hit[y]) {
            throw InputError("basis map is not a bijection");
        }
        hit[y] = true;
        out[y] = amps_[x];
    }
    amps_ = std::move(out);
    ops_ += dim;
}

void StateVector::apply_permutation(std::span<const std::uint64_t> table) {
    if (table.size() != amps_.size()) {
        throw InputError("permutation table size does not match register");
    }
    apply_permutation([&](std::uint64_t x) { return table[x]; });
}

void StateVector::apply_phase_flip(const std::function<bool(std::uint64_t)> &pred) {
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (pred(i)) {
            amps_[i] = -amps_[i];
            ++ops_;
        }
    }
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const int m = a.num_qubits() + b.num_qubits();
    if (m > kMaxDenseQubits) {
        throw ResourceError("dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    std::vector<Amplitude> out(a.size() * b.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            out[x * b.size() + y] = a[x] * b[y];
        }
    }
    // Norms multiply; renormalization is not needed but from_amplitudes re-checks it.
    return StateVector::from_amplitudes(std::move(out));
}

MeasurementSample measure_all(StateVector state, Rng &rng) {
    const double u = uniform_unit(rng) * state.norm_squared();
    double acc = 0;
    std::uint64_t pick = state.size();
    std::uint64_t last_nonzero = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        if (p > 0) {
            last_nonzero = i;
        }
        acc += p;
        if (u < acc) {
            pick = i;
            break;
        }
    }
    // Rounding can leave u at or past the final partial sum.
    if (pick == state.size()) {
        pick = last_nonzero;
    }
    return {index_to_string(pick, state.num_qubits()), pick, std::norm(state[pick])};
}

double probability_of(const StateVector &state, const std::function<bool(std::uint64_t)> &pred) {
    double acc = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (pred(i)) {
            acc += std::norm(state[i]);
        }
    }
    return std::clamp(acc, 0.0, 1.0);
}

SparseState::SparseState(int num_qubits, std::uint64_t basis_index) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 63) {
        throw InputError("sparse register must have 1..63 qubits");
    }
    if (basis_index >> num_qubits) {
        throw InputError("basis index out of range");
    }
    terms_[basis_index] = 1.0;
}

Amplitude SparseState::amplitude(std::uint64_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Amplitude{} : it->second;
}

void SparseState::apply_one_qubit(const UnitaryMatrix &u, int k) {
    apply_multi_controlled(u, {}, k);
}

void SparseState::apply_controlled(const UnitaryMatrix &u, int control, int target) {
    const int controls[] = {control};
    apply_multi_controlled(u, controls, target);
}

void SparseState::apply_multi_controlled(const UnitaryMatrix &u, std::span<const int> controls, int target) {
    if (u.dim() != 2) {
        throw InputError("controlled gate needs a 2x2 unitary");
    }
    auto check = [&](int q) {
        if (q < 0 || q >= num_qubits_) {
            throw InputError("qubit index out of range");
        }
    };
    check(target);
    std::uint64_t cmask = 0;
    for (int c : controls) {
        check(c);
        if (c == target) {
            throw InputError("control and target qubits must be distinct");
        }
        cmask |= qubit_mask(c);
    }
    const std::uint64_t bit = qubit_mask(target);
    std::map<std::uint64_t, Amplitude> out;
    for (const auto &[idx, amp] : terms_) {
        if ((idx & cmask) != cmask) {
            out[idx] += amp;
            continue;
        }
        const int b = (idx & bit) ? 1 : 0;
        const std::uint64_t i0 = idx & ~bit;
        const std::uint64_t i1 = idx | bit;
        out[i0] += u(0, b) * amp;
        out[i1] += u(1, b) * amp;
    }
    terms_ = std::move(out);
    prune();
}

void SparseState::apply_permutation(const std::function<std::uint64_t(std::uint64_t)> &pi) {
    std::map<std::uint64_t, Amplitude> out;
    for (const auto &[idx, amp] : terms_) {
        const std::uint64_t y = pi(idx);
        if (out.count(y)) {
            throw InputError("basis map is not a bijection");
        }
        out[y] = amp;
    }
    terms_ = std::move(out);
}

void SparseState::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) == 0.0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace qcw
