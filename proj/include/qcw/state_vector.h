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

#ifndef QCW_STATE_VECTOR_H
#define QCW_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/rng.h"

namespace qcw {

using Amplitude = std::complex<double>;

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr int kMaxDenseQubits = 24;

class QuantumCircuit;
class UnitaryMatrix;
UnitaryMatrix circuit_unitary(const QuantumCircuit &circuit);

/// Dense square matrix with U U^dagger = I (checked on construction, entrywise 1e-9).
/// Dimension must be a power of two.
class UnitaryMatrix {
   public:
    UnitaryMatrix(std::size_t dim, std::vector<Amplitude> row_major);
    UnitaryMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows);

    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Amplitude> entries() const {
        return entries_;
    }

    UnitaryMatrix adjoint() const;
    UnitaryMatrix operator*(const UnitaryMatrix &rhs) const;
    UnitaryMatrix pow(unsigned exponent) const;

    /// Largest entrywise |a_ij - b_ij|. Dimensions must agree.
    double max_abs_diff(const UnitaryMatrix &other) const;

   private:
    struct Unchecked {};
    UnitaryMatrix(Unchecked, std::size_t dim, std::vector<Amplitude> row_major);
    friend UnitaryMatrix circuit_unitary(const QuantumCircuit &circuit);

    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

struct MeasurementSample {
    std::string outcome;
    std::uint64_t index;
    double probability;
};

/// Amplitudes of an m-qubit register. Index i holds the amplitude of the basis state whose
/// big-endian bitstring is i, so qubit 0 is the most significant bit.
///
/// Gate application is in place and touches each amplitude O(1) times. `amplitude_ops()`
/// counts amplitude writes so callers can confirm the update never goes dense.
class StateVector {
   public:
    static StateVector basis(int num_qubits, std::uint64_t index);
    static StateVector basis(int num_qubits, std::string_view bits);
    /// Takes ownership of `amplitudes`; length must be 2^m and the norm 1 within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    const Amplitude &operator[](std::uint64_t index) const {
        return amps_[index];
    }
    Amplitude amplitude(std::string_view bits) const;
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    double norm_squared() const;

    /// Mask of the index bit carrying qubit k.
    std::uint64_t qubit_mask(int k) const {
        return std::uint64_t{1} << (num_qubits_ - 1 - k);
    }

    void apply_one_qubit(const UnitaryMatrix &u, int k);
    void apply_controlled(const UnitaryMatrix &u, int control, int target);
    /// U on `target` iff every qubit in `controls` is 1.
    void apply_multi_controlled(const UnitaryMatrix &u, std::span<const int> controls, int target);
    /// Amplitude at pi(x) becomes the prior amplitude at x. Throws InputError if pi is not a
    /// bijection on the 2^m indices.
    void apply_permutation(const std::function<std::uint64_t(std::uint64_t)> &pi);
    void apply_permutation(std::span<const std::uint64_t> table);
    /// Multiplies by -1 every amplitude whose index satisfies `pred`.
    void apply_phase_flip(const std::function<bool(std::uint64_t)> &pred);

    std::uint64_t amplitude_ops() const {
        return ops_;
    }

    /// Moves out the amplitudes, leaving the state empty.
    std::vector<Amplitude> release() && {
        return std::move(amps_);
    }

   private:
    StateVector(int num_qubits, std::vector<Amplitude> amps);
    void check_qubit(int k) const;

    int num_qubits_;
    std::vector<Amplitude> amps_;
    std::uint64_t ops_ = 0;
};

StateVector tensor(const StateVector &a, const StateVector &b);

/// Samples an outcome with Born-rule probabilities. Takes the state by value: measurement
/// destroys it.
MeasurementSample measure_all(StateVector state, Rng &rng);

double probability_of(const StateVector &state, const std::function<bool(std::uint64_t)> &pred);

/// Sparse amplitude map for basis-state tracing on registers too wide for a dense vector.
/// Same indexing and gate semantics as StateVector.
class SparseState {
   public:
    SparseState(int num_qubits, std::uint64_t basis_index);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::map<std::uint64_t, Amplitude> &terms() const {
        return terms_;
    }
    Amplitude amplitude(std::uint64_t index) const;
    std::uint64_t qubit_mask(int k) const {
        return std::uint64_t{1} << (num_qubits_ - 1 - k);
    }

    void apply_one_qubit(const UnitaryMatrix &u, int k);
    void apply_controlled(const UnitaryMatrix &u, int control, int target);
    void apply_multi_controlled(const UnitaryMatrix &u, std::span<const int> controls, int target);
    /// pi must be a bijection on the register; only the populated indices are mapped.
    void apply_permutation(const std::function<std::uint64_t(std::uint64_t)> &pi);

   private:
    void prune();

    int num_qubits_;
    std::map<std::uint64_t, Amplitude> terms_;
};

}  // namespace qcw

#endif
