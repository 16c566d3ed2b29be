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

#ifndef QCW_NUMBER_THEORY_H
#define QCW_NUMBER_THEORY_H

#include <cstdint>

#include "qcw/rng.h"

namespace qcw {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Jacobi symbol (a / n) for odd n > 0; returns -1, 0 or 1.
int jacobi(std::uint64_t a, std::uint64_t n);

enum class PrimalityVerdict { ProbablyPrime, Composite };

/// Solovay-Strassen: `rounds` independent Euler-witness tests with uniform a in [2, N-1].
/// Composite verdicts are certain; ProbablyPrime is wrong with probability at most 2^-rounds.
/// Requires N odd, N > 2, rounds >= 1 (InputError otherwise).
PrimalityVerdict solovay_strassen(std::uint64_t n, int rounds, Rng &rng);

/// Integer k-th root when n is a perfect k-th power, else 0.
std::uint64_t exact_root(std::uint64_t n, unsigned k);

}  // namespace qcw

#endif
