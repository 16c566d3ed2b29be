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

#include "qcw/number_theory.h"

#include <cmath>

#include "qcw/errors.h"

namespace qcw {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1u) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
    if (n == 0 || (n & 1u) == 0) {
        throw InputError("Jacobi symbol needs an odd positive modulus");
    }
    a %= n;
    int sign = 1;
    while (a != 0) {
        while ((a & 1u) == 0) {
            a >>= 1;
            const auto r = n % 8;
            if (r == 3 || r == 5) {
                sign = -sign;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            sign = -sign;
        }
        a %= n;
    }
    return n == 1 ? sign : 0;
}

PrimalityVerdict solovay_strassen(std::uint64_t n, int rounds, Rng &rng) {
    if (n <= 2 || (n & 1u) == 0) {
        throw InputError("Solovay-Strassen needs an odd N > 2, got " + std::to_string(n));
    }
    if (rounds < 1) {
        throw InputError("Solovay-Strassen needs at least one round");
    }
    for (int i = 0; i < rounds; ++i) {
        // n = 3 leaves a single candidate a = 2.
        const std::uint64_t a = 2 + uniform_below(rng, n - 2);
        const int j = jacobi(a, n);
        if (j == 0) {
            return PrimalityVerdict::Composite;
        }
        const std::uint64_t euler = pow_mod(a, (n - 1) / 2, n);
        const std::uint64_t expected = j == 1 ? 1 : n - 1;
        if (euler != expected) {
            return PrimalityVerdict::Composite;
        }
    }
    return PrimalityVerdict::ProbablyPrime;
}

std::uint64_t exact_root(std::uint64_t n, unsigned k) {
    if (k == 0) {
        return 0;
    }
    auto guess = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    for (std::uint64_t r = guess > 1 ? guess - 1 : 0; r <= guess + 1; ++r) {
        unsigned __int128 p = 1;
        for (unsigned i = 0; i < k && p <= n; ++i) {
            p *= r;
        }
        if (p == n) {
            return r;
        }
    }
    return 0;
}

}  // namespace qcw
