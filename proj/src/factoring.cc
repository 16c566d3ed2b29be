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


#include <algorithm>

#include "qcw/algorithms.h"
#include "qcw/errors.h"
#include "qcw/number_theory.h"

namespace qcw {

namespace {

constexpr std::uint64_t kMaxBruteOrderModulus = std::uint64_t{1} << 20;
constexpr int kCertificationRounds = 20;

struct Factorizer {
    const OrderSource &order;
    Rng &rng;
    int attempts_per_split;
    FactorResult &out;

    bool probably_prime(std::uint64_t m) {
        if (m == 2) {
            return true;
        }
        if (m < 2 || m % 2 == 0) {
            return false;
        }
        return solovay_strassen(m, kCertificationRounds, rng) == PrimalityVerdict::ProbablyPrime;
    }

    /// Nontrivial divisor of the odd composite non-power m, or 0 when the budget runs out.
    std::uint64_t split(std::uint64_t m) {
        for (int i = 0; i < attempts_per_split; ++i) {
            ++out.attempts;
            const std::uint64_t a = 2 + uniform_below(rng, m - 3);
            const std::uint64_t g = gcd(a, m);
            if (g > 1) {
                return g;
            }
            ++out.order_calls;
            if (const auto parts = split_with_base(a, m, order)) {
                return parts->first;
            }
        }
        return 0;
    }

    void run(std::uint64_t m) {
        if (m == 1) {
            return;
        }
        if (m % 2 == 0) {
            out.factors.push_back(2);
            run(m / 2);
            return;
        }
        if (probably_prime(m)) {
            out.factors.push_back(m);
            return;
        }
        for (unsigned k = 2; (std::uint64_t{1} << k) <= m; ++k) {
            const std::uint64_t root = exact_root(m, k);
            if (root > 1) {
                for (unsigned i = 0; i < k; ++i) {
                    run(root);
                }
                return;
            }
        }
        const std::uint64_t d = split(m);
        if (d == 0) {
            out.factors.push_back(m);
            out.complete = false;
            return;
        }
        run(d);
        run(m / d);
    }
};

}  // namespace

std::optional<std::pair<std::uint64_t, std::uint64_t>> split_with_base(std::uint64_t a, std::uint64_t modulus,
                                                                       const OrderSource &order) {
    if (gcd(a % modulus, modulus) != 1) {
        throw InputError("split needs gcd(a, N) = 1");
    }
    const std::uint64_t r = order(a, modulus);
    if (r == 0 || pow_mod(a, r, modulus) != 1) {
        throw ContractViolation("order source returned r with a^r != 1 mod N");
    }
    if (r % 2 != 0) {
        return std::nullopt;
    }
    const std::uint64_t half = pow_mod(a, r / 2, modulus);
    if (half == modulus - 1) {
        return std::nullopt;
    }
    // For the least r, half != 1 and both gcds are proper divisors. A source returning a
    // multiple of the order can give half = 1, which yields nothing.
    const std::uint64_t lo = gcd(half - 1, modulus);
    const std::uint64_t hi = gcd(half + 1, modulus);
    if (lo <= 1 || lo >= modulus) {
        return std::nullopt;
    }
    return std::make_pair(lo, hi);
}

OrderResult brute_force_order(std::uint64_t a, std::uint64_t modulus) {
    if (modulus < 2 || modulus > kMaxBruteOrderModulus) {
        throw InputError("brute-force order needs 2 <= N <= 2^20");
    }
    if (gcd(a % modulus, modulus) != 1) {
        throw InputError("order needs gcd(a, N) = 1");
    }
    std::uint64_t r = 1;
    for (std::uint64_t v = a % modulus; v != 1; v = mul_mod(v, a, modulus)) {
        ++r;
    }
    return {a, modulus, r};
}

FactorResult factor_from_order(std::uint64_t n, const OrderSource &order, Rng &rng, int attempts_per_split) {
    if (n < 2) {
        throw InputError("factoring needs N >= 2");
    }
    if (attempts_per_split < 1) {
        throw InputError("attempt budget must be positive");
    }
    FactorResult result{n, {}, true, 0, 0};
    Factorizer f{order, rng, attempts_per_split, result};
    f.run(n);
    std::sort(result.factors.begin(), result.factors.end());

    // Independent certification of the final list.
    unsigned __int128 product = 1;
    for (std::uint64_t p : result.factors) {
        product *= p;
        if (!f.probably_prime(p)) {
            result.complete = false;
        }
    }
    if (product != n) {
        result.complete = false;
    }
    return result;
}

}  // namespace qcw
