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

#ifndef QCW_RNG_H
#define QCW_RNG_H

#include <cstdint>
#include <random>

namespace qcw {

/// Every randomized operation takes one of these explicitly; there is no global generator.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). The standard distributions are implementation defined,
/// so sampling is done by rejection here to keep outputs identical across toolchains.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int coin_flip(Rng &rng) {
    return static_cast<int>(rng() >> 63);
}

/// splitmix64 finalizer; derives per-trial seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qcw

#endif
