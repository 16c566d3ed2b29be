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

#ifndef QCW_BITS_H
#define QCW_BITS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcw {

/// Bitstring x_0 x_1 ... x_{n-1}, one bit per element.
using Bits = std::vector<std::uint8_t>;

/// Parses a string of '0'/'1'. Throws InputError on any other character.
Bits parse_bits(std::string_view text);
std::string format_bits(const Bits &bits);

/// Big-endian conversion: x_0 is the most significant bit of the index.
std::uint64_t bits_to_index(const Bits &bits);
Bits index_to_bits(std::uint64_t index, int width);
std::string index_to_string(std::uint64_t index, int width);
std::uint64_t string_to_index(std::string_view text);

inline int popcount(std::uint64_t v) {
    return __builtin_popcountll(v);
}

/// Bit of `index` holding position `pos` of a `width`-bit big-endian string.
inline std::uint64_t position_mask(int pos, int width) {
    return std::uint64_t{1} << (width - 1 - pos);
}

}  // namespace qcw

#endif
