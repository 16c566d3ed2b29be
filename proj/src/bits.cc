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

#include "qcw/bits.h"

#include "qcw/errors.h"

namespace qcw {

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw InputError("bitstring contains '" + std::string(1, c) + "'");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string format_bits(const Bits &bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::uint64_t bits_to_index(const Bits &bits) {
    if (bits.size() > 64) {
        throw InputError("bitstring longer than 64 bits");
    }
    std::uint64_t v = 0;
    for (auto b : bits) {
        v = (v << 1) | (b & 1u);
    }
    return v;
}

Bits index_to_bits(std::uint64_t index, int width) {
    Bits out(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        out[i] = static_cast<std::uint8_t>((index >> (width - 1 - i)) & 1u);
    }
    return out;
}

std::string index_to_string(std::uint64_t index, int width) {
    return format_bits(index_to_bits(index, width));
}

std::uint64_t string_to_index(std::string_view text) {
    return bits_to_index(parse_bits(text));
}

}  // namespace qcw
