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

#ifndef QCW_ERRORS_H
#define QCW_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcw {

/// Caller supplied a value outside an operation's domain.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a desk-scale size guard (dense matrices, truth tables, brute force).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed circuit encoding. `offset` is the bit position where decoding failed.
struct DecodeError : std::runtime_error {
    DecodeError(const std::string &what, std::size_t offset)
        : std::runtime_error(what + " (at bit " + std::to_string(offset) + ")"), offset(offset) {
    }
    std::size_t offset;
};

struct RewriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The oracle handed to an algorithm does not satisfy the algorithm's promise.
struct PromiseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation's precondition on quantum state (e.g. clean ancillas) does not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A party touched a qubit it does not own.
struct OwnershipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Oracle data was accessed outside the counted query interface.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Missing or unreadable input file.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcw

#endif
