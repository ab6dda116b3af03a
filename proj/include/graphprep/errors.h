// Copyright 2026 The graphprep Authors
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

#ifndef GRAPHPREP_ERRORS_H
#define GRAPHPREP_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphprep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(size_t line, const std::string &reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line), reason(reason) {
    }
    size_t line;
    std::string reason;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(size_t v) : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {
    }
    size_t vertex;
};

struct OutOfRangeError : Error {
    using Error::Error;
};
struct NotNeighborsError : Error {
    using Error::Error;
};
struct EmptySetError : Error {
    using Error::Error;
};
struct TooLargeError : Error {
    using Error::Error;
};
struct BudgetExceededError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct BadNestingError : Error {
    using Error::Error;
};
struct InvalidWitnessError : Error {
    using Error::Error;
};
struct SameQubitError : Error {
    using Error::Error;
};
struct ForcedImpossibleError : Error {
    using Error::Error;
};
struct SizeMismatchError : Error {
    using Error::Error;
};
struct BadSubsetError : Error {
    using Error::Error;
};
struct SimulationError : Error {
    using Error::Error;
};

}  // namespace graphprep

#endif
