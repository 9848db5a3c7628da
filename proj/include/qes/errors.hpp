// Copyright 2026 The qesearch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qes {

/// Invalid configuration: bad qubit counts, shape mismatches, out-of-range
/// indices, malformed config files. Maps to CLI exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

/// API misuse: empty batches, empty populations, invalid operator arguments.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Input file could not be parsed. Carries the offending line number (1-based,
/// 0 when not line-specific).
struct ParseError : std::runtime_error {
    ParseError(const std::string &msg, std::size_t line)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_number(line) {}
    std::size_t line_number;
};

/// Training produced a non-finite loss or weight. Carries the optimizer step
/// index at which divergence was detected. Maps to CLI exit code 2.
struct TrainingError : std::runtime_error {
    TrainingError(const std::string &msg, std::size_t step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step_index(step) {}
    std::size_t step_index;
};

} // namespace qes
