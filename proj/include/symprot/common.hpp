// Copyright 2026 The Symprot Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symprot {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Largest Hilbert-space dimension the dense backend will materialize.
inline constexpr std::size_t kDenseDimCap = 8192;

/// Invalid arguments or violated preconditions.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not produce a trustworthy answer
/// (non-convergence, branch ambiguity, degenerate cancellation).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Configuration text or command-line arguments are invalid.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw DomainError(message);
    }
}

}  // namespace symprot
