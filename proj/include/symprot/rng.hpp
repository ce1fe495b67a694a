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

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

namespace symprot {

/// splitmix64 finalizer; a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a parent seed and up to two
/// integer coordinates (repetition index, step index, ...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Derives a stream seed from a parent seed and a string tag (experiment id).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

/// Random source with distributions built from raw 64-bit draws, so a seed
/// produces the same values on every standard library.
///
/// std::mt19937_64 is fully specified by the standard; the library
/// distributions are not, which is why uniform/normal are hand-rolled.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n); rejection sampling removes modulo bias.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller (one value per call, the pair's twin is cached).
    double normal();

    /// Uniformly distributed unit vector on the 2-sphere.
    std::array<double, 3> unit_vector3();

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace symprot
