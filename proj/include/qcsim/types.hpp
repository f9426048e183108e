// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <random>
#include <stdexcept>
#include <string>

namespace qcsim {

using Complex = std::complex<double>;
using Index = std::uint64_t;
using Qubit = unsigned int;

inline constexpr Complex kI{0.0, 1.0};

/// Invalid argument passed to a core routine (size mismatch, index out of
/// range, malformed gate payload).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Text or JSON input could not be parsed. `position()` is a byte offset for
/// text formats and an element index for JSON arrays; -1 when unknown.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, long position = -1)
        : std::runtime_error(position >= 0 ? what + " (at " + std::to_string(position) + ")"
                                           : what),
          position_(position) {}
    long position() const noexcept { return position_; }

  private:
    long position_;
};

/// A quantum map could not be applied, e.g. every Kraus branch has zero
/// probability on the given state.
class InvalidMapError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Seedable random source shared by sampling, Haar states and map application.
///
/// The engine is std::mt19937_64. Distributions come from the standard
/// library, so seeded sequences are reproducible on a given build (the
/// normal distribution in particular is implementation-defined across
/// standard libraries).
class Random {
  public:
    Random() : engine_(std::random_device{}()) {}
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    std::uint64_t next() { return engine_(); }

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

constexpr Index dim_of(unsigned n) { return Index{1} << n; }

} // namespace qcsim
