// Copyright 2026 The qpuf Authors
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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "qpuf/linalg.hpp"

namespace qpuf {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from (root, tag, index). Streams depend
/// only on these three values, never on scheduling order.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t root, std::string_view tag, std::uint64_t index = 0) {
  return Rng(derive_seed(root, tag, index));
}

double standard_normal(Rng& rng);
double uniform01(Rng& rng);

/// Complex Gaussian with E|z|^2 = variance (real and imaginary parts each variance/2).
Complex complex_normal(Rng& rng, double variance);

/// Worker count used by parallel_for when the caller passes 0.
void set_default_threads(unsigned threads);
unsigned default_threads();

// Runs body(i) for i in [0, count). Each index must write only its own slot;
// results are then reduced by the caller in index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace qpuf
