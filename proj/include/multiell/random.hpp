// SPDX-License-Identifier: Apache-2.0
//
// multiell - Monte Carlo simulator for the multi-elliptical propagation model
// Copyright (C) 2026 The multiell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MULTIELL_RANDOM_HPP
#define MULTIELL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace multiell {

// SplitMix64 finalizer. Used to derive independent substream seeds from a
// parent seed and an index.
std::uint64_t mix_seed(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

/// Seeded random stream on top of std::mt19937_64.
///
/// The engine's output is fixed by the C++ standard. The variate transforms
/// below are written out here rather than taken from <random>, whose
/// distributions are implementation-defined, so a given seed yields the same
/// draws with every standard library.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : key_(mix_seed(seed)), engine_(key_) {}

    // Child stream number `index`. Does not advance this stream.
    RandomStream substream(std::uint64_t index) const { return RandomStream(derive_seed(key_, index)); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform on the open interval (0, 1).
    double uniform_open();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Standard normal, Marsaglia polar method.
    double normal();

private:
    std::uint64_t key_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace multiell

#endif
