// swiptsec - secrecy performance of SWIPT downlinks over kappa-mu fading
// Copyright (C) 2026 the swiptsec authors
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

#include <cstdint>
#include <random>

namespace swiptsec {

// Deterministic random stream. The base engine is std::mt19937_64, whose
// output sequence is pinned by the standard, and every variate transform is
// implemented here rather than taken from std:: distributions (those are
// implementation-defined), so a given seed produces the same draws on every
// platform. Substreams for Monte Carlo chunks are derived by mixing the seed
// with the chunk index, never by splitting one running stream.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    // Independent stream for chunk `index` of a run seeded with `seed`.
    static RandomStream for_chunk(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0,1) with 53 random bits.
    double uniform();
    // Uniform on (0,1), safe as a log() argument.
    double uniform_open();
    // Standard normal via the polar method.
    double normal();
    // Poisson(mean >= 0): Knuth product for small means, transformed
    // rejection (PTRD) for mean >= 10.
    long long poisson(double mean);
    // Gamma(shape > 0, scale 1) via Marsaglia-Tsang squeeze.
    double gamma(double shape);

  private:
    std::mt19937_64 eng_;
};

} // namespace swiptsec
