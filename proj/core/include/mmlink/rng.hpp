// SPDX-License-Identifier: Apache-2.0
//
// mmlink: link-level spectral efficiency simulator for mmWave downlinks
// Copyright (C) 2026 The mmlink authors
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

#pragma once

#include <cstdint>
#include <random>

namespace mmlink {

// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seedable random stream backed by std::mt19937_64. Stream t of an experiment
// is derived from hash(seed, t) only, so trials can run in any order or in
// parallel and still reproduce bit for bit.
class RngStream
{
  public:
    explicit RngStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    static RngStream for_trial(std::uint64_t seed, std::uint64_t trial)
    {
        return RngStream(mix64(seed) ^ mix64(trial + 0x632be59bd9b4e019ULL));
    }

    // Uniform on [0, 1) with 53 random bits. Independent of the standard
    // library's distribution implementations.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace mmlink
