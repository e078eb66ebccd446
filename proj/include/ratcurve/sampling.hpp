/*
   Copyright 2026 The ratcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RATCURVE_SAMPLING_HPP
#define RATCURVE_SAMPLING_HPP

#include <cstdint>
#include <random>

namespace ratcurve {

/// SplitMix64 finalizer; decorrelates (seed, stream, index) triples.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

/// Independent generator for one trial. Streams separate unrelated uses of one seed.
enum class Stream : std::uint64_t { Params = 1, Primes = 2, Directions = 3, Witness = 4 };

inline std::mt19937_64 trial_rng(std::uint64_t seed, Stream stream, std::uint64_t index) {
    return std::mt19937_64(mix64(mix64(seed ^ mix64(static_cast<std::uint64_t>(stream))) + index));
}

/// Uniform integer in [lo, hi] by rejection. Portable, unlike std::uniform_int_distribution.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

/// Uniform nonzero integer in [-bound, bound].
inline std::int64_t uniform_nonzero(std::mt19937_64& rng, std::int64_t bound) {
    const std::int64_t v = uniform_int(rng, 1, 2 * bound);
    return v <= bound ? v : bound - v;
}

/// Random prime in [lo, hi).
std::uint64_t random_prime(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

}  // namespace ratcurve

#endif  // RATCURVE_SAMPLING_HPP
