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

#include "ratcurve/sampling.hpp"

#include "ratcurve/errors.hpp"
#include "ratcurve/prime_field.hpp"

namespace ratcurve {

std::uint64_t random_prime(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo + 2) throw InputError("empty prime range");
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        const auto x = static_cast<std::uint64_t>(uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi - 1)));
        if (is_prime_u64(x)) return x;
    }
    throw InputError("no prime found in range");
}

}  // namespace ratcurve
