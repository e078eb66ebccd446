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

#ifndef RATCURVE_RING_HPP
#define RATCURVE_RING_HPP

#include <concepts>
#include <string>

namespace ratcurve {

/// Exact commutative ring element. Constants are built from an existing element so that
/// ring context (modulus, gradient length, variable count) travels with the values.
template <class T>
concept RingElement = std::regular<T> && requires(const T& a, const T& b, long long k) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { constant_like(a, k) } -> std::convertible_to<T>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

/// Ring with exact division by nonzero elements.
template <class T>
concept FieldElement = RingElement<T> && requires(const T& a, const T& b) {
    { a / b } -> std::convertible_to<T>;
    { inverse(a) } -> std::convertible_to<T>;
};

namespace detail {

template <class T>
bool scalar_is_zero(const T& x) {
    return is_zero(x);
}

}  // namespace detail

}  // namespace ratcurve

#endif  // RATCURVE_RING_HPP
