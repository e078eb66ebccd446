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

#include "ratcurve/prime_field.hpp"

namespace ratcurve {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    // These witnesses are sufficient for every n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 62U)) throw InputError("modulus " + std::to_string(p) + " is not below 2^62");
    if (!is_prime_u64(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
}

PrimeFieldElem PrimeFieldElem::inverse() const {
    if (residue_ == 0) throw DivisionByZero();
    PrimeFieldElem r = *this;
    r.residue_ = pow_mod(residue_, p_ - 2, p_);
    return r;
}

PrimeFieldElem PrimeFieldElem::from_rational(const PrimeField& field, const Rational& q) {
    const mpz_class p(static_cast<unsigned long>(field.modulus()));
    mpz_class num = q.numerator() % p;
    const mpz_class den = q.denominator() % p;
    if (den == 0) throw DivisionByZero();
    if (num < 0) num += p;
    PrimeFieldElem n(field, 0);
    n.residue_ = num.get_ui();
    PrimeFieldElem dd(field, 0);
    dd.residue_ = den.get_ui();
    return n / dd;
}

}  // namespace ratcurve
