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

#ifndef RATCURVE_PRIME_FIELD_HPP
#define RATCURVE_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "ratcurve/errors.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The prime field F_p. Holds only the modulus; elements carry a copy of it.
class PrimeField {
public:
    /// Throws InputError unless p is a prime below 2^62.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

/// Residue in [0, p).
class PrimeFieldElem {
public:
    PrimeFieldElem() = default;
    PrimeFieldElem(const PrimeField& field, long long v) : p_(field.modulus()) {
        long long r = v % static_cast<long long>(p_);
        residue_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p_) : r);
    }

    /// Same modulus as like, value v mod p. Skips the primality check.
    static PrimeFieldElem with_modulus_of(const PrimeFieldElem& like, long long v) {
        PrimeFieldElem r;
        r.p_ = like.p_;
        long long m = v % static_cast<long long>(r.p_);
        r.residue_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(r.p_) : m);
        return r;
    }

    /// Reduces a rational whose denominator is invertible mod p.
    static PrimeFieldElem from_rational(const PrimeField& field, const Rational& q);

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return residue_ == 0; }

    PrimeFieldElem& operator+=(const PrimeFieldElem& o) {
        check(o);
        residue_ += o.residue_;
        if (residue_ >= p_) residue_ -= p_;
        return *this;
    }
    PrimeFieldElem& operator-=(const PrimeFieldElem& o) {
        check(o);
        residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + p_ - o.residue_;
        return *this;
    }
    PrimeFieldElem& operator*=(const PrimeFieldElem& o) {
        check(o);
        residue_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(residue_) * o.residue_ % p_);
        return *this;
    }
    PrimeFieldElem& operator/=(const PrimeFieldElem& o) { return *this *= o.inverse(); }

    PrimeFieldElem inverse() const;

    friend PrimeFieldElem operator+(PrimeFieldElem a, const PrimeFieldElem& b) { return a += b; }
    friend PrimeFieldElem operator-(PrimeFieldElem a, const PrimeFieldElem& b) { return a -= b; }
    friend PrimeFieldElem operator*(PrimeFieldElem a, const PrimeFieldElem& b) { return a *= b; }
    friend PrimeFieldElem operator/(PrimeFieldElem a, const PrimeFieldElem& b) { return a /= b; }
    friend PrimeFieldElem operator-(const PrimeFieldElem& a) {
        PrimeFieldElem r = a;
        r.residue_ = a.residue_ == 0 ? 0 : a.p_ - a.residue_;
        return r;
    }

    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return a.p_ == b.p_ && a.residue_ == b.residue_;
    }

    /// "5 mod 1000003"
    std::string str() const { return std::to_string(residue_) + " mod " + std::to_string(p_); }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& x) { return os << x.str(); }

private:
    void check(const PrimeFieldElem& o) const {
        if (p_ != o.p_) throw RingMismatch("prime field elements with different moduli");
    }

    std::uint64_t residue_ = 0;
    std::uint64_t p_ = 2;
};

inline bool is_zero(const PrimeFieldElem& x) { return x.is_zero(); }
inline PrimeFieldElem constant_like(const PrimeFieldElem& like, long long v) {
    return PrimeFieldElem::with_modulus_of(like, v);
}
inline PrimeFieldElem inverse(const PrimeFieldElem& x) { return x.inverse(); }
inline PrimeFieldElem exact_div(const PrimeFieldElem& a, const PrimeFieldElem& b) { return a / b; }
inline std::string to_string(const PrimeFieldElem& x) { return x.str(); }

}  // namespace ratcurve

#endif  // RATCURVE_PRIME_FIELD_HPP
