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

#ifndef RATCURVE_RATIONAL_HPP
#define RATCURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "ratcurve/errors.hpp"

namespace ratcurve {

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num) : value_(num) {}                  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "a" or "a/b" in base 10.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    /// Canonical text: "-4/3", "7", "0".
    std::string str() const { return value_.get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& x) {
        auto b = x.find_first_not_of(" \t");
        auto e = x.find_last_not_of(" \t");
        x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    auto parse_int = [&](std::string part) {
        trim(part);
        if (part.empty()) throw ParseError("bad rational literal '" + s + "'");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw ParseError("bad rational literal '" + s + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw ParseError("bad rational literal '" + s + "'");
        if (part[0] == '+') part.erase(0, 1);
        return mpz_class(part, 10);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
}

// Ring-element interface shared by all scalar types (found by ADL).
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational constant_like(const Rational&, long long v) { return Rational(v); }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace ratcurve

template <>
struct std::hash<ratcurve::Rational> {
    std::size_t operator()(const ratcurve::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};

#endif  // RATCURVE_RATIONAL_HPP
