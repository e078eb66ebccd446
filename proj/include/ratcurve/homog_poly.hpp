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

#ifndef RATCURVE_HOMOG_POLY_HPP
#define RATCURVE_HOMOG_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "ratcurve/errors.hpp"
#include "ratcurve/prime_field.hpp"
#include "ratcurve/ring.hpp"

namespace ratcurve {

enum class Var { S, T };

/// Homogeneous polynomial sum_j c_j s^j t^(degree-j) in the two coordinates of P^1.
///
/// The zero polynomial keeps its degree; entry j of coeffs() is the coefficient of s^j t^(degree-j).
template <RingElement T>
class HomogPoly {
public:
    HomogPoly() = default;

    /// Zero polynomial of the given degree in the ring of like.
    HomogPoly(int degree, const T& like) : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1, constant_like(like, 0)) {
        if (degree < 0) throw InputError("negative polynomial degree");
    }

    explicit HomogPoly(std::vector<T> coeffs) : degree_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InputError("a homogeneous polynomial needs at least one coefficient");
    }

    /// c * s^j * t^(degree-j)
    static HomogPoly monomial(int degree, int j, const T& c) {
        HomogPoly r(degree, c);
        r.coeffs_.at(static_cast<std::size_t>(j)) = c;
        return r;
    }

    int degree() const { return degree_; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    const T& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    T& coeff(int j) { return coeffs_.at(static_cast<std::size_t>(j)); }
    const T& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!detail::scalar_is_zero(c)) return false;
        return true;
    }

    HomogPoly& operator+=(const HomogPoly& o) {
        if (degree_ != o.degree_) throw DegreeMismatch(degree_, o.degree_);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    HomogPoly& operator-=(const HomogPoly& o) {
        if (degree_ != o.degree_) throw DegreeMismatch(degree_, o.degree_);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }

    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator-(HomogPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
        HomogPoly r(a.degree_ + b.degree_, a.coeffs_.front());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::scalar_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (detail::scalar_is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend HomogPoly operator*(HomogPoly a, const T& c) {
        for (auto& x : a.coeffs_) x = x * c;
        return a;
    }
    friend HomogPoly operator*(const T& c, HomogPoly a) { return std::move(a) * c; }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// Applies f to every coefficient.
    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(coeffs_.front()))>;
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return HomogPoly<U>(std::move(out));
    }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const HomogPoly& p) { return os << p.str(); }

private:
    int degree_ = 0;
    std::vector<T> coeffs_;
};

/// Coefficient-wise sum of two polynomials of equal degree.
template <RingElement T>
HomogPoly<T> poly_add(const HomogPoly<T>& a, const HomogPoly<T>& b) { return a + b; }

template <RingElement T>
HomogPoly<T> poly_mul(const HomogPoly<T>& a, const HomogPoly<T>& b) { return a * b; }

/// Multiplies by s or t, raising the degree by one.
template <RingElement T>
HomogPoly<T> poly_mul_linear(const HomogPoly<T>& a, Var which) {
    HomogPoly<T> r(a.degree() + 1, a.coeffs().front());
    const int shift = which == Var::S ? 1 : 0;
    for (int j = 0; j <= a.degree(); ++j) r.coeff(j + shift) = a[j];
    return r;
}

/// Quotient of a by s or t. Throws NotDivisible if the division leaves a remainder.
template <RingElement T>
HomogPoly<T> poly_div_linear(const HomogPoly<T>& a, Var which) {
    if (a.degree() == 0) {
        if (a.is_zero()) throw NotDivisible("cannot divide a degree-0 polynomial by a linear form");
        throw NotDivisible("nonzero constant is not divisible by a linear form");
    }
    HomogPoly<T> r(a.degree() - 1, a.coeffs().front());
    if (which == Var::S) {
        if (!detail::scalar_is_zero(a[0]))
            throw NotDivisible("t^" + std::to_string(a.degree()) + " term is not divisible by s");
        for (int j = 1; j <= a.degree(); ++j) r.coeff(j - 1) = a[j];
    } else {
        if (!detail::scalar_is_zero(a[a.degree()]))
            throw NotDivisible("s^" + std::to_string(a.degree()) + " term is not divisible by t");
        for (int j = 0; j < a.degree(); ++j) r.coeff(j) = a[j];
    }
    return r;
}

/// Formal partial derivative. Integer factors are mapped into the coefficient ring.
template <RingElement T>
HomogPoly<T> poly_partial(const HomogPoly<T>& a, Var var) {
    if (a.degree() == 0) throw DegreeZero();
    const int d = a.degree();
    HomogPoly<T> r(d - 1, a.coeffs().front());
    for (int j = 0; j <= d; ++j) {
        if (detail::scalar_is_zero(a[j])) continue;
        if (var == Var::S && j > 0) r.coeff(j - 1) = a[j] * constant_like(a[j], j);
        if (var == Var::T && j < d) r.coeff(j) = a[j] * constant_like(a[j], d - j);
    }
    return r;
}

/// Value at (s0, t0).
template <RingElement T>
T poly_eval(const HomogPoly<T>& a, const T& s0, const T& t0) {
    // Horner in s with the t powers folded in from the top.
    const int d = a.degree();
    std::vector<T> t_pow(static_cast<std::size_t>(d) + 1, constant_like(s0, 1));
    for (int k = 1; k <= d; ++k) t_pow[static_cast<std::size_t>(k)] = t_pow[static_cast<std::size_t>(k) - 1] * t0;
    T acc = constant_like(s0, 0);
    for (int j = d; j >= 0; --j) acc = acc * s0 + a[j] * t_pow[static_cast<std::size_t>(d - j)];
    return acc;
}

/// Exact quotient a / b by long division in s with t dehomogenized. Throws NonExactDivision.
template <RingElement T>
HomogPoly<T> poly_exact_div(const HomogPoly<T>& a, const HomogPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero();
    const int qdeg = a.degree() - b.degree();
    if (qdeg < 0) {
        if (a.is_zero()) throw NonExactDivision("degree of divisor exceeds degree of dividend");
        throw NonExactDivision("degree of divisor exceeds degree of dividend");
    }
    int b_top = b.degree();
    while (detail::scalar_is_zero(b[b_top])) --b_top;
    std::vector<T> rest(a.coeffs());
    HomogPoly<T> q(qdeg, a.coeffs().front());
    for (int j = a.degree(); j >= b_top; --j) {
        if (detail::scalar_is_zero(rest[static_cast<std::size_t>(j)])) continue;
        const int k = j - b_top;
        if (k > qdeg) throw NonExactDivision("homogeneous division is not exact");
        T c = exact_div(rest[static_cast<std::size_t>(j)], b[b_top]);
        for (int i = 0; i <= b_top; ++i) rest[static_cast<std::size_t>(k + i)] -= c * b[i];
        q.coeff(k) = std::move(c);
    }
    for (const auto& r : rest)
        if (!detail::scalar_is_zero(r)) throw NonExactDivision("homogeneous division is not exact");
    return q;
}

/// Monic greatest common divisor over a field. Pure powers of t are tracked separately
/// from the dehomogenized part, so the result is monic in its highest power of s.
template <FieldElement T>
HomogPoly<T> poly_gcd(const HomogPoly<T>& a, const HomogPoly<T>& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    auto top = [](const HomogPoly<T>& p) {
        int j = p.degree();
        while (j >= 0 && detail::scalar_is_zero(p[j])) --j;
        return j;
    };
    auto dehomog = [&](const HomogPoly<T>& p) {
        std::vector<T> u(p.coeffs().begin(), p.coeffs().begin() + (top(p) + 1));
        return u;
    };
    auto trim = [](std::vector<T>& u) {
        while (!u.empty() && detail::scalar_is_zero(u.back())) u.pop_back();
    };
    // Univariate Euclid over the field; an empty vector is the zero polynomial.
    auto euclid = [&](std::vector<T> x, std::vector<T> y) {
        trim(x);
        trim(y);
        while (!y.empty()) {
            const T inv = inverse(y.back());
            while (x.size() >= y.size()) {
                const T c = x.back() * inv;
                const std::size_t shift = x.size() - y.size();
                for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= c * y[i];
                trim(x);
                if (x.empty()) break;
            }
            std::swap(x, y);
        }
        return x;
    };
    // Multiplicity of t: degree minus the top s-power.
    auto t_mult = [&](const HomogPoly<T>& p) { return p.is_zero() ? -1 : p.degree() - top(p); };

    std::vector<T> g;
    int e = 0;
    if (a.is_zero()) {
        g = dehomog(b);
        e = t_mult(b);
    } else if (b.is_zero()) {
        g = dehomog(a);
        e = t_mult(a);
    } else {
        g = euclid(dehomog(a), dehomog(b));
        e = std::min(t_mult(a), t_mult(b));
    }
    const T inv = inverse(g.back());
    for (auto& c : g) c = c * inv;
    const int gdeg = static_cast<int>(g.size()) - 1 + e;
    HomogPoly<T> r(gdeg, g.front());
    for (std::size_t j = 0; j < g.size(); ++j) r.coeff(static_cast<int>(j)) = g[j];
    return r;
}

namespace detail {

template <class T>
std::string coeff_text(const T& c) {
    if constexpr (std::is_same_v<T, PrimeFieldElem>) {
        return std::to_string(c.residue());
    } else {
        return to_string(c);
    }
}

inline bool is_plain_number(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
    return true;
}

inline std::string monomial_text(int degree, int j) {
    std::string out;
    if (j > 0) out += j == 1 ? "s" : "s^" + std::to_string(j);
    const int k = degree - j;
    if (k > 0) {
        if (!out.empty()) out += "*";
        out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out;
}

}  // namespace detail

/// Canonical text "c0*t^d + c1*s*t^(d-1) + ...": ascending powers of s, zero terms omitted,
/// unit coefficients dropped, "0" for the zero polynomial.
template <RingElement T>
std::string HomogPoly<T>::str() const {
    std::string out;
    for (int j = 0; j <= degree_; ++j) {
        const T& c = coeffs_[static_cast<std::size_t>(j)];
        if (detail::scalar_is_zero(c)) continue;
        std::string cs = detail::coeff_text(c);
        const std::string mono = detail::monomial_text(degree_, j);
        bool negative = false;
        if (detail::is_plain_number(cs)) {
            negative = cs[0] == '-';
            if (negative) cs.erase(0, 1);
        } else {
            cs = "(" + cs + ")";
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

/// Parses the canonical text form. parse_coeff turns an unsigned numeric literal into a ring element.
template <RingElement T>
HomogPoly<T> parse_homog_poly(std::string_view text, int degree, const T& like,
                              const std::function<T(std::string_view)>& parse_coeff) {
    HomogPoly<T> result(degree, like);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial text");
    if (s == "0") return result;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) { throw ParseError("polynomial '" + std::string(text) + "': " + why); };
    auto read_uint = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    };
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        T c = constant_like(like, 1);
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
            c = parse_coeff(std::string_view(s).substr(start, pos - start));
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        int es = 0;
        int et = 0;
        while (pos < s.size() && (s[pos] == 's' || s[pos] == 't')) {
            const char v = s[pos++];
            int e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = read_uint();
            }
            (v == 's' ? es : et) += e;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (es + et != degree) fail("term degree " + std::to_string(es + et) + " differs from " + std::to_string(degree));
        result.coeff(es) += negative ? -c : c;
    }
    return result;
}

}  // namespace ratcurve

#endif  // RATCURVE_HOMOG_POLY_HPP
