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

#ifndef RATCURVE_PARAM_POLY_HPP
#define RATCURVE_PARAM_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ratcurve/errors.hpp"
#include "ratcurve/ring.hpp"

namespace ratcurve {

/// Names of the variables a ParamPoly ranges over. Shared by every polynomial of one computation.
class ParamSpace {
public:
    explicit ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable, or size() if unknown.
    std::size_t find(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return static_cast<std::size_t>(it - names_.begin());
    }

private:
    std::vector<std::string> names_;
};

/// Monomial as sorted (variable, exponent) pairs; exponents are positive.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        std::vector<Factor> merged;
        for (const auto& f : factors_) {
            if (f.second == 0) continue;
            if (!merged.empty() && merged.back().first == f.first)
                merged.back().second += f.second;
            else
                merged.push_back(f);
        }
        factors_ = std::move(merged);
        for (const auto& f : factors_) degree_ += f.second;
    }

    static Monomial variable(std::uint32_t var) { return Monomial({{var, 1}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }

    std::uint32_t exponent(std::uint32_t var) const {
        for (const auto& f : factors_)
            if (f.first == var) return f.second;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.factors_.size() || j < b.factors_.size()) {
            if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
                r.factors_.push_back(a.factors_[i++]);
            } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
                r.factors_.push_back(b.factors_[j++]);
            } else {
                r.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
                ++i;
                ++j;
            }
        }
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// a / b when b divides a.
    bool divides(const Monomial& a) const {
        for (const auto& f : factors_)
            if (a.exponent(f.first) < f.second) return false;
        return true;
    }

    Monomial quotient_of(const Monomial& a) const {
        std::vector<Factor> out;
        for (const auto& f : a.factors_) {
            std::uint32_t e = f.second - exponent(f.first);
            if (e > 0) out.emplace_back(f.first, e);
        }
        return Monomial(std::move(out));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    /// Graded lexicographic order with variable 0 the largest.
    friend bool grlex_greater(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
        std::size_t i = 0;
        while (i < a.factors_.size() && i < b.factors_.size()) {
            const auto& fa = a.factors_[i];
            const auto& fb = b.factors_[i];
            if (fa.first != fb.first) return fa.first < fb.first;
            if (fa.second != fb.second) return fa.second > fb.second;
            ++i;
        }
        return i < a.factors_.size() && i == b.factors_.size();
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& f : factors_) {
            h ^= (static_cast<std::size_t>(f.first) << 20U) ^ f.second;
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse multivariate polynomial over Base in the variables of a ParamSpace.
/// Terms are kept in descending graded-lex order with no zero coefficients.
template <class Base>
class ParamPoly {
public:
    using Term = std::pair<Monomial, Base>;

    ParamPoly() = default;
    ParamPoly(std::shared_ptr<const ParamSpace> space, Base zero) : space_(std::move(space)), zero_(std::move(zero)) {}

    /// Sums arbitrary (monomial, coefficient) pairs; duplicates are merged and zeros dropped.
    static ParamPoly from_terms(std::shared_ptr<const ParamSpace> space, const Base& zero, std::vector<Term> terms) {
        ParamPoly r(std::move(space), zero);
        std::unordered_map<Monomial, Base, MonomialHash> acc;
        for (auto& [m, c] : terms) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
        for (auto& [m, c] : acc)
            if (!detail::scalar_is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }

    static ParamPoly constant(std::shared_ptr<const ParamSpace> space, const Base& c) {
        ParamPoly r(std::move(space), constant_like(c, 0));
        if (!detail::scalar_is_zero(c)) r.terms_.emplace_back(Monomial(), c);
        return r;
    }

    static ParamPoly variable(std::shared_ptr<const ParamSpace> space, std::size_t var, const Base& like) {
        if (var >= space->size())
            throw IndexOutOfRange("variable index " + std::to_string(var) + " not below " + std::to_string(space->size()));
        ParamPoly r(std::move(space), constant_like(like, 0));
        r.terms_.emplace_back(Monomial::variable(static_cast<std::uint32_t>(var)), constant_like(like, 1));
        return r;
    }

    const std::shared_ptr<const ParamSpace>& space() const { return space_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    const Base& zero_scalar() const { return zero_; }
    bool is_zero() const { return terms_.empty(); }

    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

    ParamPoly& operator+=(const ParamPoly& o) { return *this = merge(*this, o, false); }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = merge(*this, o, true); }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, false); }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, true); }
    friend ParamPoly operator-(const ParamPoly& a) {
        ParamPoly r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        a.check(b);
        ParamPoly r(a.space_ ? a.space_ : b.space_, a.zero_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
        if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
        std::unordered_map<Monomial, Base, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Monomial m = ta.first * tb.first;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), ta.second * tb.second);
                else
                    it->second += ta.second * tb.second;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!detail::scalar_is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }

    ParamPoly scaled(const Base& c) const {
        ParamPoly r(space_, zero_);
        if (detail::scalar_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Base v = t.second * c;
            if (!detail::scalar_is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
        }
        return r;
    }

    /// Exact quotient a / b; throws NonExactDivision when b does not divide a.
    friend ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
        a.check(b);
        if (b.terms_.empty()) throw DivisionByZero();
        ParamPoly quotient(a.space_ ? a.space_ : b.space_, a.zero_);
        ParamPoly rest = a;
        const auto& lead = b.terms_.front();
        const Base lead_inv = inverse(lead.second);
        while (!rest.terms_.empty()) {
            const auto& top = rest.terms_.front();
            if (!lead.first.divides(top.first)) throw NonExactDivision("parameter polynomial division is not exact");
            ParamPoly step(quotient.space_, a.zero_);
            step.terms_.emplace_back(lead.first.quotient_of(top.first), top.second * lead_inv);
            rest -= step * b;
            quotient += step;
        }
        return quotient;
    }

    friend ParamPoly operator/(const ParamPoly& a, const ParamPoly& b) { return exact_div(a, b); }

    /// Formal partial derivative in variable var.
    ParamPoly partial(std::size_t var) const {
        ParamPoly r(space_, zero_);
        const auto v = static_cast<std::uint32_t>(var);
        for (const auto& t : terms_) {
            std::uint32_t e = t.first.exponent(v);
            if (e == 0) continue;
            std::vector<Monomial::Factor> f;
            for (const auto& x : t.first.factors()) f.emplace_back(x.first, x.first == v ? x.second - 1 : x.second);
            Base c = t.second * constant_like(t.second, static_cast<long long>(e));
            if (!detail::scalar_is_zero(c)) r.terms_.emplace_back(Monomial(std::move(f)), std::move(c));
        }
        r.sort_terms();
        return r;
    }

    /// Substitutes point[i] for variable i.
    template <class Point>
    Base evaluate(const Point& point) const {
        Base sum = zero_;
        for (const auto& t : terms_) {
            Base v = t.second;
            for (const auto& f : t.first.factors())
                for (std::uint32_t e = 0; e < f.second; ++e) v = v * point[f.first];
            sum = sum + v;
        }
        return sum;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
        return true;
    }

    /// "l111*l120*p100 - 2*l110*p100^2"; "0" for the zero polynomial.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs.erase(0, 1);
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            std::string mono;
            for (const auto& [var, e] : m.factors()) {
                if (!mono.empty()) mono += "*";
                mono += space_ ? space_->name(var) : "x" + std::to_string(var);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                out += cs;
            else if (cs == "1")
                out += mono;
            else
                out += cs + "*" + mono;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

private:
    void check(const ParamPoly& o) const {
        if (space_ && o.space_ && space_ != o.space_ && space_->names() != o.space_->names())
            throw RingMismatch("parameter polynomials over different variable sets");
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
    }

    static ParamPoly merge(const ParamPoly& a, const ParamPoly& b, bool subtract) {
        a.check(b);
        ParamPoly r(a.space_ ? a.space_ : b.space_, a.zero_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].first, b.terms_[j].first))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].first, a.terms_[i].first)) {
                r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
                ++j;
            } else {
                Base c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (!detail::scalar_is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::shared_ptr<const ParamSpace> space_;
    Base zero_{};
    std::vector<Term> terms_;
};

template <class Base>
bool is_zero(const ParamPoly<Base>& x) { return x.is_zero(); }

template <class Base>
ParamPoly<Base> constant_like(const ParamPoly<Base>& like, long long v) {
    return ParamPoly<Base>::constant(like.space(), constant_like(like.zero_scalar(), v));
}

/// Only constants are units.
template <class Base>
ParamPoly<Base> inverse(const ParamPoly<Base>& x) {
    return exact_div(constant_like(x, 1), x);
}

template <class Base>
std::string to_string(const ParamPoly<Base>& x) { return x.str(); }

}  // namespace ratcurve

#endif  // RATCURVE_PARAM_POLY_HPP
