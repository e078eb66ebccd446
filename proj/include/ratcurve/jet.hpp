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

#ifndef RATCURVE_JET_HPP
#define RATCURVE_JET_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/errors.hpp"
#include "ratcurve/ring.hpp"

namespace ratcurve {

/// First-order jet: a value with its exact gradient with respect to a fixed set of parameters.
///
/// Every jet in one computation has the same logical gradient length. A jet whose gradient is
/// identically zero stores no gradient entries; this keeps structural zeros and constants cheap.
template <class Base>
class Jet {
public:
    Jet() = default;
    Jet(Base value, std::size_t n_params) : value_(std::move(value)), n_params_(n_params) {}
    Jet(Base value, std::vector<Base> gradient)
        : value_(std::move(value)), n_params_(gradient.size()), grad_(std::move(gradient)) {
        prune();
    }

    /// The variable x_index evaluated at x.
    static Jet lift(const Base& x, std::size_t param_index, std::size_t n_params) {
        if (param_index >= n_params)
            throw IndexOutOfRange("parameter index " + std::to_string(param_index) + " not below " +
                                  std::to_string(n_params));
        Jet j(x, n_params);
        j.grad_.assign(n_params, constant_like(x, 0));
        j.grad_[param_index] = constant_like(x, 1);
        return j;
    }

    const Base& value() const { return value_; }
    std::size_t n_params() const { return n_params_; }
    bool has_gradient() const { return !grad_.empty(); }

    /// Entry i of the gradient.
    Base partial(std::size_t i) const { return grad_.empty() ? constant_like(value_, 0) : grad_.at(i); }

    std::vector<Base> gradient() const {
        if (grad_.empty()) return std::vector<Base>(n_params_, constant_like(value_, 0));
        return grad_;
    }

    bool is_zero() const { return detail::scalar_is_zero(value_) && grad_.empty(); }

    Jet& operator+=(const Jet& o) {
        check(o);
        value_ += o.value_;
        if (!o.grad_.empty()) {
            if (grad_.empty()) {
                grad_ = o.grad_;
            } else {
                for (std::size_t i = 0; i < grad_.size(); ++i) grad_[i] += o.grad_[i];
            }
            prune();
        }
        return *this;
    }

    Jet& operator-=(const Jet& o) {
        check(o);
        value_ -= o.value_;
        if (!o.grad_.empty()) {
            if (grad_.empty()) {
                grad_.reserve(o.grad_.size());
                for (const auto& g : o.grad_) grad_.push_back(-g);
            } else {
                for (std::size_t i = 0; i < grad_.size(); ++i) grad_[i] -= o.grad_[i];
            }
            prune();
        }
        return *this;
    }

    Jet& operator*=(const Jet& o) {
        *this = *this * o;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(const Jet& a) {
        Jet r(-a.value_, a.n_params_);
        r.grad_.reserve(a.grad_.size());
        for (const auto& g : a.grad_) r.grad_.push_back(-g);
        return r;
    }

    // Product rule: (u v)' = u v' + v u'.
    friend Jet operator*(const Jet& a, const Jet& b) {
        a.check(b);
        Jet r(a.value_ * b.value_, a.n_params_);
        const bool ga = !a.grad_.empty() && !detail::scalar_is_zero(b.value_);
        const bool gb = !b.grad_.empty() && !detail::scalar_is_zero(a.value_);
        if (ga && gb) {
            r.grad_.reserve(a.n_params_);
            for (std::size_t i = 0; i < a.n_params_; ++i) r.grad_.push_back(a.grad_[i] * b.value_ + b.grad_[i] * a.value_);
        } else if (ga) {
            r.grad_.reserve(a.n_params_);
            for (std::size_t i = 0; i < a.n_params_; ++i) r.grad_.push_back(a.grad_[i] * b.value_);
        } else if (gb) {
            r.grad_.reserve(a.n_params_);
            for (std::size_t i = 0; i < a.n_params_; ++i) r.grad_.push_back(b.grad_[i] * a.value_);
        }
        r.prune();
        return r;
    }

    // Quotient rule; needs an invertible value.
    friend Jet operator/(const Jet& a, const Jet& b) {
        a.check(b);
        if (detail::scalar_is_zero(b.value_)) throw DivisionByZero();
        const Base inv = inverse(b.value_);
        Jet r(a.value_ * inv, a.n_params_);
        if (a.grad_.empty() && b.grad_.empty()) return r;
        const Base inv2 = inv * inv;
        r.grad_.reserve(a.n_params_);
        for (std::size_t i = 0; i < a.n_params_; ++i)
            r.grad_.push_back((a.partial(i) * b.value_ - a.value_ * b.partial(i)) * inv2);
        r.prune();
        return r;
    }

    friend bool operator==(const Jet& a, const Jet& b) {
        if (a.n_params_ != b.n_params_ || !(a.value_ == b.value_)) return false;
        if (a.grad_.empty() || b.grad_.empty()) return a.grad_.empty() && b.grad_.empty();
        return a.grad_ == b.grad_;
    }

    std::string str() const {
        std::string out = "Jet(" + to_string(value_) + ", [";
        for (std::size_t i = 0; i < n_params_; ++i) {
            if (i) out += ", ";
            out += to_string(partial(i));
        }
        return out + "])";
    }

    friend std::ostream& operator<<(std::ostream& os, const Jet& j) { return os << j.str(); }

private:
    void check(const Jet& o) const {
        if (n_params_ != o.n_params_) throw RingMismatch("jets with different gradient lengths");
    }

    void prune() {
        for (const auto& g : grad_)
            if (!detail::scalar_is_zero(g)) return;
        grad_.clear();
    }

    Base value_{};
    std::size_t n_params_ = 0;
    std::vector<Base> grad_;
};

template <class Base>
bool is_zero(const Jet<Base>& x) { return x.is_zero(); }

template <class Base>
Jet<Base> constant_like(const Jet<Base>& like, long long v) {
    return Jet<Base>(constant_like(like.value(), v), like.n_params());
}

template <class Base>
Jet<Base> inverse(const Jet<Base>& x) { return constant_like(x, 1) / x; }

template <class Base>
Jet<Base> exact_div(const Jet<Base>& a, const Jet<Base>& b) { return a / b; }

template <class Base>
std::string to_string(const Jet<Base>& x) { return x.str(); }

template <class Base>
Jet<Base> jet_lift(const Base& x, std::size_t param_index, std::size_t n_params) {
    return Jet<Base>::lift(x, param_index, n_params);
}

}  // namespace ratcurve

#endif  // RATCURVE_JET_HPP
