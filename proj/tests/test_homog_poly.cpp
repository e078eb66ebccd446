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

#include <gtest/gtest.h>

#include <random>

#include "ratcurve/homog_poly.hpp"
#include "ratcurve/prime_field.hpp"
#include "test_support.hpp"

namespace ratcurve {
namespace {

using testing::parse_q;
using testing::random_poly;
using Q = HomogPoly<Rational>;

Q s_pow(int j, int d, long long c = 1) { return Q::monomial(d, j, Rational(c)); }

TEST(HomogPoly, TextForm) {
    const Q p(std::vector<Rational>{Rational(0), Rational(16), Rational(8), Rational(4), Rational(0)});
    EXPECT_EQ(p.str(), "16*s*t^3 + 8*s^2*t^2 + 4*s^3*t");
    EXPECT_EQ(Q(3, Rational(0)).str(), "0");
    EXPECT_EQ(s_pow(0, 2, -1).str(), "-t^2");
    EXPECT_EQ(Q(std::vector<Rational>{Rational(mpz_class(1), mpz_class(2))}).str(), "1/2");
    const PrimeField f(7);
    const HomogPoly<PrimeFieldElem> pf(std::vector<PrimeFieldElem>{PrimeFieldElem(f, 3), PrimeFieldElem(f, -1)});
    EXPECT_EQ(pf.str(), "3*t + 6*s");
}

TEST(HomogPoly, ParseRenderRoundTrip) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const int d = static_cast<int>(rng() % 7);
        const Q p = random_poly(rng, d);
        EXPECT_EQ(parse_q(p.str(), d), p) << p.str();
    }
    EXPECT_EQ(parse_q("4*s^2*t^2*s", 5), Q::monomial(5, 3, Rational(4))) << "repeated variables multiply";
    EXPECT_THROW(parse_q("s^2 + t", 2), Error);
    EXPECT_THROW(parse_q("", 2), ParseError);
}

TEST(HomogPoly, ArithmeticExamples) {
    const Q s = s_pow(1, 1);
    const Q t = s_pow(0, 1);
    EXPECT_EQ(((s + t) * (s - t)).str(), "-t^2 + s^2");
    EXPECT_EQ(poly_mul_linear(s + t, Var::S), s * (s + t));
    EXPECT_EQ(poly_mul_linear(s + t, Var::T), t * (s + t));
    EXPECT_EQ(poly_div_linear(s * (s + t), Var::S), s + t);
    EXPECT_THROW(poly_div_linear(s + t, Var::S), NotDivisible);
    EXPECT_THROW(poly_div_linear(Q(0, Rational(0)), Var::T), NotDivisible);
    EXPECT_THROW(s + s * s, DegreeMismatch);
}

TEST(HomogPoly, Evaluation) {
    const Q p = parse_q("2*t^3 - s*t^2 + 5*s^3", 3);
    EXPECT_EQ(poly_eval(p, Rational(2), Rational(-1)), Rational(2 * -1 - 2 * 1 + 5 * 8));
}

TEST(HomogPoly, Partials) {
    const Q p = parse_q("2*t^3 - s*t^2 + 5*s^3", 3);
    EXPECT_EQ(poly_partial(p, Var::S), parse_q("-t^2 + 15*s^2", 2));
    EXPECT_EQ(poly_partial(p, Var::T), parse_q("6*t^2 - 2*s*t", 2));
    EXPECT_THROW(poly_partial(Q(std::vector<Rational>{Rational(3)}), Var::S), DegreeZero);
}

// s dp/ds + t dp/dt = deg(p) p.
TEST(HomogPoly, EulerIdentity) {
    std::mt19937_64 rng(22);
    const Q s = s_pow(1, 1);
    const Q t = s_pow(0, 1);
    for (int i = 0; i < 200; ++i) {
        const int d = 1 + static_cast<int>(rng() % 8);
        const Q p = random_poly(rng, d);
        EXPECT_EQ(s * poly_partial(p, Var::S) + t * poly_partial(p, Var::T), p * Rational(d));
    }
}

TEST(HomogPoly, ExactDivision) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const Q a = random_poly(rng, static_cast<int>(rng() % 5));
        const Q b = random_poly(rng, static_cast<int>(rng() % 5));
        if (b.is_zero()) continue;
        EXPECT_EQ(poly_exact_div(a * b, b), a);
    }
    const Q s = s_pow(1, 1);
    const Q t = s_pow(0, 1);
    EXPECT_THROW(poly_exact_div(s * s + t * t, s + t), NonExactDivision);
    EXPECT_THROW(poly_exact_div(s, Q(0, Rational(0))), DivisionByZero);
    EXPECT_THROW(poly_exact_div(s, s * s), NonExactDivision);
}

TEST(HomogPoly, GcdExamples) {
    const Q s = s_pow(1, 1);
    const Q t = s_pow(0, 1);
    EXPECT_EQ(poly_gcd(s * (s + t), t * (s + t) * Rational(3)), s + t);
    EXPECT_EQ(poly_gcd(t * t * s, t * (s - t)), t);
    EXPECT_EQ(poly_gcd(s * s, t * t).degree(), 0);
    EXPECT_EQ(poly_gcd(Q(2, Rational(0)), (s + t) * Rational(2) * (s - t)), (s + t) * (s - t));
    EXPECT_THROW(poly_gcd(Q(1, Rational(0)), Q(1, Rational(0))), BothZero);
}

TEST(HomogPoly, GcdOfCoprimeRandomFactors) {
    std::mt19937_64 rng(24);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const Q g = random_poly(rng, 2);
        const Q a = random_poly(rng, 2);
        const Q b = random_poly(rng, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        if (poly_gcd(a, b).degree() != 0) continue;
        const Q got = poly_gcd(g * a, g * b);
        EXPECT_EQ(got.degree(), 2);
        EXPECT_NO_THROW(poly_exact_div(g, got));
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace ratcurve
