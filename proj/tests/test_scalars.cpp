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

#include "ratcurve/jet.hpp"
#include "ratcurve/param_poly.hpp"
#include "ratcurve/prime_field.hpp"
#include "ratcurve/rational.hpp"
#include "test_support.hpp"

namespace ratcurve {
namespace {

using testing::random_rational;

TEST(Rational, ArithmeticExamples) {
    EXPECT_EQ(Rational(mpz_class(1), mpz_class(2)) + Rational(mpz_class(1), mpz_class(3)),
              Rational(mpz_class(5), mpz_class(6)));
    EXPECT_EQ(Rational(mpz_class(2), mpz_class(4)).str(), "1/2");
    EXPECT_EQ(Rational(mpz_class(-3), mpz_class(1)).str(), "-3");
    EXPECT_EQ(Rational::parse("-6/4"), Rational(mpz_class(-3), mpz_class(2)));
    EXPECT_EQ(Rational(7) * inverse(Rational(7)), Rational(1));
}

TEST(Rational, Errors) {
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
    EXPECT_THROW(inverse(Rational(0)), DivisionByZero);
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("x"), ParseError);
}

TEST(PrimeField, Construction) {
    EXPECT_NO_THROW(PrimeField(1000003));
    EXPECT_THROW(PrimeField(1000001), InputError);
    EXPECT_THROW(PrimeField(1ULL << 62U), InputError);
    EXPECT_TRUE(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_FALSE(is_prime_u64(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(PrimeField, ArithmeticExamples) {
    const PrimeField f(7);
    const PrimeFieldElem three(f, 3);
    EXPECT_EQ((three * PrimeFieldElem(f, 5)).residue(), 1U);
    EXPECT_EQ(inverse(three).residue(), 5U);
    EXPECT_EQ(PrimeFieldElem(f, -1).residue(), 6U);
    EXPECT_EQ(PrimeFieldElem::from_rational(f, Rational(mpz_class(1), mpz_class(2))).residue(), 4U);
    EXPECT_THROW(inverse(PrimeFieldElem(f, 0)), DivisionByZero);
    EXPECT_THROW(PrimeFieldElem::from_rational(f, Rational(mpz_class(1), mpz_class(14))), DivisionByZero);
    EXPECT_THROW(three + PrimeFieldElem(PrimeField(11), 1), RingMismatch);
    EXPECT_EQ(three.str(), "3 mod 7");
}

TEST(PrimeField, LargeModulusProducts) {
    const PrimeField f(4611686018427387847ULL);  // largest prime below 2^62
    const PrimeFieldElem a(f, -2);
    EXPECT_EQ((a * a).residue(), 4U);
    EXPECT_EQ((a * inverse(a)).residue(), 1U);
}

template <class T>
bool invertible(const T& x) {
    if constexpr (requires { x.value(); })
        return !is_zero(x.value());
    else
        return !is_zero(x);
}

template <class T, class Gen>
void check_ring_axioms(Gen gen, int cases, bool field) {
    for (int i = 0; i < cases; ++i) {
        const T a = gen();
        const T b = gen();
        const T c = gen();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE(is_zero(a - a));
        EXPECT_EQ(a + constant_like(a, 0), a);
        EXPECT_EQ(a * constant_like(a, 1), a);
        EXPECT_EQ(-(-a), a);
        if (field && invertible(b)) {
            EXPECT_EQ((a / b) * b, a);
            EXPECT_EQ(b * inverse(b), constant_like(b, 1));
        }
    }
}

TEST(RingAxioms, Rational) {
    std::mt19937_64 rng(11);
    check_ring_axioms<Rational>([&] { return random_rational(rng); }, 200, true);
}

TEST(RingAxioms, PrimeField) {
    std::mt19937_64 rng(12);
    const PrimeField f(1000003);
    std::uniform_int_distribution<long long> dist(0, 1000002);
    check_ring_axioms<PrimeFieldElem>([&] { return PrimeFieldElem(f, dist(rng)); }, 200, true);
}

TEST(RingAxioms, JetOverRational) {
    std::mt19937_64 rng(13);
    auto gen = [&] {
        std::vector<Rational> g;
        for (int i = 0; i < 3; ++i) g.push_back(random_rational(rng));
        return Jet<Rational>(random_rational(rng), g);
    };
    check_ring_axioms<Jet<Rational>>(gen, 200, true);
}

TEST(RingAxioms, ParamPoly) {
    std::mt19937_64 rng(14);
    auto space = std::make_shared<const ParamSpace>(std::vector<std::string>{"x", "y", "z"});
    auto gen = [&] {
        ParamPoly<Rational> p(space, Rational(0));
        for (int k = 0; k < 3; ++k) {
            auto term = ParamPoly<Rational>::constant(space, random_rational(rng, 5));
            std::uniform_int_distribution<int> var(0, 2);
            for (int e = 0; e < k; ++e) term = term * ParamPoly<Rational>::variable(space, var(rng), Rational(0));
            p = p + term;
        }
        return p;
    };
    check_ring_axioms<ParamPoly<Rational>>(gen, 200, false);
}

// Reduction mod p is a ring homomorphism on rationals with invertible denominators.
TEST(PrimeField, ReductionIsHomomorphism) {
    std::mt19937_64 rng(15);
    const PrimeField f(1000003);
    auto red = [&](const Rational& q) { return PrimeFieldElem::from_rational(f, q); };
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        EXPECT_EQ(red(a + b), red(a) + red(b));
        EXPECT_EQ(red(a * b), red(a) * red(b));
        EXPECT_EQ(red(a - b), red(a) - red(b));
        if (!b.is_zero()) EXPECT_EQ(red(a / b), red(a) / red(b));
    }
}

TEST(Jet, ProductAndQuotientRules) {
    const auto x = Jet<Rational>::lift(Rational(3), 0, 2);
    const auto y = Jet<Rational>::lift(Rational(5), 1, 2);
    const auto p = x * x * y;  // x^2 y
    EXPECT_EQ(p.value(), Rational(45));
    EXPECT_EQ(p.partial(0), Rational(30));
    EXPECT_EQ(p.partial(1), Rational(9));
    const auto q = x / y;
    EXPECT_EQ(q.partial(0), Rational(mpz_class(1), mpz_class(5)));
    EXPECT_EQ(q.partial(1), Rational(mpz_class(-3), mpz_class(25)));
    EXPECT_THROW(Jet<Rational>::lift(Rational(1), 2, 2), IndexOutOfRange);
    EXPECT_FALSE(constant_like(x, 4).has_gradient());
}

// Jet partials agree with symbolic partials evaluated at the same point.
TEST(Jet, MatchesParamPolyPartials) {
    std::mt19937_64 rng(16);
    auto space = std::make_shared<const ParamSpace>(std::vector<std::string>{"a", "b", "c"});
    using P = ParamPoly<Rational>;
    const P a = P::variable(space, 0, Rational(0));
    const P b = P::variable(space, 1, Rational(0));
    const P c = P::variable(space, 2, Rational(0));
    const P f = a * a * b - P::constant(space, Rational(3)) * b * c * c + a * b * c + c;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> pt{random_rational(rng), random_rational(rng), random_rational(rng)};
        std::vector<Jet<Rational>> x;
        for (std::size_t i = 0; i < 3; ++i) x.push_back(Jet<Rational>::lift(pt[i], i, 3));
        const auto three = constant_like(x[0], 3);
        const auto jf = x[0] * x[0] * x[1] - three * x[1] * x[2] * x[2] + x[0] * x[1] * x[2] + x[2];
        EXPECT_EQ(jf.value(), f.evaluate(pt));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(jf.partial(i), f.partial(i).evaluate(pt));
    }
}

TEST(ParamPoly, TextAndExactDivision) {
    auto space = std::make_shared<const ParamSpace>(std::vector<std::string>{"x", "y"});
    using P = ParamPoly<Rational>;
    const P x = P::variable(space, 0, Rational(0));
    const P y = P::variable(space, 1, Rational(0));
    const P f = (x + y) * (x - P::constant(space, Rational(2)) * y);
    EXPECT_EQ(f.str(), "x^2 - x*y - 2*y^2");
    EXPECT_EQ(exact_div(f, x + y), x - P::constant(space, Rational(2)) * y);
    EXPECT_THROW(exact_div(f, x + P::constant(space, Rational(1))), NonExactDivision);
    EXPECT_EQ(space->find("y"), 1U);
    EXPECT_EQ(space->find("w"), space->size());
    EXPECT_THROW(P::variable(space, 5, Rational(0)), IndexOutOfRange);
}

}  // namespace
}  // namespace ratcurve
