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

#include "properties.hpp"
#include "ratcurve/report.hpp"
#include "ratcurve/symbolic.hpp"
#include "test_support.hpp"

namespace ratcurve {
namespace {

using namespace ratcurve::testing;

TEST(Pipeline, ExampleThreeOneFixture) {
    const auto fixture = load_fixture("example_3_1_params.json");
    const auto params = params_from_json(fixture);
    const auto tr = run_pipeline(params);
    const auto& exp = fixture["expected"];
    const Rational eps(fixture["epsilon"].get<long long>());
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(tr.curve.g[i], parse_q(exp["G"][i], 5) * eps);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 2; ++c)
            EXPECT_EQ(tr.jacobian(r, c), parse_q(exp["J"][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], 4) * eps);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 2; ++c)
            EXPECT_EQ(tr.lp_times_j(r, c),
                      parse_q(exp["LPJ"][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], r < 3 ? 5 : 6) * eps);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(tr.fh.f[i], parse_q(exp["F"][i], 4) * eps);
    EXPECT_EQ(tr.fh.h[0], parse_q(exp["H"][0], 5) * eps);
    EXPECT_TRUE(identity_battery(params).ok());
}

TEST(Pipeline, ZeroParamsAreDegenerate) {
    const ProblemDims dims = compute_dims(2, 3);
    const SyzygyParams<Rational> zero(dims, std::vector<Rational>(15, Rational(0)));
    EXPECT_THROW(psi(zero), DegenerateParameters);
    EXPECT_THROW(SyzygyParams<Rational>(dims, std::vector<Rational>(3, Rational(1))), DimensionMismatch);
}

TEST(Pipeline, Names) {
    const auto names = param_names(compute_dims(2, 3));
    ASSERT_EQ(names.size(), 15U);
    EXPECT_EQ(names.front(), "l100");
    EXPECT_EQ(names[6], "p100");
    EXPECT_EQ(names.back(), "p122");
    const auto m = morphism_names(compute_dims(2, 3));
    EXPECT_EQ(m, (std::vector<std::string>{"f10", "f11", "f12", "h10", "h11", "h12", "h13"}));
    EXPECT_EQ(param_names(compute_dims(2, 25)).back(), "p1_2_13");
}

// Small cells here; the acceptance runner covers the whole grid.
class PipelineProperties : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(PipelineProperties, HundredRandomPoints) {
    const auto [n, d] = GetParam();
    const ProblemDims dims = compute_dims(n, d);
    std::mt19937_64 rng(static_cast<std::uint64_t>(100 * n + d));
    const PrimeField field(1000003);
    int cases = 0;
    while (cases < 100) {
        const auto params = random_params(dims, rng);
        PipelineTrace<Rational> tr;
        try {
            tr = run_pipeline(params);
        } catch (const DegenerateParameters&) {
            continue;
        }
        ++cases;
        EXPECT_EQ(prop_lp_g(tr), "");
        EXPECT_EQ(prop_euler(tr, d), "");
        EXPECT_EQ(prop_round_trip(tr, dims), "");
        EXPECT_EQ(prop_homogeneity(params, random_rational(rng, 5) + Rational(7)), "");
        EXPECT_EQ(prop_prime_reduction(params, field), "");
        if (cases % 10 == 0) EXPECT_EQ(prop_det_fraction_free(tr.lp), "");
    }
}

INSTANTIATE_TEST_SUITE_P(SmallCells, PipelineProperties,
                         ::testing::Values(std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 4},
                                           std::pair{3, 5}, std::pair{4, 5}, std::pair{4, 6}));

// The symbolic pipeline agrees with numeric evaluation.
TEST(Pipeline, SymbolicMatchesNumeric) {
    const ProblemDims dims = compute_dims(2, 3);
    const auto space = param_space(dims);
    const auto sym = psi(symbolic_params(dims, space));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto params = random_params(dims, rng);
        std::vector<Rational> num;
        try {
            num = psi(params);
        } catch (const DegenerateParameters&) {
            continue;
        }
        for (std::size_t i = 0; i < num.size(); ++i) EXPECT_EQ(sym[i].evaluate(params.values()), num[i]);
    }
    // Every component is a form of degree n+1 in the parameters.
    for (const auto& c : sym) {
        ASSERT_FALSE(c.is_zero());
        for (const auto& [mono, coeff] : c.terms()) EXPECT_EQ(mono.degree(), 3U);
    }
}

TEST(Pipeline, ExampleFourTwoFormulaOne) {
    // f10 for (n, d) = (2, 3), expanded by hand from the 2 x 2 minors.
    const ProblemDims dims = compute_dims(2, 3);
    const auto space = param_space(dims);
    const auto sym = psi(symbolic_params(dims, space));
    const auto expected = parse_formula(
        "-l100 l111 p120 + l100 l121 p110 + l101 l110 p120 - l101 l120 p110 - l110 l121 p100 + l111 l120 p100", space);
    EXPECT_EQ(sym[0], expected);
}

}  // namespace
}  // namespace ratcurve
