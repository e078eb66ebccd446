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

#include "ratcurve/poly_matrix.hpp"
#include "test_support.hpp"

namespace ratcurve {
namespace {

using testing::parse_q;
using testing::random_poly;
using Q = HomogPoly<Rational>;
using M = PolyMatrix<Rational>;

Q lin(long long cs, long long ct) { return Q(std::vector<Rational>{Rational(ct), Rational(cs)}); }

TEST(PolyMatrix, MinorsOfLinearRow) {
    // (-t, s) has signed maximal minors (s, t).
    const M a = M::from_rows({{lin(0, -1), lin(1, 0)}});
    const auto g = signed_maximal_minors(a);
    ASSERT_EQ(g.size(), 2U);
    EXPECT_EQ(g[0], lin(1, 0));
    EXPECT_EQ(g[1], lin(0, 1));
}

TEST(PolyMatrix, DeterminantExample) {
    // det [[s, t], [t, s]] = s^2 - t^2
    const M a = M::from_rows({{lin(1, 0), lin(0, 1)}, {lin(0, 1), lin(1, 0)}});
    EXPECT_EQ(poly_det(a), parse_q("-t^2 + s^2", 2));
    EXPECT_EQ(det_fraction_free(a), poly_det(a));
}

TEST(PolyMatrix, DeterminantNeedsRowSwap) {
    // Leading entry zero forces a pivot swap in the fraction-free path.
    const M a = M::from_rows({{Q(1, Rational(0)), lin(1, 0), lin(0, 1)},
                              {lin(1, 1), lin(2, 0), lin(0, 3)},
                              {lin(0, 1), lin(1, -1), lin(5, 0)}});
    EXPECT_EQ(det_fraction_free(a), poly_det(a));
}

TEST(PolyMatrix, BareissMatchesCofactorOnRandomMatrices) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int size = 1 + static_cast<int>(rng() % 5);
        std::vector<std::vector<Q>> rows;
        for (int k = 0; k < size; ++k) {
            const int deg = static_cast<int>(rng() % 3);
            std::vector<Q> row;
            for (int i = 0; i < size; ++i) row.push_back(rng() % 4 == 0 ? Q(deg, Rational(0)) : random_poly(rng, deg));
            rows.push_back(row);
        }
        const M a = M::from_rows(rows);
        EXPECT_EQ(det_fraction_free(a), poly_det(a)) << "trial " << trial;
    }
}

TEST(PolyMatrix, MinorsAnnihilateRows) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Q>> rows;
        for (int k = 0; k < n; ++k) {
            const int deg = 1 + static_cast<int>(rng() % 2);
            std::vector<Q> row;
            for (int i = 0; i <= n; ++i) row.push_back(random_poly(rng, deg));
            rows.push_back(row);
        }
        const M a = M::from_rows(rows);
        const auto g = signed_maximal_minors(a);
        for (int k = 0; k < n; ++k) {
            Q acc(a.row_degree(k) + g[0].degree(), Rational(0));
            for (int i = 0; i <= n; ++i) acc = acc + a(k, i) * g[static_cast<std::size_t>(i)];
            EXPECT_TRUE(acc.is_zero());
        }
        for (int i = 0; i <= n; ++i) EXPECT_EQ(g[static_cast<std::size_t>(i)] * Rational(i % 2 ? -1 : 1),
                                               det_fraction_free(a.without_column(i)));
    }
}

TEST(PolyMatrix, ShapeErrors) {
    const M a = M::from_rows({{lin(1, 0), lin(0, 1), lin(1, 1)}});
    EXPECT_THROW(poly_det(a), NotSquare);
    EXPECT_THROW(det_fraction_free(a), NotSquare);
    EXPECT_THROW(signed_maximal_minors(M::from_rows({{lin(1, 0)}, {lin(0, 1)}})), ShapeMismatch);
    EXPECT_THROW(M::from_rows({{lin(1, 0), Q(2, Rational(0))}}), DegreeMismatch);
    EXPECT_THROW(mat_mul(a, a), ShapeMismatch);
}

TEST(PolyMatrix, Product) {
    const M a = M::from_rows({{lin(1, 0), lin(0, 1)}});
    const M b = M::from_rows({{lin(1, 0)}, {lin(0, -1)}});
    EXPECT_EQ(mat_mul(a, b)(0, 0), parse_q("-t^2 + s^2", 2));
}

}  // namespace
}  // namespace ratcurve
