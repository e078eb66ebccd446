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

#include "ratcurve/dims.hpp"
#include "ratcurve/errors.hpp"

namespace ratcurve {
namespace {

TEST(Dims, Examples) {
    const ProblemDims a = compute_dims(4, 5);
    EXPECT_EQ(a.q, 1);
    EXPECT_EQ(a.a, 3);
    EXPECT_EQ(a.b, 1);
    EXPECT_EQ(a.domain_dim, 45);
    EXPECT_EQ(a.codomain_dim, 21);
    EXPECT_EQ(a.difference(), 24);
    EXPECT_EQ(describe(a), "n=4 d=5 q=1 a=3 b=1 dom=45 codom=21 diff=24");

    const ProblemDims b = compute_dims(2, 3);
    EXPECT_EQ(b.codomain_dim, 7);
    EXPECT_EQ(b.domain_dim, 15);
    EXPECT_EQ(b.difference(), 8);

    const ProblemDims c = compute_dims(5, 9);
    EXPECT_EQ(c.codomain_dim, 49);
    EXPECT_EQ(c.domain_dim, 84);

    const ProblemDims e = compute_dims(2, 4);
    EXPECT_EQ(e.b, 0);
    EXPECT_EQ(e.a, 2);
}

TEST(Dims, OutOfScope) {
    EXPECT_THROW(compute_dims(3, 3), OutOfScope);
    EXPECT_THROW(compute_dims(4, 2), OutOfScope);
    EXPECT_THROW(compute_dims(1, 5), OutOfScope);
}

TEST(Dims, InvariantsAcrossRange) {
    for (int n = 2; n <= 10; ++n) {
        for (int d = n + 1; d <= 40; ++d) {
            const ProblemDims x = compute_dims(n, d);
            EXPECT_EQ(x.a + x.b, n);
            EXPECT_EQ(x.a * (x.q + 1) + x.b * (x.q + 2), d + n);
            EXPECT_EQ(x.difference(), n * n + 2 * n);
            EXPECT_EQ(x.l_count() + x.p_count(), x.domain_dim);
            EXPECT_EQ(x.a * (x.f_degree() + 1) + x.b * (x.h_degree() + 1), x.codomain_dim);
        }
    }
}

}  // namespace
}  // namespace ratcurve
