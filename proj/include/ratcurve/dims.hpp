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

#ifndef RATCURVE_DIMS_HPP
#define RATCURVE_DIMS_HPP

#include <string>

namespace ratcurve {

/// Integer bookkeeping for degree-d rational curves in P^n with balanced restricted tangent
/// bundle O(d+q)^a + O(d+q+1)^b.
struct ProblemDims {
    int n = 0;
    int d = 0;
    int q = 0;  ///< floor(d / n)
    int a = 0;  ///< (q+1)n - d rows of degree q in the syzygy matrix
    int b = 0;  ///< d - nq rows of degree q+1
    int domain_dim = 0;    ///< number of syzygy coefficients l_kij, p_kij
    int codomain_dim = 0;  ///< number of morphism coefficients f_ij, h_ij

    int l_count() const { return a * (n + 1) * (q + 1); }
    int p_count() const { return b * (n + 1) * (q + 2); }
    int f_degree() const { return d + q - 2; }
    int h_degree() const { return d + q - 1; }
    int difference() const { return domain_dim - codomain_dim; }

    friend bool operator==(const ProblemDims&, const ProblemDims&) = default;
};

/// Throws OutOfScope unless n >= 2 and d >= n + 1.
ProblemDims compute_dims(int n, int d);

std::string describe(const ProblemDims& dims);

}  // namespace ratcurve

#endif  // RATCURVE_DIMS_HPP
