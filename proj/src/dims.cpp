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

#include "ratcurve/dims.hpp"

#include "ratcurve/errors.hpp"

namespace ratcurve {

ProblemDims compute_dims(int n, int d) {
    if (n < 2) throw OutOfScope(n, d, "n must be at least 2");
    if (d == n) throw OutOfScope(n, d, "d = n is the rational normal curve; every morphism is induced, nothing to compute");
    if (d < n) throw OutOfScope(n, d, "d < n gives a degenerate curve");
    ProblemDims r;
    r.n = n;
    r.d = d;
    r.q = d / n;
    r.a = (r.q + 1) * n - d;
    r.b = d - n * r.q;
    r.domain_dim = ((r.q + 1) * r.a + (r.q + 2) * r.b) * (n + 1);
    r.codomain_dim = r.a * (d + r.q - 1) + r.b * (d + r.q);
    if (r.a + r.b != n || r.a < 0 || r.b < 0 || r.a * (d + r.q) + r.b * (d + r.q + 1) != (n + 1) * d ||
        r.domain_dim - r.codomain_dim != n * n + 2 * n)
        throw Error("dimension bookkeeping failed for n=" + std::to_string(n) + ", d=" + std::to_string(d));
    return r;
}

std::string describe(const ProblemDims& dims) {
    return "n=" + std::to_string(dims.n) + " d=" + std::to_string(dims.d) + " q=" + std::to_string(dims.q) +
           " a=" + std::to_string(dims.a) + " b=" + std::to_string(dims.b) + " dom=" + std::to_string(dims.domain_dim) +
           " codom=" + std::to_string(dims.codomain_dim) + " diff=" + std::to_string(dims.difference());
}

}  // namespace ratcurve
