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

#ifndef RATCURVE_RANK_HPP
#define RATCURVE_RANK_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ratcurve/dense.hpp"
#include "ratcurve/ring.hpp"

namespace ratcurve {

/// Rank by Gaussian elimination over a field, normalizing each pivot row.
template <FieldElement Scalar>
int exact_rank_gauss(DenseMatrix<Scalar> m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r) {
            if (!detail::scalar_is_zero(m(r, c))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) m.row(pivot).swap(m.row(rank));
        const Scalar inv = inverse(m(rank, c));
        for (Eigen::Index j = c; j < cols; ++j) m(rank, j) = m(rank, j) * inv;
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (detail::scalar_is_zero(m(r, c))) continue;
            const Scalar factor = m(r, c);
            for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) - factor * m(rank, j);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing each row's denominators.
int exact_rank_bareiss(const DenseMatrix<Rational>& m);

/// Rank over the scalar's field. Rationals use fraction-free elimination; prime fields use
/// modular inverses.
inline int exact_rank(const DenseMatrix<Rational>& m) { return exact_rank_bareiss(m); }

template <FieldElement Scalar>
int exact_rank(const DenseMatrix<Scalar>& m) {
    return exact_rank_gauss(m);
}

}  // namespace ratcurve

#endif  // RATCURVE_RANK_HPP
