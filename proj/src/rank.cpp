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

#include "ratcurve/rank.hpp"

namespace ratcurve {

int exact_rank_bareiss(const DenseMatrix<Rational>& m) {
    const auto rows = static_cast<std::size_t>(m.rows());
    const auto cols = static_cast<std::size_t>(m.cols());
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& den = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).raw().get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& q = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).raw();
            a[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (sgn(a[r][c]) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const mpz_class& p = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const mpz_class factor = a[r][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][j] * p - factor * a[rank][j];
                mpz_divexact(a[r][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = p;
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace ratcurve
