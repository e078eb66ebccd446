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

#ifndef RATCURVE_POLY_MATRIX_HPP
#define RATCURVE_POLY_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/errors.hpp"
#include "ratcurve/homog_poly.hpp"

namespace ratcurve {

/// Dense matrix of homogeneous polynomials; every entry of row k has degree row_degree(k).
template <RingElement T>
class PolyMatrix {
public:
    PolyMatrix() = default;

    /// Zero matrix with the given row degrees.
    PolyMatrix(std::vector<int> row_degrees, int cols, const T& like)
        : rows_(static_cast<int>(row_degrees.size())), cols_(cols), row_degrees_(std::move(row_degrees)) {
        if (rows_ <= 0 || cols_ <= 0) throw ShapeMismatch("matrix dimensions must be positive");
        entries_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
        for (int k = 0; k < rows_; ++k)
            for (int i = 0; i < cols_; ++i) entries_.emplace_back(row_degrees_[static_cast<std::size_t>(k)], like);
    }

    /// From rows of polynomials; each row must be degree-uniform.
    static PolyMatrix from_rows(const std::vector<std::vector<HomogPoly<T>>>& rows) {
        if (rows.empty() || rows.front().empty()) throw ShapeMismatch("matrix dimensions must be positive");
        PolyMatrix m;
        m.rows_ = static_cast<int>(rows.size());
        m.cols_ = static_cast<int>(rows.front().size());
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m.cols_) throw ShapeMismatch("ragged rows");
            const int deg = row.front().degree();
            for (const auto& e : row)
                if (e.degree() != deg) throw DegreeMismatch(deg, e.degree());
            m.row_degrees_.push_back(deg);
            m.entries_.insert(m.entries_.end(), row.begin(), row.end());
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int row_degree(int k) const { return row_degrees_.at(static_cast<std::size_t>(k)); }
    const std::vector<int>& row_degrees() const { return row_degrees_; }

    const HomogPoly<T>& operator()(int k, int i) const { return entries_[index(k, i)]; }

    /// Replaces entry (k, i); the degree must match the row degree.
    void set(int k, int i, HomogPoly<T> p) {
        if (p.degree() != row_degree(k)) throw DegreeMismatch(row_degree(k), p.degree());
        entries_.at(index(k, i)) = std::move(p);
    }

    /// Copy with column i removed.
    PolyMatrix without_column(int col) const {
        if (cols_ < 2) throw ShapeMismatch("cannot delete the only column");
        PolyMatrix m;
        m.rows_ = rows_;
        m.cols_ = cols_ - 1;
        m.row_degrees_ = row_degrees_;
        for (int k = 0; k < rows_; ++k)
            for (int i = 0; i < cols_; ++i)
                if (i != col) m.entries_.push_back((*this)(k, i));
        return m;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    /// One canonical polynomial string per entry, row by row.
    std::vector<std::vector<std::string>> render() const {
        std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
        for (int k = 0; k < rows_; ++k)
            for (int i = 0; i < cols_; ++i) out[static_cast<std::size_t>(k)].push_back((*this)(k, i).str());
        return out;
    }

private:
    std::size_t index(int k, int i) const {
        if (k < 0 || k >= rows_ || i < 0 || i >= cols_) throw IndexOutOfRange("matrix index out of range");
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(i);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_degrees_;
    std::vector<HomogPoly<T>> entries_;
};

/// Exact product. Entries of B must share one degree within each row and the product's rows
/// must come out degree-uniform, i.e. B has a single row degree.
template <RingElement T>
PolyMatrix<T> mat_mul(const PolyMatrix<T>& a, const PolyMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    for (int i = 1; i < b.rows(); ++i)
        if (b.row_degree(i) != b.row_degree(0)) throw ShapeMismatch("right factor must have uniform row degree");
    std::vector<int> degrees;
    for (int k = 0; k < a.rows(); ++k) degrees.push_back(a.row_degree(k) + b.row_degree(0));
    PolyMatrix<T> out(degrees, b.cols(), a(0, 0).coeffs().front());
    for (int k = 0; k < a.rows(); ++k) {
        for (int j = 0; j < b.cols(); ++j) {
            HomogPoly<T> acc(degrees[static_cast<std::size_t>(k)], a(0, 0).coeffs().front());
            for (int i = 0; i < a.cols(); ++i) {
                if (a(k, i).is_zero() || b(i, j).is_zero()) continue;
                acc += a(k, i) * b(i, j);
            }
            out.set(k, j, std::move(acc));
        }
    }
    return out;
}

namespace detail {

/// Laplace expansion down the rows with memoized column subsets. After the call, level[mask]
/// holds the determinant of the first popcount(mask) rows restricted to the columns in mask,
/// for every mask with the requested number of rows.
template <RingElement T>
std::vector<std::optional<HomogPoly<T>>> minors_by_subsets(const PolyMatrix<T>& a, int rows) {
    const int cols = a.cols();
    if (cols > 24) throw ShapeMismatch("too many columns for subset expansion");
    const std::uint32_t full = 1U << static_cast<unsigned>(cols);
    const T zero = constant_like(a(0, 0).coeffs().front(), 0);
    std::vector<std::optional<HomogPoly<T>>> prev(full);
    prev[0] = HomogPoly<T>(0, zero);
    prev[0]->coeff(0) = constant_like(zero, 1);
    int degree = 0;
    for (int r = 1; r <= rows; ++r) {
        degree += a.row_degree(r - 1);
        std::vector<std::optional<HomogPoly<T>>> cur(full);
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            if (__builtin_popcount(mask) != r) continue;
            HomogPoly<T> acc(degree, zero);
            int idx = 0;
            for (int c = 0; c < cols; ++c) {
                if (!(mask & (1U << static_cast<unsigned>(c)))) continue;
                const auto& entry = a(r - 1, c);
                const auto& sub = prev[mask & ~(1U << static_cast<unsigned>(c))];
                if (!entry.is_zero() && !sub->is_zero()) {
                    if (((r - 1 + idx) & 1) == 0)
                        acc += entry * *sub;
                    else
                        acc -= entry * *sub;
                }
                ++idx;
            }
            cur[mask] = std::move(acc);
        }
        prev = std::move(cur);
    }
    return prev;
}

}  // namespace detail

/// Determinant by cofactor expansion (memoized over column subsets).
template <RingElement T>
HomogPoly<T> poly_det(const PolyMatrix<T>& a) {
    if (a.rows() != a.cols()) throw NotSquare(a.rows(), a.cols());
    auto level = detail::minors_by_subsets(a, a.rows());
    return std::move(*level[(1U << static_cast<unsigned>(a.cols())) - 1]);
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
template <RingElement T>
HomogPoly<T> det_fraction_free(const PolyMatrix<T>& a) {
    if (a.rows() != a.cols()) throw NotSquare(a.rows(), a.cols());
    const int n = a.rows();
    int total = 0;
    for (int d : a.row_degrees()) total += d;
    const T zero = constant_like(a(0, 0).coeffs().front(), 0);

    std::vector<std::vector<HomogPoly<T>>> m(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(k)].push_back(a(k, i));

    auto at = [&m](int r, int c) -> HomogPoly<T>& { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
    bool negate = false;
    HomogPoly<T> prev(0, zero);
    prev.coeff(0) = constant_like(zero, 1);
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k).is_zero()) {
            int swap_with = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!at(r, k).is_zero()) {
                    swap_with = r;
                    break;
                }
            }
            if (swap_with < 0) return HomogPoly<T>(total, zero);
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_with)]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                HomogPoly<T> num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                at(i, j) = poly_exact_div(num, prev);
            }
        }
        prev = at(k, k);
    }
    HomogPoly<T> det = at(n - 1, n - 1);
    if (det.degree() != total) return HomogPoly<T>(total, zero);
    return negate ? -det : det;
}

/// G_i = (-1)^i det(A without column i) for an n x (n+1) matrix A. Satisfies A G^T = 0.
template <RingElement T>
std::vector<HomogPoly<T>> signed_maximal_minors(const PolyMatrix<T>& a) {
    if (a.cols() != a.rows() + 1)
        throw ShapeMismatch("maximal minors need an n x (n+1) matrix, got " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
    auto level = detail::minors_by_subsets(a, a.rows());
    const std::uint32_t full = (1U << static_cast<unsigned>(a.cols())) - 1;
    std::vector<HomogPoly<T>> g;
    for (int i = 0; i < a.cols(); ++i) {
        auto& minor = *level[full & ~(1U << static_cast<unsigned>(i))];
        g.push_back(i % 2 == 0 ? minor : -minor);
    }
    return g;
}

}  // namespace ratcurve

#endif  // RATCURVE_POLY_MATRIX_HPP
