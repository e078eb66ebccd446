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

#ifndef RATCURVE_PIPELINE_HPP
#define RATCURVE_PIPELINE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/dims.hpp"
#include "ratcurve/errors.hpp"
#include "ratcurve/homog_poly.hpp"
#include "ratcurve/poly_matrix.hpp"

namespace ratcurve {

/// Coefficients of the syzygy matrix LP, flattened as the l block then the p block, each
/// row-major in (k, i, j). Here k is zero-based; printed names use k + 1 (l_{kij} with k >= 1).
template <RingElement T>
class SyzygyParams {
public:
    SyzygyParams(ProblemDims dims, std::vector<T> values) : dims_(dims), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != dims_.domain_dim)
            throw DimensionMismatch("expected " + std::to_string(dims_.domain_dim) + " parameters, got " +
                                    std::to_string(values_.size()));
    }

    const ProblemDims& dims() const { return dims_; }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

    const T& l(int k, int i, int j) const { return values_[static_cast<std::size_t>(l_index(dims_, k, i, j))]; }
    const T& p(int k, int i, int j) const { return values_[static_cast<std::size_t>(p_index(dims_, k, i, j))]; }

    static int l_index(const ProblemDims& d, int k, int i, int j) { return (k * (d.n + 1) + i) * (d.q + 1) + j; }
    static int p_index(const ProblemDims& d, int k, int i, int j) {
        return d.l_count() + (k * (d.n + 1) + i) * (d.q + 2) + j;
    }

    /// Converts every value with f.
    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(values_.front()))>;
        std::vector<U> out;
        out.reserve(values_.size());
        for (const auto& v : values_) out.push_back(f(v));
        return SyzygyParams<U>(dims_, std::move(out));
    }

private:
    ProblemDims dims_;
    std::vector<T> values_;
};

/// Parameter names in flattening order: "l100", "p123", ... with k counted from 1. Indices of
/// 10 or more switch the name to "l1_0_12" so that names stay unambiguous.
std::vector<std::string> param_names(const ProblemDims& dims);

/// Morphism coefficient names in flattening order: "f10", ..., "h13", ...
std::vector<std::string> morphism_names(const ProblemDims& dims);

/// The curve [G_0 : ... : G_n], every G_i of degree d.
template <RingElement T>
struct Curve {
    std::vector<HomogPoly<T>> g;
};

/// The morphism f = (F_1..F_a | H_1..H_b): F_i of degree d+q-2, H_i of degree d+q-1.
template <RingElement T>
struct MorphismFH {
    std::vector<HomogPoly<T>> f;
    std::vector<HomogPoly<T>> h;

    /// f_{1,0..}, ..., f_{a,..}, h_{1,0..}, ..., h_{b,..}
    std::vector<T> flatten() const {
        std::vector<T> out;
        for (const auto& p : f) out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
        for (const auto& p : h) out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
        return out;
    }

    static MorphismFH unflatten(const ProblemDims& dims, const std::vector<T>& flat) {
        if (static_cast<int>(flat.size()) != dims.codomain_dim)
            throw DimensionMismatch("expected " + std::to_string(dims.codomain_dim) + " morphism coefficients, got " +
                                    std::to_string(flat.size()));
        MorphismFH m;
        std::size_t pos = 0;
        auto take = [&](int degree) {
            std::vector<T> c(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                             flat.begin() + static_cast<std::ptrdiff_t>(pos) + degree + 1);
            pos += static_cast<std::size_t>(degree) + 1;
            return HomogPoly<T>(std::move(c));
        };
        for (int k = 0; k < dims.a; ++k) m.f.push_back(take(dims.f_degree()));
        for (int k = 0; k < dims.b; ++k) m.h.push_back(take(dims.h_degree()));
        return m;
    }

    friend bool operator==(const MorphismFH&, const MorphismFH&) = default;
};

/// The n x (n+1) syzygy matrix: a rows of degree q from l, then b rows of degree q+1 from p.
template <RingElement T>
PolyMatrix<T> build_lp(const SyzygyParams<T>& params) {
    const ProblemDims& d = params.dims();
    std::vector<int> degrees(static_cast<std::size_t>(d.a), d.q);
    degrees.insert(degrees.end(), static_cast<std::size_t>(d.b), d.q + 1);
    const T& like = params.values().front();
    PolyMatrix<T> lp(degrees, d.n + 1, like);
    for (int k = 0; k < d.a; ++k) {
        for (int i = 0; i <= d.n; ++i) {
            std::vector<T> c;
            for (int j = 0; j <= d.q; ++j) c.push_back(params.l(k, i, j));
            lp.set(k, i, HomogPoly<T>(std::move(c)));
        }
    }
    for (int k = 0; k < d.b; ++k) {
        for (int i = 0; i <= d.n; ++i) {
            std::vector<T> c;
            for (int j = 0; j <= d.q + 1; ++j) c.push_back(params.p(k, i, j));
            lp.set(d.a + k, i, HomogPoly<T>(std::move(c)));
        }
    }
    return lp;
}

/// Signed maximal minors of LP. Throws DegenerateParameters if they all vanish.
template <RingElement T>
Curve<T> curve_from_lp(const PolyMatrix<T>& lp) {
    Curve<T> c{signed_maximal_minors(lp)};
    bool all_zero = true;
    for (const auto& g : c.g) all_zero = all_zero && g.is_zero();
    if (all_zero) throw DegenerateParameters();
    return c;
}

template <RingElement T>
Curve<T> curve_from_params(const SyzygyParams<T>& params) {
    return curve_from_lp(build_lp(params));
}

/// (n+1) x 2 matrix with rows (dG_i/ds, dG_i/dt).
template <RingElement T>
PolyMatrix<T> st_jacobian(const Curve<T>& curve) {
    std::vector<std::vector<HomogPoly<T>>> rows;
    for (const auto& g : curve.g) rows.push_back({poly_partial(g, Var::S), poly_partial(g, Var::T)});
    return PolyMatrix<T>::from_rows(rows);
}

/// Solves LP J = FH (-t  s) row by row: the s-column of LP J is s w_k and the t-column must be
/// -t w_k. Throws InconsistentDiagram if either check fails.
template <RingElement T>
MorphismFH<T> extract_fh(const PolyMatrix<T>& lp, const PolyMatrix<T>& jac, const ProblemDims& dims) {
    if (lp.rows() != dims.n || lp.cols() != dims.n + 1 || jac.rows() != dims.n + 1 || jac.cols() != 2)
        throw ShapeMismatch("extract_fh expects an n x (n+1) LP and an (n+1) x 2 Jacobian");
    const PolyMatrix<T> w = mat_mul(lp, jac);
    MorphismFH<T> out;
    for (int k = 0; k < dims.n; ++k) {
        HomogPoly<T> wk;
        try {
            wk = poly_div_linear(w(k, 1), Var::S);
        } catch (const NotDivisible& e) {
            throw InconsistentDiagram("row " + std::to_string(k) + " of LP*J: " + e.what());
        }
        if (!(w(k, 0) + poly_mul_linear(wk, Var::T)).is_zero())
            throw InconsistentDiagram("row " + std::to_string(k) + " of LP*J: first column is not -t times the quotient");
        (k < dims.a ? out.f : out.h).push_back(std::move(wk));
    }
    return out;
}

/// Every intermediate of one pipeline run.
template <RingElement T>
struct PipelineTrace {
    PolyMatrix<T> lp;
    Curve<T> curve;
    PolyMatrix<T> jacobian;
    PolyMatrix<T> lp_times_j;
    MorphismFH<T> fh;
};

template <RingElement T>
PipelineTrace<T> run_pipeline(const SyzygyParams<T>& params) {
    PipelineTrace<T> t;
    t.lp = build_lp(params);
    t.curve = curve_from_lp(t.lp);
    t.jacobian = st_jacobian(t.curve);
    t.lp_times_j = mat_mul(t.lp, t.jacobian);
    t.fh = extract_fh(t.lp, t.jacobian, params.dims());
    return t;
}

/// The polynomial map from syzygy coefficients to morphism coefficients.
template <RingElement T>
std::vector<T> psi(const SyzygyParams<T>& params) {
    const PolyMatrix<T> lp = build_lp(params);
    const Curve<T> curve = curve_from_lp(lp);
    return extract_fh(lp, st_jacobian(curve), params.dims()).flatten();
}

}  // namespace ratcurve

#endif  // RATCURVE_PIPELINE_HPP
