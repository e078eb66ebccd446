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

#include "ratcurve/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "ratcurve/sampling.hpp"
#include "ratcurve/symbolic.hpp"

namespace ratcurve {

// ---------------------------------------------------------------------------------------------
// Interpolation oracle

std::vector<Rational> interpolation_directional_derivative(const SyzygyParams<Rational>& params,
                                                           const std::vector<Rational>& direction) {
    const ProblemDims& dims = params.dims();
    if (static_cast<int>(direction.size()) != dims.domain_dim)
        throw DimensionMismatch("direction has " + std::to_string(direction.size()) + " entries, expected " +
                                std::to_string(dims.domain_dim));
    const int needed = dims.n + 2;
    std::vector<Rational> nodes;
    std::vector<std::vector<Rational>> values;
    for (long long step = 0; static_cast<int>(nodes.size()) < needed; ++step) {
        if (step > 4LL * needed + 64) throw DegenerateParameters();
        // 0, 1, -1, 2, -2, ...
        const long long x = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        std::vector<Rational> shifted = params.values();
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += Rational(x) * direction[i];
        try {
            values.push_back(psi(SyzygyParams<Rational>(dims, std::move(shifted))));
            nodes.emplace_back(x);
        } catch (const DegenerateParameters&) {
            continue;
        }
    }
    // Derivative at 0 of the Lagrange basis polynomial for node i.
    std::vector<Rational> weight(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (j != i) denom *= nodes[i] - nodes[j];
        Rational numer(0);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (k == i) continue;
            Rational prod(1);
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (j != i && j != k) prod *= -nodes[j];
            numer += prod;
        }
        weight[i] = numer / denom;
    }
    std::vector<Rational> out(static_cast<std::size_t>(dims.codomain_dim), Rational(0));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t r = 0; r < out.size(); ++r) out[r] += weight[i] * values[i][r];
    return out;
}

Rational interpolation_directional_derivative(const SyzygyParams<Rational>& params,
                                              const std::vector<Rational>& direction, int component) {
    auto all = interpolation_directional_derivative(params, direction);
    if (component < 0 || component >= static_cast<int>(all.size()))
        throw IndexOutOfRange("component " + std::to_string(component) + " out of range");
    return all[static_cast<std::size_t>(component)];
}

// ---------------------------------------------------------------------------------------------
// Identity battery

namespace {

template <FieldElement T>
PolyMatrix<T> column_of(const std::vector<HomogPoly<T>>& polys) {
    std::vector<std::vector<HomogPoly<T>>> rows;
    for (const auto& p : polys) rows.push_back({p});
    return PolyMatrix<T>::from_rows(rows);
}

template <FieldElement T>
IdentityReport run_battery(const SyzygyParams<T>& params, const std::function<void(Curve<T>&)>& mutate) {
    IdentityReport report;
    const ProblemDims& dims = params.dims();
    const T& like = params.values().front();
    const PolyMatrix<T> lp = build_lp(params);
    Curve<T> curve;
    try {
        curve = curve_from_lp(lp);
    } catch (const DegenerateParameters&) {
        report.checks.push_back({"nondegenerate", false, false, "every maximal minor vanishes"});
        return report;
    }
    if (mutate) mutate(curve);

    {
        const auto prod = mat_mul(lp, column_of(curve.g));
        IdentityCheck c{"LP*G^T=0", prod.is_zero(), false, ""};
        if (!c.passed)
            for (int k = 0; k < prod.rows(); ++k)
                if (!prod(k, 0).is_zero()) {
                    c.detail = "row " + std::to_string(k) + ": " + prod(k, 0).str();
                    break;
                }
        report.checks.push_back(c);
    }

    const PolyMatrix<T> jac = st_jacobian(curve);
    {
        const HomogPoly<T> s = HomogPoly<T>::monomial(1, 1, constant_like(like, 1));
        const HomogPoly<T> t = HomogPoly<T>::monomial(1, 0, constant_like(like, 1));
        const auto euler = mat_mul(jac, PolyMatrix<T>::from_rows({{s}, {t}}));
        IdentityCheck c{"J*(s,t)^T=d*G^T", true, false, ""};
        const T dd = constant_like(like, dims.d);
        for (int i = 0; i < euler.rows(); ++i) {
            if (!(euler(i, 0) == curve.g[static_cast<std::size_t>(i)] * dd)) {
                c.passed = false;
                c.detail = "row " + std::to_string(i);
                break;
            }
        }
        report.checks.push_back(c);
    }

    {
        IdentityCheck c{"LP*J=FH*(-t,s)", true, false, ""};
        try {
            const MorphismFH<T> fh = extract_fh(lp, jac, dims);
            std::vector<HomogPoly<T>> stacked = fh.f;
            stacked.insert(stacked.end(), fh.h.begin(), fh.h.end());
            const HomogPoly<T> minus_t = HomogPoly<T>::monomial(1, 0, constant_like(like, -1));
            const HomogPoly<T> s = HomogPoly<T>::monomial(1, 1, constant_like(like, 1));
            const auto rhs = mat_mul(column_of(stacked), PolyMatrix<T>::from_rows({{minus_t, s}}));
            if (!(rhs == mat_mul(lp, jac))) {
                c.passed = false;
                c.detail = "reconstructed FH*(-t,s) differs from LP*J";
            }
        } catch (const InconsistentDiagram& e) {
            c.passed = false;
            c.detail = e.what();
        }
        report.checks.push_back(c);
    }

    {
        IdentityCheck c{"gcd(G)=1", true, true, ""};
        try {
            HomogPoly<T> g = curve.g.front();
            for (std::size_t i = 1; i < curve.g.size(); ++i) g = poly_gcd(g, curve.g[i]);
            c.passed = g.degree() == 0;
            if (!c.passed) c.detail = "common factor " + g.str();
        } catch (const BothZero&) {
            c.passed = false;
            c.detail = "all G_i vanish";
        }
        report.checks.push_back(c);
    }
    return report;
}

}  // namespace

IdentityReport identity_battery(const SyzygyParams<Rational>& params, const BatteryHooks& hooks) {
    return run_battery<Rational>(params, hooks.mutate_curve);
}

IdentityReport identity_battery(const SyzygyParams<PrimeFieldElem>& params) {
    return run_battery<PrimeFieldElem>(params, {});
}

// ---------------------------------------------------------------------------------------------
// Formula parsing

namespace {

class FormulaParser {
public:
    FormulaParser(const std::string& text, std::shared_ptr<const ParamSpace> space)
        : text_(text), space_(std::move(space)) {}

    ParamPoly<Rational> parse() {
        ParamPoly<Rational> r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("formula '" + text_ + "' at " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ParamPoly<Rational> constant(long long v) const { return ParamPoly<Rational>::constant(space_, Rational(v)); }

    ParamPoly<Rational> expr() {
        ParamPoly<Rational> acc = constant(0);
        bool first = true;
        for (;;) {
            char c = peek();
            bool negative = false;
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            ParamPoly<Rational> t = term();
            acc = negative ? acc - t : acc + t;
        }
        return acc;
    }

    ParamPoly<Rational> term() {
        ParamPoly<Rational> acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    ParamPoly<Rational> power() {
        ParamPoly<Rational> base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const int e = std::stoi(text_.substr(start, pos_ - start));
            ParamPoly<Rational> r = constant(1);
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    ParamPoly<Rational> atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ParamPoly<Rational> inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ParamPoly<Rational>::constant(space_, Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            const std::size_t idx = space_->find(name);
            if (idx == space_->size()) fail("unknown variable '" + name + "'");
            return ParamPoly<Rational>::variable(space_, idx, Rational(0));
        }
        fail("unexpected end of formula");
    }

    std::string text_;
    std::shared_ptr<const ParamSpace> space_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamPoly<Rational> parse_formula(const std::string& text, const std::shared_ptr<const ParamSpace>& space) {
    return FormulaParser(text, space).parse();
}

// ---------------------------------------------------------------------------------------------
// Formula comparison

namespace {

using Poly = ParamPoly<Rational>;

std::vector<std::string> term_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& t : p.terms()) out.push_back(Poly::from_terms(p.space(), Rational(0), {t}).str());
    return out;
}

/// Terms shared by a and b with identical coefficients.
int agreeing_terms(const Poly& a, const Poly& b) {
    auto ta = term_strings(a);
    auto tb = term_strings(b);
    std::multiset<std::string> sb(tb.begin(), tb.end());
    int n = 0;
    for (const auto& t : ta) {
        auto it = sb.find(t);
        if (it != sb.end()) {
            ++n;
            sb.erase(it);
        }
    }
    return n;
}

struct Entry {
    std::string name;
    std::string printed;
    Poly printed_poly;
    Poly computed;
};

FormulaVerdict judge(const Entry& e, int sign, const std::vector<std::vector<Rational>>& points) {
    FormulaVerdict v;
    v.name = e.name;
    v.printed = e.printed;
    const Poly computed = sign > 0 ? e.computed : -e.computed;
    v.computed = computed.str();
    v.symbolic_match = computed == e.printed_poly;
    for (const auto& pt : points) {
        ++v.numeric_samples;
        if (computed.evaluate(pt) == e.printed_poly.evaluate(pt)) ++v.numeric_agreements;
    }
    if (!v.symbolic_match) {
        auto tc = term_strings(computed);
        auto tp = term_strings(e.printed_poly);
        std::multiset<std::string> sc(tc.begin(), tc.end());
        std::multiset<std::string> sp(tp.begin(), tp.end());
        for (const auto& t : tc)
            if (sp.count(t) == 0) v.missing_terms.push_back(t);
        for (const auto& t : tp)
            if (sc.count(t) == 0) v.extra_terms.push_back(t);
    }
    return v;
}

/// Polynomial over params + {s, t} equal to sum_j c_j s^j t^(deg-j).
Poly homogenize(const HomogPoly<Poly>& h, const std::shared_ptr<const ParamSpace>& ext) {
    const auto s_var = static_cast<std::uint32_t>(ext->size() - 2);
    const auto t_var = static_cast<std::uint32_t>(ext->size() - 1);
    std::vector<Poly::Term> terms;
    for (int j = 0; j <= h.degree(); ++j) {
        for (const auto& [m, c] : h[j].terms()) {
            auto factors = m.factors();
            factors.emplace_back(s_var, static_cast<std::uint32_t>(j));
            factors.emplace_back(t_var, static_cast<std::uint32_t>(h.degree() - j));
            terms.emplace_back(Monomial(factors), c);
        }
    }
    return Poly::from_terms(ext, Rational(0), std::move(terms));
}

}  // namespace

FormulaReport paper_formula_compare(const std::string& example_id, const std::string& fixture_path, int samples,
                                    std::uint64_t seed) {
    std::ifstream in(fixture_path);
    if (!in) throw InputError("cannot open fixture file " + fixture_path);
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("fixture: ") + e.what());
    }
    if (!root.contains("examples") || !root["examples"].contains(example_id))
        throw InputError("fixture has no example " + example_id);
    const auto& ex = root["examples"][example_id];
    const ProblemDims dims = compute_dims(ex.at("n").get<int>(), ex.at("d").get<int>());

    const auto names = param_names(dims);
    auto space = std::make_shared<const ParamSpace>(names);
    std::vector<std::string> ext_names = names;
    ext_names.emplace_back("s");
    ext_names.emplace_back("t");
    auto ext = std::make_shared<const ParamSpace>(ext_names);

    const SyzygyParams<Poly> sym = symbolic_params(dims, space);
    const PipelineTrace<Poly> trace = run_pipeline(sym);
    const std::vector<Poly> flat = trace.fh.flatten();
    const auto comp_names = morphism_names(dims);
    auto component = [&](const std::string& name) -> const Poly& {
        auto it = std::find(comp_names.begin(), comp_names.end(), name);
        if (it == comp_names.end()) throw InputError("unknown morphism coefficient " + name);
        return flat[static_cast<std::size_t>(it - comp_names.begin())];
    };
    auto param_index = [&](const std::string& name) {
        const std::size_t idx = space->find(name);
        if (idx == space->size()) throw InputError("unknown parameter " + name);
        return idx;
    };

    // Entries in fixture order: curve, morphism, jacobian.
    std::vector<Entry> curve_entries;
    std::vector<Entry> entries;
    if (ex.contains("curve")) {
        for (const auto& item : ex["curve"]) {
            const std::string name = item.at("name");
            const int i = std::stoi(name.substr(1));
            curve_entries.push_back({name, item.at("formula"), parse_formula(item.at("formula"), ext),
                                     homogenize(trace.curve.g.at(static_cast<std::size_t>(i)), ext)});
        }
    }
    if (ex.contains("morphism")) {
        for (const auto& item : ex["morphism"]) {
            const std::string name = item.at("name");
            entries.push_back({name, item.at("formula"), parse_formula(item.at("formula"), space), component(name)});
        }
    }
    if (ex.contains("jacobian")) {
        const auto& jac = ex["jacobian"];
        const auto rows = jac.at("rows").get<std::vector<std::string>>();
        const auto cols = jac.at("cols").get<std::vector<std::string>>();
        const auto& cells = jac.at("entries");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const std::string text = cells.at(r).at(c);
                entries.push_back({"d" + cols[c] + "/d" + rows[r], text, parse_formula(text, space),
                                   component(cols[c]).partial(param_index(rows[r]))});
            }
        }
    }

    // One global sign: the one under which the first formula shares more terms with the computation.
    FormulaReport report;
    report.example = example_id;
    const Entry* first = !entries.empty() ? &entries.front() : (!curve_entries.empty() ? &curve_entries.front() : nullptr);
    if (first) report.sign = agreeing_terms(-first->computed, first->printed_poly) > agreeing_terms(first->computed, first->printed_poly) ? -1 : 1;
    // G is degree n in the parameters and FH is linear in G, so the curve carries the same sign.

    std::mt19937_64 rng = trial_rng(seed, Stream::Witness, 0);
    auto sample_points = [&](std::size_t n_vars) {
        std::vector<std::vector<Rational>> pts;
        for (int k = 0; k < samples; ++k) {
            std::vector<Rational> pt;
            for (std::size_t i = 0; i < n_vars; ++i) pt.emplace_back(uniform_nonzero(rng, 9));
            pts.push_back(std::move(pt));
        }
        return pts;
    };
    const auto ext_points = sample_points(ext->size());
    const auto points = sample_points(space->size());
    for (const auto& e : curve_entries) report.verdicts.push_back(judge(e, report.sign, ext_points));
    for (const auto& e : entries) report.verdicts.push_back(judge(e, report.sign, points));
    return report;
}

}  // namespace ratcurve
