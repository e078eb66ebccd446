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

#include "ratcurve/certify.hpp"

#include <algorithm>
#include <chrono>

#include "ratcurve/oracle.hpp"
#include "ratcurve/sampling.hpp"
#include "ratcurve/symbolic.hpp"

namespace ratcurve {

namespace {

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
std::vector<std::string> render_point(const SyzygyParams<F>& p) {
    std::vector<std::string> out;
    for (const auto& v : p.values()) {
        if constexpr (std::is_same_v<F, PrimeFieldElem>)
            out.push_back(std::to_string(v.residue()));
        else
            out.push_back(to_string(v));
    }
    return out;
}

std::string battery_summary(const IdentityReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        if (!out.empty()) out += "; ";
        out += c.name + (c.passed ? " ok" : (c.warn_only ? " WARN" : " FAILED"));
        if (!c.passed && !c.detail.empty()) out += " (" + c.detail + ")";
    }
    return out;
}

/// Rank of the matrix with rows (-t F_i(s,t), s F_i(s,t)) given the coefficient rows of the F_i.
template <class F>
int two_column_rank(const DenseMatrix<F>& coeffs, const F& s, const F& t) {
    DenseMatrix<F> m(coeffs.rows(), 2);
    for (Eigen::Index i = 0; i < coeffs.rows(); ++i) {
        std::vector<F> row(static_cast<std::size_t>(coeffs.cols()), constant_like(s, 0));
        for (Eigen::Index j = 0; j < coeffs.cols(); ++j) row[static_cast<std::size_t>(j)] = coeffs(i, j);
        const F value = poly_eval(HomogPoly<F>(std::move(row)), s, t);
        m(i, 0) = -(t * value);
        m(i, 1) = s * value;
    }
    return exact_rank(m);
}

}  // namespace

SyzygyParams<Rational> sample_rational_params(const ProblemDims& dims, std::uint64_t seed, std::uint64_t trial,
                                              std::int64_t bound) {
    if (bound < 1) throw InputError("coefficient bound must be at least 1");
    std::mt19937_64 rng = trial_rng(seed, Stream::Params, trial);
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(dims.domain_dim));
    for (int i = 0; i < dims.domain_dim; ++i) v.emplace_back(uniform_nonzero(rng, bound));
    return {dims, std::move(v)};
}

SyzygyParams<PrimeFieldElem> sample_prime_params(const ProblemDims& dims, const PrimeField& field, std::uint64_t seed,
                                                 std::uint64_t trial) {
    std::mt19937_64 rng = trial_rng(seed, Stream::Params, trial);
    std::vector<PrimeFieldElem> v;
    v.reserve(static_cast<std::size_t>(dims.domain_dim));
    const auto p = static_cast<std::int64_t>(field.modulus());
    for (int i = 0; i < dims.domain_dim; ++i) v.emplace_back(field, uniform_int(rng, 0, p - 1));
    return {dims, std::move(v)};
}

std::uint64_t seeded_prime(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng = trial_rng(seed, Stream::Primes, index);
    return random_prime(rng, 1ULL << 31U, 1ULL << 62U);
}

std::string to_string(CertificateKind k) { return k == CertificateKind::Dominance ? "dominance" : "relation"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::DominantCertified: return "dominant-certified";
        case Verdict::NotFullRankAtPoint: return "not-full-rank-at-point";
        case Verdict::RelationDetected: return "relation-detected";
        case Verdict::NoRelationDetected: return "no-relation-detected";
    }
    return "unknown";
}

std::string to_string(SymbolicRelationResult::Status s) {
    switch (s) {
        case SymbolicRelationResult::Status::AllMinorsZero: return "all-minors-zero";
        case SymbolicRelationResult::Status::NonzeroMinor: return "nonzero-minor";
        case SymbolicRelationResult::Status::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------------------------

namespace {

struct PointResult {
    int rank = -1;
    std::vector<std::string> point;
    bool battery_ok = false;
    std::string battery;
};

template <class F>
PointResult evaluate_dominance_point(const SyzygyParams<F>& params) {
    PointResult r;
    const JacobianMatrix<F> jac = psi_jacobian(params);
    r.rank = exact_rank(jac.entries);
    r.point = render_point(params);
    return r;
}

}  // namespace

Certificate certify_dominance(const DominanceOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const ProblemDims dims = compute_dims(opts.n, opts.d);
    if (opts.points < 1) throw InputError("at least one point is required");

    Certificate cert;
    cert.kind = CertificateKind::Dominance;
    cert.n = dims.n;
    cert.d = dims.d;
    cert.seed = opts.seed;
    cert.target_rank = dims.codomain_dim;
    cert.coeff_bound = opts.field.rational ? opts.coeff_bound : 0;
    cert.param_order = param_names(dims);

    FieldChoice field = opts.field;
    if (!field.rational && field.prime == 0) field.prime = seeded_prime(opts.seed, 0);
    cert.fields = {field.str()};
    cert.point_field = field.str();

    int good = 0;
    int degenerate = 0;
    int best = -1;
    std::uint64_t best_trial = 0;
    for (std::uint64_t trial = 0; good < opts.points; ++trial) {
        TrialRecord rec;
        rec.index = static_cast<int>(trial);
        rec.field = field.str();
        try {
            PointResult pr;
            if (field.rational) {
                pr = evaluate_dominance_point(sample_rational_params(dims, opts.seed, trial, opts.coeff_bound));
            } else {
                pr = evaluate_dominance_point(sample_prime_params(dims, PrimeField(field.prime), opts.seed, trial));
            }
            rec.rank = pr.rank;
            ++good;
            if (pr.rank > best) {
                best = pr.rank;
                best_trial = trial;
                cert.point = std::move(pr.point);
            }
        } catch (const DegenerateParameters&) {
            rec.degenerate = true;
            if (++degenerate >= opts.max_degenerate) {
                cert.trial_log.push_back(rec);
                if (good == 0) throw AllTrialsDegenerate(degenerate);
                break;
            }
        }
        cert.trial_log.push_back(rec);
        if (opts.stop_on_full_rank && best == dims.codomain_dim) break;
    }
    cert.trials = static_cast<int>(cert.trial_log.size());
    cert.observed_rank = best;
    cert.verdict = best == dims.codomain_dim ? Verdict::DominantCertified : Verdict::NotFullRankAtPoint;
    cert.error_bound = Rational(0);
    cert.error_bound_kind = "exact";

    // Identity battery on the witness point.
    IdentityReport battery;
    if (field.rational)
        battery = identity_battery(sample_rational_params(dims, opts.seed, best_trial, opts.coeff_bound));
    else
        battery = identity_battery(sample_prime_params(dims, PrimeField(field.prime), opts.seed, best_trial));
    cert.identity_battery_passed = battery.ok();
    cert.identity_battery_detail = battery_summary(battery);
    cert.timing_ms = elapsed_ms(start);
    return cert;
}

// ---------------------------------------------------------------------------------------------

Rational relation_error_bound(int n, const std::vector<std::uint64_t>& primes_per_trial) {
    Rational bound(1);
    for (std::uint64_t p : primes_per_trial) {
        Rational per_trial(mpz_class(2 * (n + 1)), mpz_class(static_cast<unsigned long>(p)));
        if (Rational(1) < per_trial) per_trial = Rational(1);
        bound *= per_trial;
    }
    return bound;
}

Certificate detect_relation(const RelationOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    if (opts.n < 3) throw OutOfScope(opts.n, opts.n + 1, "relation detection needs n >= 3");
    const ProblemDims dims = compute_dims(opts.n, opts.n + 1);

    Certificate cert;
    cert.kind = CertificateKind::Relation;
    cert.n = dims.n;
    cert.d = dims.d;
    cert.seed = opts.seed;
    cert.target_rank = 1;
    cert.coeff_bound = opts.coeff_bound;
    cert.param_order = param_names(dims);

    std::vector<std::uint64_t> primes = opts.primes;
    if (primes.empty())
        for (int i = 0; i < opts.prime_count; ++i) primes.push_back(seeded_prime(opts.seed, static_cast<std::uint64_t>(i)));
    if (opts.rational_trials > 0) cert.fields.emplace_back("Q");
    for (auto p : primes) cert.fields.push_back(FieldChoice::prime_field(p).str());

    int max_rank = -1;
    int degenerate = 0;
    std::vector<std::uint64_t> prime_trials_used;
    std::uint64_t trial = 0;
    auto record = [&](const std::string& field, int rank, std::vector<std::string> point) {
        TrialRecord rec{static_cast<int>(trial), field, rank, false};
        cert.trial_log.push_back(rec);
        if (rank > max_rank) {
            max_rank = rank;
            cert.point = std::move(point);
            cert.point_field = field;
        }
    };
    auto degenerate_trial = [&](const std::string& field) {
        cert.trial_log.push_back({static_cast<int>(trial), field, -1, true});
        ++degenerate;
    };

    for (int t = 0; t < opts.rational_trials; ++t, ++trial) {
        try {
            auto params = sample_rational_params(dims, opts.seed, trial, opts.coeff_bound);
            const auto coeffs = relation_matrix(params);
            std::mt19937_64 rng = trial_rng(opts.seed, Stream::Witness, trial);
            const Rational s0(uniform_nonzero(rng, opts.coeff_bound));
            const Rational t0(uniform_nonzero(rng, opts.coeff_bound));
            cert.two_column_rank = std::max(cert.two_column_rank, two_column_rank(coeffs, s0, t0));
            record("Q", exact_rank(coeffs), render_point(params));
        } catch (const DegenerateParameters&) {
            degenerate_trial("Q");
        }
    }
    for (auto p : primes) {
        const PrimeField field(p);
        for (int t = 0; t < opts.prime_trials; ++t, ++trial) {
            try {
                auto params = sample_prime_params(dims, field, opts.seed, trial);
                const auto coeffs = relation_matrix(params);
                std::mt19937_64 rng = trial_rng(opts.seed, Stream::Witness, trial);
                const auto hi = static_cast<std::int64_t>(p - 1);
                const PrimeFieldElem s0(field, uniform_int(rng, 1, hi));
                const PrimeFieldElem t0(field, uniform_int(rng, 1, hi));
                cert.two_column_rank = std::max(cert.two_column_rank, two_column_rank(coeffs, s0, t0));
                record(FieldChoice::prime_field(p).str(), exact_rank(coeffs), render_point(params));
                prime_trials_used.push_back(p);
            } catch (const DegenerateParameters&) {
                degenerate_trial(FieldChoice::prime_field(p).str());
            }
        }
    }
    if (max_rank < 0) throw AllTrialsDegenerate(degenerate);

    cert.trials = static_cast<int>(cert.trial_log.size());
    cert.observed_rank = max_rank;
    if (max_rank <= 1) {
        cert.verdict = Verdict::RelationDetected;
        cert.error_bound = relation_error_bound(dims.n, prime_trials_used);
        cert.error_bound_kind = prime_trials_used.empty() ? "heuristic" : "schwartz-zippel";
    } else {
        // A nonzero 2x2 minor at a point is a nonzero polynomial: no probability involved.
        cert.verdict = Verdict::NoRelationDetected;
        cert.error_bound = Rational(0);
        cert.error_bound_kind = "exact";
    }
    auto battery = identity_battery(sample_rational_params(dims, opts.seed, 0, opts.coeff_bound));
    cert.identity_battery_passed = battery.ok();
    cert.identity_battery_detail = battery_summary(battery);
    cert.timing_ms = elapsed_ms(start);
    return cert;
}

// ---------------------------------------------------------------------------------------------

SymbolicRelationResult relation_symbolic(int n, std::size_t term_budget, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    if (n < 3) throw OutOfScope(n, n + 1, "relation detection needs n >= 3");
    const ProblemDims dims = compute_dims(n, n + 1);
    SymbolicRelationResult result;
    result.n = dims.n;
    result.d = dims.d;
    const int rows = dims.a;
    const int cols = dims.f_degree() + 1;
    result.total_minors = (rows * (rows - 1) / 2) * (cols * (cols - 1) / 2);

    auto over_budget = [&](const std::vector<HomogPoly<SymbolicPoly>>& polys, const char* stage) {
        for (const auto& p : polys)
            for (const auto& c : p.coeffs())
                if (c.term_count() > term_budget) {
                    result.status = SymbolicRelationResult::Status::BudgetExceeded;
                    result.detail = std::string(stage) + " has a coefficient with " + std::to_string(c.term_count()) +
                                    " terms, above the budget of " + std::to_string(term_budget);
                    return true;
                }
        return false;
    };

    const auto space = param_space(dims);
    const auto params = symbolic_params(dims, space);
    const PolyMatrix<SymbolicPoly> lp = build_lp(params);
    const Curve<SymbolicPoly> curve = curve_from_lp(lp);
    if (over_budget(curve.g, "G")) {
        result.timing_ms = elapsed_ms(start);
        return result;
    }
    const MorphismFH<SymbolicPoly> fh = extract_fh(lp, st_jacobian(curve), dims);
    if (over_budget(fh.f, "F")) {
        result.timing_ms = elapsed_ms(start);
        return result;
    }
    for (const auto& f : fh.f)
        for (const auto& c : f.coeffs()) result.max_f_terms = std::max(result.max_f_terms, c.term_count());

    // Exact witness point for fast refutation.
    const SyzygyParams<Rational> point = sample_rational_params(dims, seed, 0, 99);
    auto entry = [&](int k, int j) -> const SymbolicPoly& { return fh.f[static_cast<std::size_t>(k)][j]; };

    for (int r1 = 0; r1 < rows; ++r1) {
        for (int r2 = r1 + 1; r2 < rows; ++r2) {
            for (int c1 = 0; c1 < cols; ++c1) {
                for (int c2 = c1 + 1; c2 < cols; ++c2) {
                    const std::string label = "rows (" + std::to_string(r1 + 1) + "," + std::to_string(r2 + 1) +
                                              ") cols (" + std::to_string(c1) + "," + std::to_string(c2) + ")";
                    const Rational value = entry(r1, c1).evaluate(point.values()) * entry(r2, c2).evaluate(point.values()) -
                                           entry(r1, c2).evaluate(point.values()) * entry(r2, c1).evaluate(point.values());
                    const std::size_t cost = entry(r1, c1).term_count() * entry(r2, c2).term_count() +
                                             entry(r1, c2).term_count() * entry(r2, c1).term_count();
                    if (!value.is_zero()) {
                        result.status = SymbolicRelationResult::Status::NonzeroMinor;
                        result.witness = "minor " + label + " = " + value.str() + " at the witness point";
                        result.witness_point = render_point(point);
                        if (cost <= term_budget) {
                            const SymbolicPoly m = entry(r1, c1) * entry(r2, c2) - entry(r1, c2) * entry(r2, c1);
                            result.witness_minor_terms = m.term_count();
                        }
                        result.timing_ms = elapsed_ms(start);
                        return result;
                    }
                    if (cost > term_budget) {
                        result.status = SymbolicRelationResult::Status::BudgetExceeded;
                        result.detail = "expanding minor " + label + " needs about " + std::to_string(cost) + " products";
                        result.timing_ms = elapsed_ms(start);
                        return result;
                    }
                    const SymbolicPoly m = entry(r1, c1) * entry(r2, c2) - entry(r1, c2) * entry(r2, c1);
                    if (!m.is_zero()) {
                        result.status = SymbolicRelationResult::Status::NonzeroMinor;
                        result.witness = "minor " + label + " expands to " + std::to_string(m.term_count()) + " terms";
                        result.witness_minor_terms = m.term_count();
                        result.timing_ms = elapsed_ms(start);
                        return result;
                    }
                    ++result.minors_proved_zero;
                }
            }
        }
    }
    result.status = SymbolicRelationResult::Status::AllMinorsZero;
    result.timing_ms = elapsed_ms(start);
    return result;
}

}  // namespace ratcurve
