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

#ifndef RATCURVE_CERTIFY_HPP
#define RATCURVE_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratcurve/dense.hpp"
#include "ratcurve/jet.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/prime_field.hpp"
#include "ratcurve/rank.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

/// Differential of psi at a point: codomain_dim x domain_dim, columns in parameter order.
template <FieldElement F>
struct JacobianMatrix {
    ProblemDims dims;
    DenseMatrix<F> entries;
    SyzygyParams<F> point;
};

/// Runs the whole pipeline over jets with every parameter active.
template <FieldElement F>
JacobianMatrix<F> psi_jacobian(const SyzygyParams<F>& params) {
    const ProblemDims& dims = params.dims();
    const auto n_params = static_cast<std::size_t>(dims.domain_dim);
    std::vector<Jet<F>> lifted;
    lifted.reserve(n_params);
    for (std::size_t i = 0; i < n_params; ++i) lifted.push_back(jet_lift(params.values()[i], i, n_params));
    const std::vector<Jet<F>> out = psi(SyzygyParams<Jet<F>>(dims, std::move(lifted)));

    DenseMatrix<F> m(dims.codomain_dim, dims.domain_dim);
    const F zero = constant_like(params.values().front(), 0);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const Jet<F>& jr = out[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = jr.has_gradient() ? jr.partial(static_cast<std::size_t>(c)) : zero;
    }
    return {dims, std::move(m), params};
}

/// Coefficients of F_1..F_a, one row per F_i; rank <= 1 iff the F_i are pairwise proportional.
template <FieldElement F>
DenseMatrix<F> relation_matrix(const SyzygyParams<F>& params) {
    const ProblemDims& dims = params.dims();
    const PolyMatrix<F> lp = build_lp(params);
    const MorphismFH<F> fh = extract_fh(lp, st_jacobian(curve_from_lp(lp)), dims);
    DenseMatrix<F> m(dims.a, dims.f_degree() + 1);
    for (int k = 0; k < dims.a; ++k)
        for (int j = 0; j <= dims.f_degree(); ++j) m(k, j) = fh.f[static_cast<std::size_t>(k)][j];
    return m;
}

/// Random point with nonzero integer entries in [-bound, bound].
SyzygyParams<Rational> sample_rational_params(const ProblemDims& dims, std::uint64_t seed, std::uint64_t trial,
                                              std::int64_t bound);

/// Uniform random point of F_p^domain_dim.
SyzygyParams<PrimeFieldElem> sample_prime_params(const ProblemDims& dims, const PrimeField& field, std::uint64_t seed,
                                                 std::uint64_t trial);

/// A prime in [2^31, 2^62) drawn from the seed.
std::uint64_t seeded_prime(std::uint64_t seed, std::uint64_t index);

// ---------------------------------------------------------------------------------------------
// Certificates

enum class CertificateKind { Dominance, Relation };
enum class Verdict { DominantCertified, NotFullRankAtPoint, RelationDetected, NoRelationDetected };

std::string to_string(CertificateKind k);
std::string to_string(Verdict v);

/// Q or F_p. prime == 0 with rational == false asks for a seeded random prime.
struct FieldChoice {
    bool rational = true;
    std::uint64_t prime = 0;

    static FieldChoice rationals() { return {true, 0}; }
    static FieldChoice prime_field(std::uint64_t p) { return {false, p}; }
    std::string str() const { return rational ? "Q" : "F_" + std::to_string(prime); }
};

struct TrialRecord {
    int index = 0;
    std::string field;
    int rank = -1;  ///< -1 for a degenerate sample
    bool degenerate = false;
};

struct Certificate {
    static constexpr int kSchemaVersion = 1;

    CertificateKind kind = CertificateKind::Dominance;
    int n = 0;
    int d = 0;
    std::vector<std::string> fields;
    std::uint64_t seed = 0;
    int trials = 0;
    int observed_rank = 0;
    int target_rank = 0;
    Verdict verdict = Verdict::NotFullRankAtPoint;
    /// Probability that the verdict is wrong. "exact" bounds are 0 by construction.
    Rational error_bound{0};
    std::string error_bound_kind = "exact";  ///< exact | schwartz-zippel | heuristic
    std::int64_t coeff_bound = 0;
    long long timing_ms = 0;
    std::string point_field;
    std::vector<std::string> point;  ///< the witness point, in param_order
    std::vector<std::string> param_order;
    std::vector<TrialRecord> trial_log;
    bool identity_battery_passed = false;
    std::string identity_battery_detail;
    /// Relation runs only: largest rank seen of the two-column polynomial matrix with rows
    /// (-t F_i, s F_i), evaluated at random (s, t). -1 when not computed.
    int two_column_rank = -1;
};

struct DominanceOptions {
    int n = 2;
    int d = 3;
    FieldChoice field = FieldChoice::rationals();
    std::uint64_t seed = 0;
    int points = 1;               ///< nondegenerate points to evaluate
    bool stop_on_full_rank = true;
    std::int64_t coeff_bound = 99;
    int max_degenerate = 16;      ///< degenerate samples tolerated before giving up
};

/// Full rank of d(psi) at one exact point certifies dominance. Otherwise the certificate records
/// the maximum rank seen. Throws AllTrialsDegenerate.
Certificate certify_dominance(const DominanceOptions& opts);

struct RelationOptions {
    int n = 4;
    std::uint64_t seed = 0;
    int rational_trials = 5;
    int prime_trials = 20;        ///< per prime
    int prime_count = 2;
    std::vector<std::uint64_t> primes;  ///< overrides the seeded primes when non-empty
    std::int64_t coeff_bound = 99;
};

/// Rank of the F-coefficient matrix at random points for d = n+1. relation-detected iff every
/// trial has rank <= 1; a trial with rank >= 2 is an unconditional witness against a relation.
Certificate detect_relation(const RelationOptions& opts);

/// Per-trial false-pass bound 2(n+1)/p over each prime trial, multiplied together.
Rational relation_error_bound(int n, const std::vector<std::uint64_t>& primes_per_trial);

struct SymbolicRelationResult {
    enum class Status { AllMinorsZero, NonzeroMinor, BudgetExceeded };

    Status status = Status::BudgetExceeded;
    int n = 0;
    int d = 0;
    int total_minors = 0;
    int minors_proved_zero = 0;
    std::size_t max_f_terms = 0;      ///< largest symbolic F coefficient, in terms
    std::string witness;              ///< which minor, and its value at the witness point
    std::vector<std::string> witness_point;
    std::size_t witness_minor_terms = 0;  ///< expanded size of the refuting minor, 0 if not expanded
    std::string detail;
    long long timing_ms = 0;
};

std::string to_string(SymbolicRelationResult::Status s);

/// Expands the F coefficients symbolically and decides every 2x2 minor of the F-coefficient
/// matrix. A minor that is nonzero at an exact rational point refutes the relation outright;
/// the remaining minors are expanded and must vanish identically. term_budget caps the number
/// of terms in any intermediate.
SymbolicRelationResult relation_symbolic(int n, std::size_t term_budget = 4'000'000, std::uint64_t seed = 0);

}  // namespace ratcurve

#endif  // RATCURVE_CERTIFY_HPP
