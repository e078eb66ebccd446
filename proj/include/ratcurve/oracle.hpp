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

#ifndef RATCURVE_ORACLE_HPP
#define RATCURVE_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "ratcurve/param_poly.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

// Independent checks. Nothing here shares a code path with the jet Jacobian beyond psi itself.

/// d/dt psi(params + t * direction) at t = 0, for every component, by exact interpolation of the
/// degree-(n+1) polynomial t -> psi(params + t * direction). Nodes are 0, 1, -1, 2, -2, ...; a node
/// landing on a degenerate point is skipped in favour of the next one.
std::vector<Rational> interpolation_directional_derivative(const SyzygyParams<Rational>& params,
                                                           const std::vector<Rational>& direction);

/// Single component of the above.
Rational interpolation_directional_derivative(const SyzygyParams<Rational>& params,
                                              const std::vector<Rational>& direction, int component);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    bool warn_only = false;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    /// True when every non-diagnostic check passed.
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed && !c.warn_only) return false;
        return true;
    }
    const IdentityCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Test hooks: a mutation applied to the curve before the identities are checked.
struct BatteryHooks {
    std::function<void(Curve<Rational>&)> mutate_curve;
};

/// Checks LP G^T = 0, J (s,t)^T = d G^T, LP J = FH (-t s) and, as a warning only, that the G_i
/// have no common factor.
IdentityReport identity_battery(const SyzygyParams<Rational>& params, const BatteryHooks& hooks = {});

/// Same battery over a prime field (the gcd diagnostic included).
IdentityReport identity_battery(const SyzygyParams<PrimeFieldElem>& params);

// Transcribed formulas.

/// Parses "-2*l121*p102*p110 + l120*(p100 - p101)^2 ..." into a polynomial over the given
/// variables. Juxtaposed factors multiply, as in "(l100 - l101) p110".
ParamPoly<Rational> parse_formula(const std::string& text, const std::shared_ptr<const ParamSpace>& space);

struct FormulaVerdict {
    std::string name;         ///< "f10", "G0", "d f10 / d l100", ...
    std::string printed;      ///< formula as transcribed
    std::string computed;     ///< canonical text of the computed polynomial (global sign applied)
    bool symbolic_match = false;
    int numeric_agreements = 0;  ///< sample points where printed == computed
    int numeric_samples = 0;
    std::vector<std::string> missing_terms;  ///< in computed, absent from printed
    std::vector<std::string> extra_terms;    ///< in printed, absent from computed
};

struct FormulaReport {
    std::string example;
    int sign = 1;  ///< global sign applied to the computed side
    std::vector<FormulaVerdict> verdicts;

    int matches() const {
        int m = 0;
        for (const auto& v : verdicts) m += v.symbolic_match ? 1 : 0;
        return m;
    }
};

/// Compares transcribed example formulas with the pipeline. example_id is "3.2" or "4.2"; the
/// fixture is the JSON file of transcriptions. samples is the number of random rational points
/// used for the numeric comparison.
FormulaReport paper_formula_compare(const std::string& example_id, const std::string& fixture_path, int samples = 10,
                                    std::uint64_t seed = 1);

}  // namespace ratcurve

#endif  // RATCURVE_ORACLE_HPP
