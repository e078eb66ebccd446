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

#ifndef RATCURVE_REPORT_HPP
#define RATCURVE_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "ratcurve/certify.hpp"
#include "ratcurve/oracle.hpp"
#include "ratcurve/pipeline.hpp"

namespace ratcurve {

std::string artifact_version();

/// log10 of a positive rational; -inf for zero.
double log10_of(const Rational& r);

nlohmann::json to_json(const Certificate& cert);

/// Copy without timing fields, for determinism comparisons.
nlohmann::json without_timing(nlohmann::json j);

std::string csv_header();
std::string csv_row(const Certificate& cert);

nlohmann::json to_json(const SymbolicRelationResult& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const FormulaReport& r);

/// Params file: {"n": 4, "d": 5, "l": [[[..]]], "p": [[[..]]]} with l[k][i][j], p[k][i][j];
/// entries are integers or "a/b" strings. Throws ParseError / DimensionMismatch.
SyzygyParams<Rational> params_from_json(const nlohmann::json& j);
SyzygyParams<Rational> load_params_file(const std::string& path);
nlohmann::json to_json(const SyzygyParams<Rational>& params);

nlohmann::json to_json(const PipelineTrace<Rational>& trace);

/// Plain-text layout of a pipeline run: LP, G, J, LP*J, FH.
std::string render_text(const PipelineTrace<Rational>& trace);

}  // namespace ratcurve

#endif  // RATCURVE_REPORT_HPP
