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

#include "ratcurve/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ratcurve {

using nlohmann::json;

std::string artifact_version() { return RATCURVE_VERSION; }

double log10_of(const Rational& r) {
    if (r.is_zero()) return -std::numeric_limits<double>::infinity();
    auto lg = [](const mpz_class& z) {
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
        return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
    };
    return lg(r.numerator()) - lg(r.denominator());
}

json to_json(const Certificate& cert) {
    json j;
    j["schema_version"] = Certificate::kSchemaVersion;
    j["artifact_version"] = artifact_version();
    j["kind"] = to_string(cert.kind);
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["fields"] = cert.fields;
    j["seed"] = cert.seed;
    j["trials"] = cert.trials;
    j["observed_rank"] = cert.observed_rank;
    j["target_rank"] = cert.target_rank;
    j["verdict"] = to_string(cert.verdict);
    j["error_bound"] = cert.error_bound.str();
    const double lg = log10_of(cert.error_bound);
    j["error_bound_log10"] = std::isfinite(lg) ? json(lg) : json(nullptr);
    j["error_bound_kind"] = cert.error_bound_kind;
    j["coeff_bound"] = cert.coeff_bound;
    j["timing_ms"] = cert.timing_ms;
    j["point_field"] = cert.point_field;
    j["point"] = cert.point;
    j["param_order"] = cert.param_order;
    json log = json::array();
    for (const auto& t : cert.trial_log) {
        json e{{"index", t.index}, {"field", t.field}, {"degenerate", t.degenerate}};
        e["rank"] = t.degenerate ? json(nullptr) : json(t.rank);
        log.push_back(e);
    }
    j["trial_log"] = log;
    if (cert.kind == CertificateKind::Relation) j["two_column_rank"] = cert.two_column_rank;
    j["identity_battery"] = {{"passed", cert.identity_battery_passed}, {"detail", cert.identity_battery_detail}};
    return j;
}

json without_timing(json j) {
    if (j.is_object()) {
        j.erase("timing_ms");
        for (auto& [key, value] : j.items()) value = without_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = without_timing(value);
    }
    return j;
}

std::string csv_header() {
    return "kind,n,d,fields,seed,trials,observed_rank,target_rank,verdict,error_bound_kind,error_bound_log10,timing_ms";
}

std::string csv_row(const Certificate& cert) {
    std::ostringstream os;
    std::string fields;
    for (const auto& f : cert.fields) fields += (fields.empty() ? "" : "+") + f;
    const double lg = log10_of(cert.error_bound);
    os << to_string(cert.kind) << ',' << cert.n << ',' << cert.d << ',' << fields << ',' << cert.seed << ','
       << cert.trials << ',' << cert.observed_rank << ',' << cert.target_rank << ',' << to_string(cert.verdict) << ','
       << cert.error_bound_kind << ',';
    if (std::isfinite(lg)) os << lg;
    os << ',' << cert.timing_ms;
    return os.str();
}

json to_json(const SymbolicRelationResult& r) {
    return json{{"schema_version", Certificate::kSchemaVersion},
                {"artifact_version", artifact_version()},
                {"kind", "relation-symbolic"},
                {"n", r.n},
                {"d", r.d},
                {"status", to_string(r.status)},
                {"total_minors", r.total_minors},
                {"minors_proved_zero", r.minors_proved_zero},
                {"max_f_terms", r.max_f_terms},
                {"witness", r.witness},
                {"witness_point", r.witness_point},
                {"witness_minor_terms", r.witness_minor_terms},
                {"detail", r.detail},
                {"timing_ms", r.timing_ms}};
}

json to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"warn_only", c.warn_only}, {"detail", c.detail}});
    return json{{"ok", r.ok()}, {"checks", checks}};
}

json to_json(const FormulaReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back({{"name", v.name},
                            {"printed", v.printed},
                            {"computed", v.computed},
                            {"symbolic_match", v.symbolic_match},
                            {"numeric_agreements", v.numeric_agreements},
                            {"numeric_samples", v.numeric_samples},
                            {"missing_terms", v.missing_terms},
                            {"extra_terms", v.extra_terms}});
    }
    return json{{"example", r.example},
                {"sign", r.sign},
                {"matches", r.matches()},
                {"total", r.verdicts.size()},
                {"verdicts", verdicts}};
}

namespace {

Rational scalar_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw ParseError("parameter entries must be integers or \"a/b\" strings, got " + v.dump());
}

}  // namespace

SyzygyParams<Rational> params_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("params file must hold a JSON object");
    if (!j.contains("n") || !j.contains("d")) throw ParseError("params file needs \"n\" and \"d\"");
    if (!j["n"].is_number_integer() || !j["d"].is_number_integer()) throw ParseError("\"n\" and \"d\" must be integers");
    const ProblemDims dims = compute_dims(j["n"].get<int>(), j["d"].get<int>());
    std::vector<Rational> values(static_cast<std::size_t>(dims.domain_dim));
    auto read_block = [&](const char* key, int rows, int width, auto index) {
        const json empty = json::array();
        const json& block = j.contains(key) ? j[key] : empty;
        if (!block.is_array() || static_cast<int>(block.size()) != rows)
            throw DimensionMismatch(std::string("\"") + key + "\" must have " + std::to_string(rows) + " rows");
        for (int k = 0; k < rows; ++k) {
            const json& row = block[static_cast<std::size_t>(k)];
            if (!row.is_array() || static_cast<int>(row.size()) != dims.n + 1)
                throw DimensionMismatch(std::string("\"") + key + "\" rows must have n+1 entries");
            for (int i = 0; i <= dims.n; ++i) {
                const json& poly = row[static_cast<std::size_t>(i)];
                if (!poly.is_array() || static_cast<int>(poly.size()) != width)
                    throw DimensionMismatch(std::string("\"") + key + "\" entries must have " + std::to_string(width) +
                                            " coefficients");
                for (int c = 0; c < width; ++c)
                    values[static_cast<std::size_t>(index(k, i, c))] = scalar_from_json(poly[static_cast<std::size_t>(c)]);
            }
        }
    };
    read_block("l", dims.a, dims.q + 1, [&](int k, int i, int c) { return SyzygyParams<Rational>::l_index(dims, k, i, c); });
    read_block("p", dims.b, dims.q + 2, [&](int k, int i, int c) { return SyzygyParams<Rational>::p_index(dims, k, i, c); });
    return {dims, std::move(values)};
}

SyzygyParams<Rational> load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open params file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("params file: ") + e.what());
    }
    return params_from_json(j);
}

json to_json(const SyzygyParams<Rational>& params) {
    const ProblemDims& d = params.dims();
    auto entry = [](const Rational& r) { return r.is_integer() ? json(r.numerator().get_si()) : json(r.str()); };
    json l = json::array();
    for (int k = 0; k < d.a; ++k) {
        json row = json::array();
        for (int i = 0; i <= d.n; ++i) {
            json poly = json::array();
            for (int j = 0; j <= d.q; ++j) poly.push_back(entry(params.l(k, i, j)));
            row.push_back(poly);
        }
        l.push_back(row);
    }
    json p = json::array();
    for (int k = 0; k < d.b; ++k) {
        json row = json::array();
        for (int i = 0; i <= d.n; ++i) {
            json poly = json::array();
            for (int j = 0; j <= d.q + 1; ++j) poly.push_back(entry(params.p(k, i, j)));
            row.push_back(poly);
        }
        p.push_back(row);
    }
    return json{{"n", d.n}, {"d", d.d}, {"l", l}, {"p", p}};
}

json to_json(const PipelineTrace<Rational>& trace) {
    json g = json::array();
    for (const auto& p : trace.curve.g) g.push_back(p.str());
    json f = json::array();
    for (const auto& p : trace.fh.f) f.push_back(p.str());
    json h = json::array();
    for (const auto& p : trace.fh.h) h.push_back(p.str());
    json flat = json::array();
    for (const auto& c : trace.fh.flatten()) flat.push_back(c.str());
    return json{{"LP", trace.lp.render()},
                {"G", g},
                {"J", trace.jacobian.render()},
                {"LPJ", trace.lp_times_j.render()},
                {"F", f},
                {"H", h},
                {"psi", flat}};
}

std::string render_text(const PipelineTrace<Rational>& trace) {
    std::ostringstream os;
    auto matrix = [&os](const char* title, const std::vector<std::vector<std::string>>& rows) {
        os << title << " =\n";
        for (const auto& row : rows) {
            os << "  [ ";
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " | " : "") << row[i];
            os << " ]\n";
        }
    };
    matrix("LP", trace.lp.render());
    os << "G =\n";
    for (std::size_t i = 0; i < trace.curve.g.size(); ++i) os << "  G" << i << " = " << trace.curve.g[i] << "\n";
    matrix("J", trace.jacobian.render());
    matrix("LP*J", trace.lp_times_j.render());
    os << "FH =\n";
    for (std::size_t i = 0; i < trace.fh.f.size(); ++i) os << "  F" << i + 1 << " = " << trace.fh.f[i] << "\n";
    for (std::size_t i = 0; i < trace.fh.h.size(); ++i) os << "  H" << i + 1 << " = " << trace.fh.h[i] << "\n";
    return os.str();
}

}  // namespace ratcurve
