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

#include "ratcurve/pipeline.hpp"

namespace ratcurve {

namespace {

std::string indexed_name(char prefix, int k, int i, int j) {
    if (k < 10 && i < 10 && j < 10)
        return std::string(1, prefix) + std::to_string(k) + std::to_string(i) + std::to_string(j);
    return std::string(1, prefix) + std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string indexed_name(char prefix, int k, int j) {
    if (k < 10 && j < 10) return std::string(1, prefix) + std::to_string(k) + std::to_string(j);
    return std::string(1, prefix) + std::to_string(k) + "_" + std::to_string(j);
}

}  // namespace

std::vector<std::string> param_names(const ProblemDims& dims) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(dims.domain_dim));
    for (int k = 0; k < dims.a; ++k)
        for (int i = 0; i <= dims.n; ++i)
            for (int j = 0; j <= dims.q; ++j) names.push_back(indexed_name('l', k + 1, i, j));
    for (int k = 0; k < dims.b; ++k)
        for (int i = 0; i <= dims.n; ++i)
            for (int j = 0; j <= dims.q + 1; ++j) names.push_back(indexed_name('p', k + 1, i, j));
    return names;
}

std::vector<std::string> morphism_names(const ProblemDims& dims) {
    std::vector<std::string> names;
    for (int k = 0; k < dims.a; ++k)
        for (int j = 0; j <= dims.f_degree(); ++j) names.push_back(indexed_name('f', k + 1, j));
    for (int k = 0; k < dims.b; ++k)
        for (int j = 0; j <= dims.h_degree(); ++j) names.push_back(indexed_name('h', k + 1, j));
    return names;
}

}  // namespace ratcurve
