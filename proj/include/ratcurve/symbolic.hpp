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

#ifndef RATCURVE_SYMBOLIC_HPP
#define RATCURVE_SYMBOLIC_HPP

#include <memory>
#include <vector>

#include "ratcurve/param_poly.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

using SymbolicPoly = ParamPoly<Rational>;

inline std::shared_ptr<const ParamSpace> param_space(const ProblemDims& dims) {
    return std::make_shared<const ParamSpace>(param_names(dims));
}

/// Every syzygy coefficient as its own variable; space must list param_names(dims) first.
inline SyzygyParams<SymbolicPoly> symbolic_params(const ProblemDims& dims, const std::shared_ptr<const ParamSpace>& space) {
    std::vector<SymbolicPoly> vars;
    vars.reserve(static_cast<std::size_t>(dims.domain_dim));
    for (int i = 0; i < dims.domain_dim; ++i)
        vars.push_back(SymbolicPoly::variable(space, static_cast<std::size_t>(i), Rational(0)));
    return SyzygyParams<SymbolicPoly>(dims, std::move(vars));
}

}  // namespace ratcurve

#endif  // RATCURVE_SYMBOLIC_HPP
