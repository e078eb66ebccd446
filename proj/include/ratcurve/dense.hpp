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

#ifndef RATCURVE_DENSE_HPP
#define RATCURVE_DENSE_HPP

#include <Eigen/Core>

#include "ratcurve/prime_field.hpp"
#include "ratcurve/rational.hpp"

// Exact scalars as Eigen storage types. Only storage, block access and coefficient-wise
// expressions are used; none of Eigen's floating-point decompositions apply to these.
namespace Eigen {

template <>
struct NumTraits<ratcurve::Rational> : GenericNumTraits<ratcurve::Rational> {
    using Real = ratcurve::Rational;
    using NonInteger = ratcurve::Rational;
    using Nested = ratcurve::Rational;
    using Literal = ratcurve::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ratcurve::PrimeFieldElem> : GenericNumTraits<ratcurve::PrimeFieldElem> {
    using Real = ratcurve::PrimeFieldElem;
    using NonInteger = ratcurve::PrimeFieldElem;
    using Nested = ratcurve::PrimeFieldElem;
    using Literal = ratcurve::PrimeFieldElem;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ratcurve {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

}  // namespace ratcurve

#endif  // RATCURVE_DENSE_HPP
