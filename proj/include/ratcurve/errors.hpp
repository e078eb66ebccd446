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

#ifndef RATCURVE_ERRORS_HPP
#define RATCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratcurve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input errors: malformed or out-of-range requests.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class OutOfScope : public InputError {
public:
    OutOfScope(int n, int d, const std::string& why)
        : InputError("(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ") out of scope: " + why),
          n_(n), d_(d) {}
    int n() const { return n_; }
    int d() const { return d_; }

private:
    int n_;
    int d_;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

// Arithmetic errors.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public ArithmeticError {
public:
    DivisionByZero() : ArithmeticError("division by zero") {}
};

class NonExactDivision : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

class RingMismatch : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

class DegreeMismatch : public ArithmeticError {
public:
    DegreeMismatch(int lhs, int rhs)
        : ArithmeticError("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NotDivisible : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

class DegreeZero : public ArithmeticError {
public:
    DegreeZero() : ArithmeticError("derivative of a degree-0 polynomial") {}
};

class BothZero : public ArithmeticError {
public:
    BothZero() : ArithmeticError("gcd of two zero polynomials") {}
};

class ShapeMismatch : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

class NotSquare : public ShapeMismatch {
public:
    NotSquare(long rows, long cols)
        : ShapeMismatch("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", not square") {}
};

// Mathematical outcomes that stop a computation.
class DegenerateParameters : public Error {
public:
    DegenerateParameters() : Error("degenerate parameters: every maximal minor vanishes") {}
};

class AllTrialsDegenerate : public Error {
public:
    explicit AllTrialsDegenerate(int trials)
        : Error("all " + std::to_string(trials) + " sampled points were degenerate") {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The commutative diagram failed to close. Only an implementation bug can cause this.
class InconsistentDiagram : public Error {
public:
    using Error::Error;
};

}  // namespace ratcurve

#endif  // RATCURVE_ERRORS_HPP
