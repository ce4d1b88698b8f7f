#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : MathError {
    using MathError::MathError;
};
struct DegreeMismatch : MathError {
    using MathError::MathError;
};
struct NotHomogeneous : MathError {
    using MathError::MathError;
};
struct NotWellDefined : MathError {
    using MathError::MathError;
};

struct JacobiFailure : MathError {
    int i, j, l;
    JacobiFailure(int i_, int j_, int l_)
        : MathError("Jacobi identity fails on generator triple (" + std::to_string(i_) + ","
                    + std::to_string(j_) + "," + std::to_string(l_) + ")"),
          i(i_), j(j_), l(l_)
    {
    }
};

struct ThetaNotClosed : MathError {
    using MathError::MathError;
};
struct NotSquareZero : MathError {
    using MathError::MathError;
};
struct OddDimension : MathError {
    using MathError::MathError;
};
struct Degenerate : MathError {
    using MathError::MathError;
};
struct NotLeeCompatible : MathError {
    using MathError::MathError;
};

struct NotAlmostComplex : MathError {
    using MathError::MathError;
};
struct NotCompatible : MathError {
    using MathError::MathError;
};
struct NotPositive : MathError {
    using MathError::MathError;
};

struct UnknownEntry : MathError {
    using MathError::MathError;
};
struct BadParams : MathError {
    using MathError::MathError;
};

struct InapplicablePerturbation : MathError {
    using MathError::MathError;
};

// Signals a broken internal invariant, never expected user input. Maps to
// exit code 3 in the CLI.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lcs
