#pragma once

#include <stdexcept>
#include <string>

namespace abvar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed domain values (bad weights, rank mismatches, bad flags)
struct ValidationError : Error {
    using Error::Error;
};

// product of two non-Tate symbols in the Grothendieck-group algebra
struct UnsupportedProductError : Error {
    using Error::Error;
};

// trace evaluation hit a symbol without an eigenvalue source
struct EvaluationError : Error {
    using Error::Error;
};

}  // namespace abvar
