#pragma once

#include <stdexcept>
#include <string>

namespace conirep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad file, negative entries, wrong sizes).
class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

/// A set of vectors was expected to be linearly independent (or a cone full-dimensional).
class RankDeficient : public Error {
public:
    using Error::Error;
};

/// Every column of the state matrix is zero; the closed form applies instead.
class AllZeroMatrix : public Error {
public:
    using Error::Error;
};

/// A configured element, simplex, state-count or sample limit would be exceeded.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The active-set solver did not terminate within its iteration limit.
class IterationLimit : public Error {
public:
    using Error::Error;
};

}  // namespace conirep
