#pragma once

#include <stdexcept>
#include <string>

namespace sliceq {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A violated precondition or malformed input. The CLI maps these to exit
// code 3 when they come from configuration, 2 when an invariant check fails.
class DomainError : public Error {
public:
    using Error::Error;
};

// Numerical breakdown during a computation (singular system, collapsed
// convergence radius, exhausted step budget). CLI exit code 4.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroDivision : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateSlices : public DomainError {
public:
    using DomainError::DomainError;
};

class NotOrthogonal : public DomainError {
public:
    using DomainError::DomainError;
};

class NotFullSliceRank : public DomainError {
public:
    NotFullSliceRank(const std::string& what, int level)
        : DomainError(what), level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

class LengthMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class BrokenJunction : public DomainError {
public:
    using DomainError::DomainError;
};

class ParameterOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

class EvaluationOutsideDomain : public DomainError {
public:
    using DomainError::DomainError;
};

class SizeCap : public DomainError {
public:
    using DomainError::DomainError;
};

class HorizonExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

class OnCut : public DomainError {
public:
    using DomainError::DomainError;
};

class Singular : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularityHit : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class TruncationBudgetExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace sliceq
