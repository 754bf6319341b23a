#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtoric {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (non-square matrix, wrong vector length).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Structural validation failed (non-pure complex, duplicate facet, bad index).
class ValidationError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(std::size_t rank, const std::string& what)
        : Error(what), rank_(rank) {}

    /// Rank found by the elimination before it ran out of pivots.
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

/// Geometric degeneracy: affinely dependent points, lower-dimensional hull.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Angle outside the multiples of pi/4 that Q(sqrt2) can represent.
class FieldCoverageError : public Error {
public:
    using Error::Error;
};

class PolarityError : public Error {
public:
    using Error::Error;
};

/// Combinatorial and geometric facet lists of a realization disagree.
class RealizationInconsistencyError : public Error {
public:
    using Error::Error;
};

class IncidenceError : public Error {
public:
    using Error::Error;
};

/// A characteristic vector is missing, has the wrong length, or is not primitive.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// |det| != 1 where a basis of Z^n was required.
class UnimodularityError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace qtoric
