#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace modp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (zero inverse,
// non-prime modulus, j out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Dimension or shape mismatch between vectors/matrices/maps.
class ShapeError : public Error {
public:
    using Error::Error;
};

// An enumeration guard refused to materialize a too-large object.
class BudgetError : public Error {
public:
    using Error::Error;
};

// A constructive builder was called outside the range where it is valid.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class IncompleteMapError : public Error {
public:
    using Error::Error;
};

// Malformed JSON input (complex, witness, cache).
class FormatError : public Error {
public:
    using Error::Error;
};

// A coordinate-wise lift of a map produced a degenerate simplex.
class LiftFailure : public Error {
public:
    LiftFailure(const std::string & what, std::vector<int> simplex) :
        Error(what), simplex_(std::move(simplex))
    {
    }

    const std::vector<int> & simplex() const noexcept { return simplex_; }

private:
    std::vector<int> simplex_;
};

} // namespace modp
