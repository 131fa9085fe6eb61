#ifndef PREPER_ERRORS_HPP
#define PREPER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace preper {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument for an algebraic operation (zero gcd input, non-monic
// Eisenstein input, constant multiplicity base, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// exact_div found no exact quotient. Multiplicity probing relies on this
// being an ordinary, catchable outcome.
class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not exactly divisible") {}
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A requested iterate would exceed the configured degree ceiling.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A cache file is unreadable, has the wrong header, or fails its spot check.
class CacheError : public Error {
public:
    using Error::Error;
};

// f3_irreducible only decides polynomials in the single combination b-a.
class UnsupportedShape : public Error {
public:
    using Error::Error;
};

// A division the construction pipeline relies on did not go through.
class PipelineMismatch : public Error {
public:
    using Error::Error;
};

// A mod-3 image is not the expected exact power.
class NotAPower : public Error {
public:
    using Error::Error;
};

} // namespace preper

#endif // PREPER_ERRORS_HPP
