#ifndef FINMEAS_ERRORS_HPP
#define FINMEAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finmeas {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point, measure, or bounded set was used with a space of the wrong kind.
class KindMismatch : public Error {
public:
    using Error::Error;
};

// Invalid construction parameters (empty label set, dimension 0, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// restrict() called on a measure with an atom outside the restriction set.
class SupportViolation : public Error {
public:
    explicit SupportViolation(std::string atom)
        : Error("support violation: atom " + atom + " lies outside the restriction set"),
          atom_(std::move(atom)) {}

    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

// barycenter() called on a measure with a negative weight or mass != 1.
class NotAProbabilityMeasure : public Error {
public:
    using Error::Error;
};

// Weight literal that does not denote a rational ("1/0", "x", ...).
class MalformedRational : public Error {
public:
    using Error::Error;
};

// Structural problem in a measure document.
class ParseError : public Error {
public:
    using Error::Error;
};

// Grid discretization produced no points inside the region.
class EmptyRegion : public Error {
public:
    using Error::Error;
};

// A declared bound transformer failed the empirical spot check.
class BornologicityViolation : public Error {
public:
    BornologicityViolation(std::string counterexample, const std::string& detail)
        : Error("bound transformer violated: counterexample point " + counterexample + " (" + detail + ")"),
          counterexample_(std::move(counterexample)) {}

    const std::string& counterexample() const { return counterexample_; }

private:
    std::string counterexample_;
};

} // namespace finmeas

#endif // FINMEAS_ERRORS_HPP
