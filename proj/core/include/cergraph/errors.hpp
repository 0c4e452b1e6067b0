#ifndef CERGRAPH_ERRORS_HPP
#define CERGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cergraph {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid inputs: size mismatches, out-of-range parameters, malformed
// distributions, kind/variant mismatches.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// A requested exhaustive computation exceeds the configured enumeration
// budget. Never silently truncated.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// The model makes the requested estimator meaningless, e.g. the MAP
// likelihood-ratio test when p11*p00 == p10*p01 (all labelings equiprobable).
class DegenerateModelError : public Error {
public:
    explicit DegenerateModelError(const std::string& what) : Error(what) {}
};

} // namespace cergraph

#endif
