#ifndef MISHIT_ERRORS_HPP
#define MISHIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mishit {

// Malformed input (graph6 records, generator specs, CLI values).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget or cap was exceeded (chromatic-number size budget,
// family-size cap, sampler attempts). Never silently approximated.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// The shattered-set witness construction failed. This cannot happen for a
// correct maximum-independent-set family; callers treat it as a loud
// diagnostic, never swallow it.
class WitnessError : public std::runtime_error {
public:
    explicit WitnessError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mishit

#endif
