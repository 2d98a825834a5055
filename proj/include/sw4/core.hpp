#ifndef SW4_CORE_HPP
#define SW4_CORE_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sw4 {

// All coefficients are exact integers; no floating point enters any
// computation that feeds a reported value.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad tokens, bad JSON, bad flags.  CLI exit code 2.
struct parse_error : error {
    using error::error;
};

// A mathematical invariant failed (non-unimodular Seifert pairing, inexact
// polynomial division, mixed formal variables, ...).  CLI exit code 3.
struct invariant_error : error {
    using error::error;
};

// A construction was asked to run outside its hypotheses.  CLI exit code 4.
struct precondition_error : error {
    using error::error;
};

// Symmetry extraction failed; remembers the offending exponent.
struct symmetry_error : invariant_error {
    symmetry_error(const std::string& msg, int exponent)
        : invariant_error(msg), exponent(exponent) {}
    int exponent;
};

}  // namespace sw4

#endif
