#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace radial {

/// Exact arbitrary-size rational. All closed-form expectation values and the
/// identities built from them are evaluated in this type so tests can demand
/// exact equality instead of float tolerances.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& value) {
    return value.template convert_to<double>();
}

/// Canonical "p/q" form, denominator always printed ("5" -> "5/1").
inline std::string fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace radial
