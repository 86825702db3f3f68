#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sievekit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact rational for a decimal literal like "0.14071" or "-3.5".
Rational rational_from_decimal(const std::string& s);

// Exact rational equal to the given double (binary expansion).
Rational rational_from_double(double x);

std::string to_decimal_string(const Rational& r, int digits);

}  // namespace sievekit
