#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace planarlab {

// Exact rational coefficient domain.  boost cpp_rational keeps gcd-reduced
// numerator/denominator with denominator > 0, which is exactly the canonical
// form the algebra layer relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with optional leading sign.  Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

// bits(|num|) + bits(den); used for pivot selection in exact elimination.
std::size_t rat_bit_length(const Rat& r);

double rat_to_double(const Rat& r);

}  // namespace planarlab
