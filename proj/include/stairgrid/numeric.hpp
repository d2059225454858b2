#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stairgrid {

// Exact integers and rationals throughout; no floating point in the math
// paths (the only double in the repo is the chi-square statistic report).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return rat_denominator(q) == 1; }

} // namespace stairgrid
