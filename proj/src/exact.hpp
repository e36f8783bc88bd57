#pragma once

#include <string>

#include "design_forge/bigint.hpp"
#include "design_forge/error.hpp"

namespace design_forge::exact {

/// 2^e as a rational; e may be negative.
inline Rational p2(int e) {
  return e >= 0 ? Rational(pow2(static_cast<unsigned>(e))) : Rational(BigInt(1), pow2(static_cast<unsigned>(-e)));
}

inline BigInt to_integer(const Rational& value, ErrorKind kind, const std::string& what) {
  if (boost::multiprecision::denominator(value) != 1)
    throw Error(kind, what + " evaluates to the non-integer " + value.str());
  return boost::multiprecision::numerator(value);
}

}  // namespace design_forge::exact
