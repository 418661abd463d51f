#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

// All bound formulas are evaluated at 100 decimal digits: the admissible
// parameter ranges reach values like r^{-3(r+14)(r+1)}, far below anything a
// double can resolve against its neighbours.
using Real = boost::multiprecision::cpp_bin_float_100;
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// r^e as an exact integer.
Int ipow(std::uint64_t base, std::uint64_t exp);

/// Parses "3", "-5", "2/3", "0.25", "1e-6", "3.5e2" into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string format_rational(const Rational& q);

/// Fixed 50-significant-digit form, deterministic across runs and platforms.
std::string format_real(const Real& x);

Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);

/// Smallest integer >= x, as an exact integer.
Int ceil_real(const Real& x);

Real to_real(const Rational& q);

/// a + b, throwing std::overflow_error instead of wrapping.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("clique count overflows 64 bits");
  return out;
}

}  // namespace turan
