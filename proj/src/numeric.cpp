#include "turan/numeric.hpp"

#include <cctype>

namespace turan {

Int ipow(std::uint64_t base, std::uint64_t exp) {
  Int out = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

namespace {

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// "12.34" -> 1234/100, without the exponent part.
Rational parse_decimal(const std::string& s) {
  std::string digits;
  std::size_t frac_len = 0;
  bool seen_dot = false;
  for (char ch : s) {
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational literal: " + s);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad rational literal: " + s);
    digits.push_back(ch);
    if (seen_dot) ++frac_len;
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal: " + s);
  return Rational(Int(digits), ipow(10, frac_len));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
      throw std::invalid_argument("bad rational literal: " + text);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(Int(num), d);
    return negative ? -q : q;
  }

  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string tail = s.substr(e + 1);
    if (tail.empty()) throw std::invalid_argument("bad rational literal: " + text);
    bool exp_neg = false;
    if (tail[0] == '+' || tail[0] == '-') {
      exp_neg = (tail[0] == '-');
      tail = tail.substr(1);
    }
    if (!is_digits(tail) || tail.size() > 9)
      throw std::invalid_argument("bad rational literal: " + text);
    exp10 = std::stoll(tail);
    if (exp_neg) exp10 = -exp10;
    s = s.substr(0, e);
  }

  Rational q = parse_decimal(s);
  if (exp10 > 0)
    q *= Rational(ipow(10, static_cast<std::uint64_t>(exp10)));
  else if (exp10 < 0)
    q /= Rational(ipow(10, static_cast<std::uint64_t>(-exp10)));
  return negative ? -q : q;
}

std::string format_rational(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_real(const Real& x) { return x.str(50); }

Int floor_rational(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int d = num / den;
  if (num < 0 && d * den != num) --d;
  return d;
}

Int ceil_rational(const Rational& q) { return -floor_rational(-q); }

Int ceil_real(const Real& x) {
  return boost::multiprecision::ceil(x).convert_to<Int>();
}

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) /
         Real(boost::multiprecision::denominator(q));
}

}  // namespace turan
