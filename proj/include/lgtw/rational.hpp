#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

#include "lgtw/error.hpp"

namespace lgtw {

// Compare only against Rational values: under C++20 rewritten comparisons,
// rational<T> == int recurses without end in boost.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::int64_t ceil(const Rational& r) { return -floor(-r); }

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// "p/q", or just "p" for integers.
inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

/// Accepts "p", "p/q" and terminating decimals such as "0.25".
inline Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw InvalidInput("not a rational number: '" + text + "'"); };
  auto whole_number = [&](const std::string& digits) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(digits, &used);
    } catch (const std::logic_error&) {
      fail();
    }
    if (used != digits.size()) fail();
    return value;
  };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::int64_t p = whole_number(text.substr(0, slash));
    std::int64_t q = whole_number(text.substr(slash + 1));
    if (q == 0) fail();
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12) fail();
    for (char c : frac)
      if (c < '0' || c > '9') fail();
    bool negative = !whole.empty() && whole[0] == '-';
    std::int64_t w = (whole.empty() || whole == "-") ? 0 : whole_number(whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational f(whole_number(frac), scale);
    return negative ? Rational(w) - f : Rational(w) + f;
  }
  return Rational(whole_number(text));
}

}  // namespace lgtw
