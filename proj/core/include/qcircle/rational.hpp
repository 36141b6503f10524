#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace qcircle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor(a / b); b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

// r - floor(r), always in [0, 1).
inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat parse_rat(const std::string& text);

// Always "p/q", reduced, with an explicit denominator ("0/1", "1/2", ...).
std::string format_rat(const Rat& r);

// A comparison of interval streams could not be decided within the requested
// number of refinements.
class undecided_error : public std::runtime_error {
 public:
  explicit undecided_error(const std::string& what) : std::runtime_error(what) {}
};

// An interval stream violated its nesting or shrinking obligations.
class stream_error : public std::runtime_error {
 public:
  explicit stream_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat parse_rat(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  const auto check_int = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
  };
  check_int(num_part, true);
  check_int(den_part, false);
  Int num(num_part);
  Int den(den_part);
  if (den == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
  return Rat(num, den);
}

inline std::string format_rat(const Rat& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace qcircle
