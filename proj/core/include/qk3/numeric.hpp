#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qk3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown for malformed user input (bad syntax, violated preconditions the
// caller controls). The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int s = isqrt_floor(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

// floor(sqrt(num/den)) for num >= 0, den > 0.
inline Int floor_sqrt_ratio(const Int& num, const Int& den) {
  if (num < 0 || den <= 0) throw std::invalid_argument("floor_sqrt_ratio domain");
  Int s = isqrt_floor(num * den) / den;
  while ((s + 1) * (s + 1) * den <= num * den) ++s;
  while (s * s * den > num * den) --s;
  return s;
}

// Largest integer t with t <= sqrt(r); r >= 0.
inline Int floor_sqrt_rat(const Rat& r) {
  return floor_sqrt_ratio(rat_num(r), rat_den(r));
}

// r mod 2Z, reduced into [0, 2).
inline Rat mod_two(Rat r) {
  Int n = rat_num(r), d = rat_den(r);
  Int twod = 2 * d;
  Int m = n % twod;
  if (m < 0) m += twod;
  return Rat(m, d);
}

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

}  // namespace qk3
