#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>

namespace lssd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

// floor(sqrt(n)); requires n >= 0
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline bool is_perfect_square(const Int& n) { return exact_sqrt(n).has_value(); }

// binomial coefficient with falling factorial; 0 when n < k
inline Int binom(const Int& n, unsigned k) {
  if (n < k) return 0;
  Int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline bool divides(const Int& d, const Int& n) { return d != 0 && n % d == 0; }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// trial division; parameter scales here are tiny
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// n = p^e with p prime, e >= 1
inline std::optional<std::pair<Int, int>> prime_power(const Int& n) {
  if (n < 2) return std::nullopt;
  Int m = n, p = 0;
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = m;  // n itself prime
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, e);
}

}  // namespace lssd
