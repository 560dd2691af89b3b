#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sepnoether/error.hpp"

namespace sepnoether {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

/// Least non-negative residue of a modulo n (n > 0).
inline Int mod_floor(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

/// Floor division for n > 0.
inline Int div_floor(Int a, Int n) {
  Int q = a / n;
  return (a % n != 0 && a < 0) ? q - 1 : q;
}

struct ExtGcd {
  Int g;  // gcd, always >= 0
  Int x;  // x*a + y*b == g
  Int y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo n in [0, n); requires gcd(a, n) == 1.
inline Int mod_inverse(Int a, Int n) {
  if (n == 1) return 0;
  ExtGcd e = ext_gcd(mod_floor(a, n), n);
  if (e.g != 1) fail(ErrorKind::InvalidInput, "value is not invertible modulo n");
  return mod_floor(e.x, n);
}

/// Distinct prime divisors in ascending order.
inline std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> primes;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

/// Smallest prime divisor of n >= 2.
inline Int min_prime_divisor(Int n) {
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace sepnoether
