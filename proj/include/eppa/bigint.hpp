#pragma once

// Exact integer arithmetic for bound values. Binomials and factorials blow
// past 64 bits quickly (e.g. (2^k)! lower bounds), so everything is cpp_int.

#include <boost/multiprecision/cpp_int.hpp>

#include "eppa/structures.hpp"

namespace eppa {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

inline BigInt factorial(long long n) {
  if (n < 0) throw InputError("factorial of negative number");
  BigInt out = 1;
  for (long long i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt ipow(BigInt base, unsigned long long e) {
  BigInt out = 1;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace eppa
