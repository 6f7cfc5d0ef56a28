#pragma once

#include <cstdint>

#include "symprime/errors.hpp"

// Fixed-width modular kernels. Valid for any modulus m with 2 <= m < 2^63;
// products go through a 128-bit intermediate, so no input combination wraps.

namespace symprime {

inline constexpr std::uint64_t kNarrowModulusLimit = 1ull << 63;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;  // a, b < m < 2^63, cannot wrap
  return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Extended Euclid. Throws NotInvertibleError when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Deterministic trial division up to sqrt(n).
bool is_prime_u64(std::uint64_t n);

std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace symprime
