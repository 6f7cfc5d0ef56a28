#include "symprime/modmath.hpp"

#include <cmath>

namespace symprime {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  a %= m;
  // Bezout coefficients stay below m < 2^63 in magnitude, so int64 is enough.
  std::int64_t old_r = static_cast<std::int64_t>(a);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw NotInvertibleError("inv_mod: value shares a factor with the modulus");
  }
  if (old_s < 0) old_s += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(old_s);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto sq = [](std::uint64_t x) {
    return static_cast<unsigned __int128>(x) * x;
  };
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r > 0 && sq(r) > n) --r;
  while (sq(r + 1) <= n) ++r;
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace symprime
