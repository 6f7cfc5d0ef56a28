#include "symprime/arith.hpp"

#include "symprime/errors.hpp"
#include "symprime/modmath.hpp"

namespace symprime {

BigInt factorial_exact(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

Residue factorial_mod(std::uint64_t n, std::uint64_t modulus) {
  if (modulus < 2) throw DomainError("modulus must be >= 2");
  if (modulus >= kNarrowModulusLimit) return factorial_mod(n, BigInt(modulus));
  std::uint64_t r = 1 % modulus;
  for (std::uint64_t i = 2; i <= n; ++i) {
    r = mul_mod(r, i % modulus, modulus);
  }
  return Residue(static_cast<std::int64_t>(r), modulus);
}

Residue factorial_mod(std::uint64_t n, const BigInt& modulus) {
  if (modulus < BigInt(kNarrowModulusLimit)) {
    return factorial_mod(n, to_u64(modulus));
  }
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    r = r * i % modulus;
  }
  return Residue(r, modulus);
}

Residue central_binom_mod(std::uint64_t p, unsigned power) {
  if (power < 1 || power > 4) throw DomainError("power must be in 1..4");
  if (!is_prime_u64(p)) throw NonPrimeError("central_binom_mod: p is not prime");
  BigInt modulus = big_pow(BigInt(p), power);
  if (modulus < BigInt(kNarrowModulusLimit)) {
    std::uint64_t m = to_u64(modulus);
    std::uint64_t num = 1 % m;
    for (std::uint64_t j = 1; j < p; ++j) {
      num = mul_mod(num, (p + j) % m, m);
    }
    std::uint64_t den = factorial_mod(p - 1, m).value_u64();
    return Residue(static_cast<std::int64_t>(mul_mod(num, inv_mod(den, m), m)),
                   m);
  }
  BigInt num = 1;
  for (std::uint64_t j = 1; j < p; ++j) {
    num = num * (BigInt(p) + j) % modulus;
  }
  Residue den = factorial_mod(p - 1, modulus);
  return Residue(num, modulus) * den.inverse();
}

}  // namespace symprime
