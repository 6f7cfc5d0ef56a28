#pragma once

#include <cstdint>

#include "symprime/bigint.hpp"
#include "symprime/residue.hpp"

namespace symprime {

/// Exact n! as an arbitrary-precision integer.
BigInt factorial_exact(std::uint64_t n);

/// Exact binomial coefficient C(n, k) via the multiplicative formula; every
/// intermediate division is exact.
BigInt binomial_exact(std::uint64_t n, std::uint64_t k);

/// n! mod modulus by iterated modular multiplication.
Residue factorial_mod(std::uint64_t n, const BigInt& modulus);
Residue factorial_mod(std::uint64_t n, std::uint64_t modulus);

/// C(2p-1, p-1) mod p^power for prime p, computed as the product
/// (p+1)(p+2)...(2p-1) times the inverse of (p-1)!; both factors are coprime
/// to p, so the inverse always exists. power must be in 1..4.
///
/// Throws NonPrimeError when p fails the trial-division precheck.
Residue central_binom_mod(std::uint64_t p, unsigned power);

}  // namespace symprime
