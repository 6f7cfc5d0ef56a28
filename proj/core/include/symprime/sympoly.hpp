#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symprime/bigint.hpp"

namespace symprime {

/// Table of the elementary symmetric polynomials of {1, ..., n-1}:
/// values[k] = P_k = e_k(1, 2, ..., n-1) for k = 0..n-1.
///
/// Conventions carried by the table: P_0 = 1, P_{n-1} = (n-1)!, and reads
/// outside [0, n) yield 0 (see at()). When modulus is set every entry is
/// reduced into [0, modulus).
struct SymTable {
  std::uint64_t n = 0;
  std::optional<BigInt> modulus;
  std::vector<BigInt> values;

  BigInt at(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(n)) return 0;
    return values[static_cast<std::size_t>(k)];
  }
};

/// Build the table by the one-element-at-a-time DP:
/// new[k] = old[k] + a * old[k-1] for a = 1..n-1. O(n^2) ring operations.
/// The exact path (no modulus) is practical up to roughly n = 2000; beyond
/// that the entries themselves grow past (n-1)! and a modulus should be used.
SymTable build_table(std::uint64_t n,
                     std::optional<BigInt> modulus = std::nullopt);

/// Independent oracle: P_k by explicit enumeration of all k-subsets of
/// {1, ..., n-1}. Bounded to n <= 16.
BigInt brute_force_Pk(std::uint64_t n, std::uint64_t k);

/// Dense integer polynomial, coeffs[d] = coefficient of x^d. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
struct IntPoly {
  std::vector<BigInt> coeffs;

  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs.size()) - 1;
  }
  BigInt coeff(std::size_t d) const {
    return d < coeffs.size() ? coeffs[d] : BigInt(0);
  }
  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool operator==(const IntPoly&) const = default;
};

/// Exact expansion of (x-1)(x-2)...(x-(n-1)); degree n-1, monic.
IntPoly expand_falling_product(std::uint64_t n);

/// True iff the coefficient of x^{n-1-k} in the falling product equals
/// (-1)^k P_k for every k — an exact polynomial identity check.
bool verify_factorization_identity(std::uint64_t n);

/// True iff n*P_{m-1} + P_m == sum_{k=0}^{m} P_k * C(n-k, m-k) in the
/// table's ring, with P_{-1} = 0. Requires 0 <= m <= n.
bool coefficient_identity_check(std::uint64_t n, std::uint64_t m,
                                const SymTable& table);

/// sum_{k=0}^{m-2} P_k * C(n-k, m-k) in the table's ring, for 2 <= m <= n.
/// The caller compares against (m-1) * P_{m-1}.
BigInt recurrence_rhs(std::uint64_t n, std::uint64_t m, const SymTable& table);

/// Exact check of P_{p-2} == sum_{k=0}^{p-3} (-1)^k P_k p^{p-2-k} for an odd
/// prime p.
bool p_p2_identity_check(std::uint64_t p);

/// Exact check of C(2p-1, p-1) == 1 + (sum_{k=0}^{p-2} P_k p^{p-1-k})/(p-1)!
/// for an odd prime p. Throws IdentityViolationError if the division leaves
/// a remainder.
bool central_binomial_identity_check(std::uint64_t p);

}  // namespace symprime
