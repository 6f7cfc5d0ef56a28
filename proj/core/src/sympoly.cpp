#include "symprime/sympoly.hpp"

#include <algorithm>

#include "symprime/arith.hpp"
#include "symprime/errors.hpp"
#include "symprime/modmath.hpp"

namespace symprime {

namespace {

std::vector<BigInt> build_values_exact(std::uint64_t n) {
  std::vector<BigInt> v(n, BigInt(0));
  v[0] = 1;
  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t k = std::min<std::uint64_t>(a, n - 1); k >= 1; --k) {
      v[k] += BigInt(a) * v[k - 1];
    }
  }
  return v;
}

std::vector<BigInt> build_values_mod_u64(std::uint64_t n, std::uint64_t m) {
  std::vector<std::uint64_t> v(n, 0);
  v[0] = 1 % m;
  for (std::uint64_t a = 1; a < n; ++a) {
    std::uint64_t ar = a % m;
    for (std::uint64_t k = std::min<std::uint64_t>(a, n - 1); k >= 1; --k) {
      v[k] = add_mod(v[k], mul_mod(ar, v[k - 1], m), m);
    }
  }
  return std::vector<BigInt>(v.begin(), v.end());
}

std::vector<BigInt> build_values_mod_big(std::uint64_t n, const BigInt& m) {
  std::vector<BigInt> v(n, BigInt(0));
  v[0] = 1;
  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t k = std::min<std::uint64_t>(a, n - 1); k >= 1; --k) {
      v[k] = (v[k] + BigInt(a) * v[k - 1]) % m;
    }
  }
  return v;
}

BigInt ring_reduce(const BigInt& x, const std::optional<BigInt>& modulus) {
  if (!modulus) return x;
  BigInt r = x % *modulus;
  if (r < 0) r += *modulus;
  return r;
}

// C(n-k, m-k) for k = 0..m, by Pascal-row additions in the table's ring.
// Addition-only on purpose: it stays valid modulo composite prime powers
// where the usual divide-by-k! form has no inverse.
std::vector<BigInt> binomial_diagonal(std::uint64_t n, std::uint64_t m,
                                      const std::optional<BigInt>& modulus) {
  std::vector<BigInt> diag(m + 1, BigInt(0));
  std::vector<BigInt> row(m + 1, BigInt(0));  // row r, columns 0..m
  row[0] = 1;
  for (std::uint64_t r = 0; r <= n; ++r) {
    if (r > 0) {
      for (std::uint64_t c = std::min(r, m); c >= 1; --c) {
        row[c] = ring_reduce(row[c] + row[c - 1], modulus);
      }
    }
    // row r holds C(r, c); it is needed at k = n - r, column m - k
    if (r + m >= n) {
      std::uint64_t k = n - r;
      if (k <= m) diag[k] = row[m - k];
    }
  }
  return diag;
}

void require_table_for(std::uint64_t n, const SymTable& table) {
  if (table.n != n || table.values.size() != n) {
    throw DomainError("table was not built for this n");
  }
}

std::uint64_t require_odd_prime(std::uint64_t p, const char* who) {
  if (!is_prime_u64(p)) {
    throw NonPrimeError(std::string(who) + ": p is not prime");
  }
  if (p < 3) throw DomainError(std::string(who) + ": requires p >= 3");
  return p;
}

}  // namespace

SymTable build_table(std::uint64_t n, std::optional<BigInt> modulus) {
  if (n < 2) throw DomainError("build_table: n must be >= 2");
  SymTable t;
  t.n = n;
  t.modulus = std::move(modulus);
  if (!t.modulus) {
    t.values = build_values_exact(n);
  } else if (*t.modulus < 2) {
    throw DomainError("build_table: modulus must be >= 2");
  } else if (*t.modulus < BigInt(kNarrowModulusLimit)) {
    t.values = build_values_mod_u64(n, to_u64(*t.modulus));
  } else {
    t.values = build_values_mod_big(n, *t.modulus);
  }
  return t;
}

BigInt brute_force_Pk(std::uint64_t n, std::uint64_t k) {
  if (n < 2 || n > 16) {
    throw DomainError("brute_force_Pk: n must be in 2..16");
  }
  if (k > n - 1) {
    throw DomainError("brute_force_Pk: k must be in 0..n-1");
  }
  std::uint64_t elems = n - 1;
  BigInt sum = 0;
  for (std::uint64_t mask = 0; mask < (1ull << elems); ++mask) {
    if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != k) continue;
    BigInt prod = 1;
    for (std::uint64_t i = 0; i < elems; ++i) {
      if (mask & (1ull << i)) prod *= i + 1;
    }
    sum += prod;
  }
  return sum;
}

IntPoly expand_falling_product(std::uint64_t n) {
  if (n < 2) throw DomainError("expand_falling_product: n must be >= 2");
  IntPoly poly;
  poly.coeffs = {BigInt(1)};
  for (std::uint64_t j = 1; j < n; ++j) {
    // multiply by (x - j)
    std::vector<BigInt> next(poly.coeffs.size() + 1, BigInt(0));
    for (std::size_t d = 0; d < poly.coeffs.size(); ++d) {
      next[d + 1] += poly.coeffs[d];
      next[d] -= BigInt(j) * poly.coeffs[d];
    }
    poly.coeffs = std::move(next);
  }
  poly.normalize();
  return poly;
}

bool verify_factorization_identity(std::uint64_t n) {
  IntPoly poly = expand_falling_product(n);
  if (poly.degree() != static_cast<std::int64_t>(n) - 1) return false;
  SymTable table = build_table(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    BigInt expected = table.values[k];
    if (k % 2 == 1) expected = -expected;
    if (poly.coeff(n - 1 - k) != expected) return false;
  }
  return true;
}

bool coefficient_identity_check(std::uint64_t n, std::uint64_t m,
                                const SymTable& table) {
  require_table_for(n, table);
  if (m > n) throw DomainError("coefficient_identity_check: m must be <= n");
  BigInt lhs = ring_reduce(
      BigInt(n) * table.at(static_cast<std::int64_t>(m) - 1) +
          table.at(static_cast<std::int64_t>(m)),
      table.modulus);
  std::vector<BigInt> binom = binomial_diagonal(n, m, table.modulus);
  BigInt rhs = 0;
  for (std::uint64_t k = 0; k <= m; ++k) {
    rhs = ring_reduce(
        rhs + table.at(static_cast<std::int64_t>(k)) * binom[k],
        table.modulus);
  }
  return lhs == rhs;
}

BigInt recurrence_rhs(std::uint64_t n, std::uint64_t m, const SymTable& table) {
  require_table_for(n, table);
  if (m < 2 || m > n) throw DomainError("recurrence_rhs: m must be in 2..n");
  std::vector<BigInt> binom = binomial_diagonal(n, m, table.modulus);
  BigInt rhs = 0;
  for (std::uint64_t k = 0; k + 2 <= m; ++k) {
    rhs = ring_reduce(
        rhs + table.at(static_cast<std::int64_t>(k)) * binom[k],
        table.modulus);
  }
  return rhs;
}

bool p_p2_identity_check(std::uint64_t p) {
  require_odd_prime(p, "p_p2_identity_check");
  SymTable table = build_table(p);
  // powers[e] = p^e, e = 0..p-2
  std::vector<BigInt> powers(p - 1);
  powers[0] = 1;
  for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = powers[e - 1] * p;
  BigInt rhs = 0;
  for (std::uint64_t k = 0; k + 3 <= p; ++k) {
    BigInt term = table.values[k] * powers[p - 2 - k];
    rhs += (k % 2 == 0) ? term : -term;
  }
  return table.values[p - 2] == rhs;
}

bool central_binomial_identity_check(std::uint64_t p) {
  require_odd_prime(p, "central_binomial_identity_check");
  SymTable table = build_table(p);
  std::vector<BigInt> powers(p);
  powers[0] = 1;
  for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = powers[e - 1] * p;
  BigInt sum = 0;
  for (std::uint64_t k = 0; k + 2 <= p; ++k) {
    sum += table.values[k] * powers[p - 1 - k];
  }
  const BigInt& fact = table.values[p - 1];  // (p-1)!
  BigInt q, r;
  boost::multiprecision::divide_qr(sum, fact, q, r);
  if (r != 0) {
    throw IdentityViolationError(
        "central_binomial_identity_check: sum is not divisible by (p-1)!");
  }
  return binomial_exact(2 * p - 1, p - 1) == 1 + q;
}

}  // namespace symprime
