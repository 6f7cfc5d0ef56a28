#include <doctest.h>

#include <random>

#include "symprime/arith.hpp"
#include "symprime/errors.hpp"
#include "symprime/sieve.hpp"
#include "symprime/sympoly.hpp"

using namespace symprime;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("build_table on hand-checked values") {
  CHECK(build_table(5).values == ints({1, 10, 35, 50, 24}));
  CHECK(build_table(2).values == ints({1, 1}));
  CHECK(build_table(3).values == ints({1, 3, 2}));
  CHECK(build_table(7).values == ints({1, 21, 175, 735, 1624, 1764, 720}));
}

TEST_CASE("build_table modular path reduces the exact values") {
  CHECK(build_table(5, BigInt(5)).values == ints({1, 0, 0, 0, 4}));
  std::mt19937_64 rng(29);
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t n = 2; n <= 40; ++n) sizes.push_back(n);
  for (std::uint64_t n : {64ull, 100ull, 128ull, 177ull, 200ull}) {
    sizes.push_back(n);
  }
  for (std::uint64_t n : sizes) {
    SymTable exact = build_table(n);
    std::vector<std::uint64_t> moduli = {2, 7, 25, 1000003};
    moduli.push_back(2 + rng() % 1000000000);
    for (std::uint64_t m : moduli) {
      SymTable reduced = build_table(n, BigInt(m));
      REQUIRE(reduced.values.size() == n);
      for (std::uint64_t k = 0; k < n; ++k) {
        CHECK(reduced.values[k] == exact.values[k] % m);
      }
    }
  }
}

TEST_CASE("build_table wide-modulus path agrees with the exact table") {
  BigInt m = big_pow(BigInt(2), 80) + 7;
  SymTable wide = build_table(25, m);
  SymTable exact = build_table(25);
  for (std::uint64_t k = 0; k < 25; ++k) {
    CHECK(wide.values[k] == exact.values[k] % m);
  }
}

TEST_CASE("table invariants: endpoints and out-of-range reads") {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    SymTable t = build_table(n);
    CHECK(t.values[0] == 1);
    CHECK(t.values[n - 1] == factorial_exact(n - 1));
    CHECK(t.at(-1) == 0);
    CHECK(t.at(static_cast<std::int64_t>(n)) == 0);
    CHECK(t.at(0) == 1);
  }
}

TEST_CASE("build_table rejects bad input") {
  CHECK_THROWS_AS(build_table(0), DomainError);
  CHECK_THROWS_AS(build_table(1), DomainError);
  CHECK_THROWS_AS(build_table(5, BigInt(1)), DomainError);
}

TEST_CASE("brute-force oracle equals the DP table for every n <= 14") {
  for (std::uint64_t n = 2; n <= 14; ++n) {
    SymTable t = build_table(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      CHECK(t.values[k] == brute_force_Pk(n, k));
    }
  }
}

TEST_CASE("brute_force_Pk conventions and bounds") {
  CHECK(brute_force_Pk(5, 2) == 35);
  CHECK(brute_force_Pk(5, 4) == 24);  // equals 4!
  for (std::uint64_t n = 2; n <= 10; ++n) CHECK(brute_force_Pk(n, 0) == 1);
  CHECK_THROWS_AS(brute_force_Pk(17, 2), DomainError);
  CHECK_THROWS_AS(brute_force_Pk(5, 5), DomainError);
}

TEST_CASE("expand_falling_product on small n") {
  CHECK(expand_falling_product(2).coeffs == ints({-1, 1}));
  CHECK(expand_falling_product(3).coeffs == ints({2, -3, 1}));
  CHECK(expand_falling_product(5).coeffs == ints({24, -50, 35, -10, 1}));
  CHECK(expand_falling_product(5).degree() == 4);
}

TEST_CASE("factorization identity holds for all n in 2..30, odd or even") {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    CHECK(verify_factorization_identity(n));
  }
}

TEST_CASE("falling product evaluates to zero at each root") {
  IntPoly poly = expand_falling_product(9);
  for (std::int64_t x = 1; x <= 8; ++x) {
    BigInt value = 0;
    for (std::int64_t d = poly.degree(); d >= 0; --d) {
      value = value * x + poly.coeff(static_cast<std::size_t>(d));
    }
    CHECK(value == 0);
  }
}

TEST_CASE("coefficient identity on hand-checked instances") {
  SymTable t5 = build_table(5);
  CHECK(coefficient_identity_check(5, 2, t5));  // 5*10+35 == 10+40+35
  CHECK(coefficient_identity_check(5, 0, t5));  // P_{-1} = 0 convention
  SymTable t7 = build_table(7);
  CHECK(coefficient_identity_check(7, 7, t7));
}

TEST_CASE("coefficient identity holds for every m, exact and modular") {
  std::mt19937_64 rng(31);
  for (std::uint64_t n = 2; n <= 20; ++n) {
    SymTable exact = build_table(n);
    SymTable modular = build_table(n, BigInt(2 + rng() % 5000));
    for (std::uint64_t m = 0; m <= n; ++m) {
      CHECK(coefficient_identity_check(n, m, exact));
      CHECK(coefficient_identity_check(n, m, modular));
    }
  }
}

TEST_CASE("coefficient identity validates its table") {
  SymTable t5 = build_table(5);
  CHECK_THROWS_AS(coefficient_identity_check(6, 2, t5), DomainError);
  CHECK_THROWS_AS(coefficient_identity_check(5, 6, t5), DomainError);
}

TEST_CASE("recurrence right-hand side on hand-checked instances") {
  SymTable t5 = build_table(5);
  CHECK(recurrence_rhs(5, 2, t5) == 10);  // == (2-1) P_1
  CHECK(recurrence_rhs(5, 5, t5) == 96);  // 1+10+35+50 == 4 P_4
  SymTable t3 = build_table(3);
  CHECK(recurrence_rhs(3, 2, t3) == 3);  // == P_1
  CHECK_THROWS_AS(recurrence_rhs(5, 1, t5), DomainError);
  CHECK_THROWS_AS(recurrence_rhs(5, 6, t5), DomainError);
}

TEST_CASE("recurrence holds exactly for all 2 <= m <= n <= 60") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    SymTable t = build_table(n);
    for (std::uint64_t m = 2; m <= n; ++m) {
      CHECK(recurrence_rhs(n, m, t) == BigInt(m - 1) * t.values[m - 1]);
    }
  }
}

TEST_CASE("recurrence self-consistency survives large modular tables") {
  BigInt m = big_pow(BigInt(99991), 2);  // prime squared, not a field
  std::uint64_t n = 800;
  SymTable t = build_table(n, m);
  for (std::uint64_t step : {2ull, 3ull, 97ull, 400ull, 800ull}) {
    CHECK(recurrence_rhs(n, step, t) ==
          BigInt(step - 1) * t.values[step - 1] % m);
  }
}

TEST_CASE("P_{p-2} identity on hand-checked primes") {
  CHECK(p_p2_identity_check(5));   // 50 == 125 - 250 + 175
  CHECK(p_p2_identity_check(3));   // 3 == 3
  CHECK(p_p2_identity_check(13));
  CHECK_THROWS_AS(p_p2_identity_check(9), NonPrimeError);
  CHECK_THROWS_AS(p_p2_identity_check(2), DomainError);
}

TEST_CASE("exact binomial identity on hand-checked primes") {
  CHECK(central_binomial_identity_check(3));   // 10 == 1 + 18/2
  CHECK(central_binomial_identity_check(5));   // 126 == 1 + 3000/24
  CHECK(central_binomial_identity_check(23));
  CHECK_THROWS_AS(central_binomial_identity_check(15), NonPrimeError);
  CHECK_THROWS_AS(central_binomial_identity_check(2), DomainError);
}

TEST_CASE("divisibility chain mod p^3: p | P_i and p^2 | P_{p-2}") {
  for (std::uint64_t p : primes_up_to(100)) {
    if (p < 3) continue;
    BigInt pb(p);
    SymTable t = build_table(p, pb * pb * pb);
    for (std::uint64_t i = 1; i + 2 <= p; ++i) {
      CHECK(t.values[i] % p == 0);
    }
    if (p >= 5) CHECK(t.values[p - 2] % (pb * pb) == 0);
  }
  // negative control: the p >= 5 hypothesis is necessary
  SymTable t3 = build_table(3, BigInt(27));
  CHECK(t3.values[1] % 9 != 0);
}
