#include <doctest.h>

#include <random>

#include "symprime/arith.hpp"
#include "symprime/errors.hpp"
#include "symprime/sieve.hpp"

using namespace symprime;

TEST_CASE("factorial_mod on known values") {
  CHECK(factorial_mod(4, 5) == Residue(4, 5));
  CHECK(factorial_mod(6, 7) == Residue(6, 7));
  for (std::uint64_t m : {2ull, 3ull, 97ull, 1000003ull}) {
    CHECK(factorial_mod(0, m).value() == 1 % m);
    CHECK(factorial_mod(1, m).value() == 1 % m);
  }
}

TEST_CASE("factorial_mod equals exact factorial reduced") {
  std::mt19937_64 rng(23);
  for (std::uint64_t n = 0; n <= 20; ++n) {
    BigInt exact = factorial_exact(n);
    for (int i = 0; i < 20; ++i) {
      std::uint64_t m = 2 + rng() % 1000000;
      CHECK(factorial_mod(n, m).value() == exact % m);
    }
  }
}

TEST_CASE("factorial_exact on frozen small values") {
  CHECK(factorial_exact(0) == 1);
  CHECK(factorial_exact(5) == 120);
  CHECK(factorial_exact(20) == BigInt("2432902008176640000"));
  CHECK(factorial_exact(25) == factorial_exact(24) * 25);
}

TEST_CASE("binomial_exact basics and Pascal relation") {
  CHECK(binomial_exact(9, 4) == 126);
  CHECK(binomial_exact(5, 2) == 10);
  CHECK(binomial_exact(4, 0) == 1);
  CHECK(binomial_exact(4, 4) == 1);
  CHECK(binomial_exact(4, 5) == 0);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      CHECK(binomial_exact(n, k) ==
            binomial_exact(n - 1, k - 1) + binomial_exact(n - 1, k));
    }
  }
}

TEST_CASE("central_binom_mod on hand-checked values") {
  CHECK(central_binom_mod(5, 3) == Residue(1, 125));
  CHECK(central_binom_mod(3, 2) == Residue(1, 9));
  CHECK(central_binom_mod(5, 4) == Residue(126, 625));
}

TEST_CASE("central_binom_mod rejects composite p") {
  CHECK_THROWS_AS(central_binom_mod(4, 2), NonPrimeError);
  CHECK_THROWS_AS(central_binom_mod(1, 2), NonPrimeError);
  CHECK_THROWS_AS(central_binom_mod(16842, 3), NonPrimeError);
}

TEST_CASE("central_binom_mod rejects powers outside 1..4") {
  CHECK_THROWS_AS(central_binom_mod(5, 0), DomainError);
  CHECK_THROWS_AS(central_binom_mod(5, 5), DomainError);
}

// Independent oracle: the exact binomial through exact factorials, a route
// that never touches modular inverses.
TEST_CASE("central_binom_mod equals the exact binomial for all p <= 64") {
  for (std::uint64_t p : primes_up_to(64)) {
    BigInt exact =
        factorial_exact(2 * p - 1) /
        (factorial_exact(p - 1) * factorial_exact(p));
    for (unsigned e = 1; e <= 4; ++e) {
      BigInt modulus = big_pow(BigInt(p), e);
      CHECK(central_binom_mod(p, e).value() == exact % modulus);
    }
  }
}

TEST_CASE("central_binom_mod handles wide moduli") {
  // 55109^4 exceeds the word policy, forcing the arbitrary-precision path
  std::uint64_t p = 55109;
  REQUIRE(is_prime_u64(p));
  Residue r = central_binom_mod(p, 4);
  CHECK_FALSE(r.narrow());
  CHECK(r.value() == binomial_exact(2 * p - 1, p - 1) % r.modulus());
}
