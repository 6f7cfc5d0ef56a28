#include <doctest.h>

#include <algorithm>

#include "symprime/modmath.hpp"
#include "symprime/sieve.hpp"

using namespace symprime;

TEST_CASE("primes_up_to(100) is the known list") {
  std::vector<std::uint64_t> expected = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                         29, 31, 37, 41, 43, 47, 53, 59, 61,
                                         67, 71, 73, 79, 83, 89, 97};
  CHECK(primes_up_to(100) == expected);
  CHECK(primes_up_to(1) == std::vector<std::uint64_t>{});
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("sieve counts match trial division") {
  std::vector<std::uint64_t> primes = primes_up_to(10000);
  std::size_t by_trial = 0;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    if (is_prime_u64(n)) ++by_trial;
  }
  CHECK(primes.size() == by_trial);
  CHECK(primes.size() == 1229);
}

TEST_CASE("sieve_segment agrees with trial division on scattered windows") {
  std::vector<std::uint64_t> base = primes_up_to(isqrt_u64(10'000'000));
  for (std::uint64_t lo : {2ull, 999'000ull, 4'000'017ull, 9'990'000ull}) {
    std::uint64_t hi = lo + 3000;
    std::vector<char> flags = sieve_segment(lo, hi, base);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      CHECK(static_cast<bool>(flags[n - lo]) == is_prime_u64(n));
    }
  }
}

TEST_CASE("segmented path above the simple-sieve limit stays consistent") {
  std::vector<std::uint64_t> primes = primes_up_to(1'050'000);
  CHECK(std::is_sorted(primes.begin(), primes.end()));
  CHECK(std::adjacent_find(primes.begin(), primes.end()) == primes.end());
  // the tail past the simple-sieve limit is genuinely prime
  std::size_t tail = 0;
  for (auto it = primes.rbegin(); it != primes.rend() && *it > 1'000'000; ++it) {
    CHECK(is_prime_u64(*it));
    ++tail;
  }
  CHECK(tail > 0);
  // and nothing prime was skipped in the splice window
  std::vector<std::uint64_t> base = primes_up_to(isqrt_u64(1'050'000));
  std::vector<char> flags = sieve_segment(999'900, 1'000'100, base);
  for (std::uint64_t n = 999'900; n <= 1'000'100; ++n) {
    bool in_list = std::binary_search(primes.begin(), primes.end(), n);
    CHECK(in_list == static_cast<bool>(flags[n - 999'900]));
  }
}
