#include "symprime/sieve.hpp"

#include <algorithm>

#include "symprime/modmath.hpp"

namespace symprime {

namespace {

constexpr std::uint64_t kSimpleSieveLimit = 1'000'000;

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) primes.push_back(i);
  }
  return primes;
}

}  // namespace

std::vector<char> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                const std::vector<std::uint64_t>& base_primes) {
  std::vector<char> flags(hi - lo + 1, 1);
  if (lo == 0) flags[0] = 0;
  if (lo <= 1 && hi >= 1) flags[1 - lo] = 0;
  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j <= hi; j += p) flags[j - lo] = 0;
  }
  return flags;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit <= kSimpleSieveLimit) return simple_sieve(limit);
  std::vector<std::uint64_t> primes = simple_sieve(isqrt_u64(limit));
  std::vector<std::uint64_t> base = primes;  // primes <= sqrt(limit)
  for (std::uint64_t lo = base.empty() ? 2 : base.back() + 1; lo <= limit;) {
    std::uint64_t hi = std::min(limit, lo + kSimpleSieveLimit - 1);
    std::vector<char> flags = sieve_segment(lo, hi, base);
    for (std::uint64_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) primes.push_back(lo + i);
    }
    lo = hi + 1;
  }
  return primes;
}

}  // namespace symprime
