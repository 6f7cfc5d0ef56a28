#pragma once

#include <cstdint>
#include <vector>

namespace symprime {

/// All primes <= limit. Plain Eratosthenes below 10^6; larger limits are
/// swept in segments so the working set stays bounded.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Primality flags for the window [lo, hi]: flags[i] corresponds to lo + i.
/// base_primes must contain every prime <= sqrt(hi).
std::vector<char> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                const std::vector<std::uint64_t>& base_primes);

}  // namespace symprime
