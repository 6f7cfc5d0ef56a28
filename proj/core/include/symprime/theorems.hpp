#pragma once

#include <cstdint>
#include <vector>

#include "symprime/verdict.hpp"

namespace symprime {

/// (p-1)! against -1 mod p, for any p >= 2. Composite subjects simply fail.
Verdict wilson_check(std::uint64_t p);

/// Primality of n by the Wilson congruence; exact for every n >= 2.
bool wilson_primality(std::uint64_t n);

/// C(2p-1, p-1) against 1 mod p^power, power in {2, 3, 4}. p must be prime.
Verdict wolstenholme_check(std::uint64_t p, unsigned power);

/// (p-1)! against p^2 - 1 mod p^2 (i.e. p^2 | (p-1)! + 1). p must be prime.
Verdict wilson_prime_check(std::uint64_t p);

/// For an odd prime p, one verdict per i = 1..p-2 for p | P_i, then one
/// verdict for p^2 | P_{p-2}. The table is built mod p^3: enough headroom to
/// decide both divisibilities exactly at O(p^2) word cost.
std::vector<Verdict> divisibility_report(std::uint64_t p);

}  // namespace symprime
