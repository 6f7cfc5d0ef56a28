#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace symprime {

// Exact signed integer of arbitrary magnitude. Nonnegative uses ("Natural"
// quantities such as n!, binomials, symmetric-table entries) and signed uses
// (alternating sums, polynomial coefficients) share this one type.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline bool fits_u64(const BigInt& x) {
  return x >= 0 && x <= BigInt(UINT64_MAX);
}

inline std::uint64_t to_u64(const BigInt& x) {
  return static_cast<std::uint64_t>(x);
}

}  // namespace symprime
