#pragma once

#include <cstdint>

#include "symprime/bigint.hpp"
#include "symprime/errors.hpp"
#include "symprime/modmath.hpp"

namespace symprime {

/// A fully reduced residue: 0 <= value < modulus, modulus >= 2.
///
/// Storage policy: moduli below 2^63 live in a single word and multiply
/// through 128-bit intermediates; larger moduli fall back transparently to
/// arbitrary precision. Negative inputs are canonicalized on construction,
/// so -1 mod m is always stored as m - 1.
class Residue {
 public:
  Residue(const BigInt& value, const BigInt& modulus);
  Residue(std::int64_t value, std::uint64_t modulus);

  bool narrow() const { return narrow_; }
  std::uint64_t value_u64() const { return v_; }    // valid only when narrow()
  std::uint64_t modulus_u64() const { return m_; }  // valid only when narrow()
  BigInt value() const { return narrow_ ? BigInt(v_) : vb_; }
  BigInt modulus() const { return narrow_ ? BigInt(m_) : mb_; }

  Residue inverse() const;  // throws NotInvertibleError when gcd != 1

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b);
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

 private:
  Residue() = default;

  bool narrow_ = true;
  std::uint64_t v_ = 0;
  std::uint64_t m_ = 2;
  BigInt vb_;
  BigInt mb_;
};

}  // namespace symprime
