#include "symprime/residue.hpp"

#include <utility>

namespace symprime {

namespace {

BigInt floor_mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

BigInt inv_mod_big(const BigInt& a, const BigInt& m) {
  BigInt old_r = a, r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_s - q * s;
    old_s = std::move(s);
    s = std::move(t);
  }
  if (old_r != 1) {
    throw NotInvertibleError(
        "inverse: value shares a factor with the modulus");
  }
  return floor_mod(old_s, m);
}

void require_same_ring(const Residue& a, const Residue& b) {
  bool same = a.narrow() == b.narrow() &&
              (a.narrow() ? a.modulus_u64() == b.modulus_u64()
                          : a.modulus() == b.modulus());
  if (!same) {
    throw ModulusMismatchError("residues have different moduli");
  }
}

}  // namespace

Residue::Residue(const BigInt& value, const BigInt& modulus) {
  if (modulus < 2) throw DomainError("modulus must be >= 2");
  if (modulus < BigInt(kNarrowModulusLimit)) {
    narrow_ = true;
    m_ = to_u64(modulus);
    v_ = to_u64(floor_mod(value, modulus));
  } else {
    narrow_ = false;
    mb_ = modulus;
    vb_ = floor_mod(value, modulus);
  }
}

Residue::Residue(std::int64_t value, std::uint64_t modulus) {
  if (modulus < 2) throw DomainError("modulus must be >= 2");
  if (modulus < kNarrowModulusLimit) {
    narrow_ = true;
    m_ = modulus;
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += static_cast<std::int64_t>(modulus);
    v_ = static_cast<std::uint64_t>(r);
  } else {
    *this = Residue(BigInt(value), BigInt(modulus));
  }
}

Residue Residue::inverse() const {
  Residue out = *this;
  if (narrow_) {
    out.v_ = inv_mod(v_, m_);
  } else {
    out.vb_ = inv_mod_big(vb_, mb_);
  }
  return out;
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  Residue out = a;
  if (a.narrow_) {
    out.v_ = add_mod(a.v_, b.v_, a.m_);
  } else {
    out.vb_ = a.vb_ + b.vb_;
    if (out.vb_ >= a.mb_) out.vb_ -= a.mb_;
  }
  return out;
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  Residue out = a;
  if (a.narrow_) {
    out.v_ = sub_mod(a.v_, b.v_, a.m_);
  } else {
    out.vb_ = a.vb_ >= b.vb_ ? BigInt(a.vb_ - b.vb_)
                             : BigInt(a.vb_ + (a.mb_ - b.vb_));
  }
  return out;
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  Residue out = a;
  if (a.narrow_) {
    out.v_ = mul_mod(a.v_, b.v_, a.m_);
  } else {
    out.vb_ = a.vb_ * b.vb_ % a.mb_;
  }
  return out;
}

bool operator==(const Residue& a, const Residue& b) {
  if (a.narrow_ != b.narrow_) return false;
  if (a.narrow_) return a.m_ == b.m_ && a.v_ == b.v_;
  return a.mb_ == b.mb_ && a.vb_ == b.vb_;
}

}  // namespace symprime
