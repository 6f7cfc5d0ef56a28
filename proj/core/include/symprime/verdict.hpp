#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "symprime/residue.hpp"

namespace symprime {

/// The congruence checks this library knows how to run. Enumerator order is
/// the canonical report order within one subject.
enum class CheckKind : std::uint8_t {
  Wilson,          // (p-1)! == -1 (mod p)
  WilsonConverse,  // the same congruence read as a primality test
  WilsonPrime,     // search: p^2 divides (p-1)! + 1
  Wolstenholme2,   // C(2p-1, p-1) == 1 (mod p^2)
  Wolstenholme3,   // C(2p-1, p-1) == 1 (mod p^3)
  Wolstenholme4,   // search: the congruence mod p^4
  PDividesPi,      // p divides P_i for i = 1..p-2
  P2DividesPp2,    // p^2 divides P_{p-2}
};

inline constexpr std::array<CheckKind, 8> kAllChecks = {
    CheckKind::Wilson,        CheckKind::WilsonConverse,
    CheckKind::WilsonPrime,   CheckKind::Wolstenholme2,
    CheckKind::Wolstenholme3, CheckKind::Wolstenholme4,
    CheckKind::PDividesPi,    CheckKind::P2DividesPp2,
};

std::string_view check_token(CheckKind kind);
std::optional<CheckKind> check_from_token(std::string_view token);

struct CheckTraits {
  std::uint64_t min_subject;  // smallest subject the statement covers
  bool primes_only;           // skip composite subjects in scans
  bool search;                // a holding verdict is the notable outcome
};

CheckTraits check_traits(CheckKind kind);

/// Outcome of one congruence check at one subject. holds is derived, never
/// set by hand: it is exactly lhs == target.
struct Verdict {
  std::uint64_t subject;
  CheckKind check;
  Residue lhs;
  Residue target;
  bool holds;
};

inline Verdict make_verdict(std::uint64_t subject, CheckKind check,
                            Residue lhs, Residue target) {
  bool holds = lhs == target;
  return Verdict{subject, check, std::move(lhs), std::move(target), holds};
}

}  // namespace symprime
