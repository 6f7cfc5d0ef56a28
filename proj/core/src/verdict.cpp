#include "symprime/verdict.hpp"

namespace symprime {

std::string_view check_token(CheckKind kind) {
  switch (kind) {
    case CheckKind::Wilson: return "wilson";
    case CheckKind::WilsonConverse: return "wilson_converse";
    case CheckKind::WilsonPrime: return "wilson_prime";
    case CheckKind::Wolstenholme2: return "wolstenholme2";
    case CheckKind::Wolstenholme3: return "wolstenholme3";
    case CheckKind::Wolstenholme4: return "wolstenholme4";
    case CheckKind::PDividesPi: return "p_divides_Pi";
    case CheckKind::P2DividesPp2: return "p2_divides_Pp2";
  }
  return "unknown";
}

std::optional<CheckKind> check_from_token(std::string_view token) {
  for (CheckKind kind : kAllChecks) {
    if (check_token(kind) == token) return kind;
  }
  return std::nullopt;
}

CheckTraits check_traits(CheckKind kind) {
  switch (kind) {
    case CheckKind::Wilson: return {2, true, false};
    case CheckKind::WilsonConverse: return {2, false, false};
    case CheckKind::WilsonPrime: return {2, true, true};
    case CheckKind::Wolstenholme2: return {3, true, false};
    case CheckKind::Wolstenholme3: return {5, true, false};
    case CheckKind::Wolstenholme4: return {2, true, true};
    case CheckKind::PDividesPi: return {3, true, false};
    case CheckKind::P2DividesPp2: return {5, true, false};
  }
  return {2, true, false};
}

}  // namespace symprime
