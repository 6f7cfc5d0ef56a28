#include "symprime/theorems.hpp"

#include "symprime/arith.hpp"
#include "symprime/errors.hpp"
#include "symprime/modmath.hpp"
#include "symprime/sympoly.hpp"

namespace symprime {

namespace {

Verdict wilson_congruence(std::uint64_t n, CheckKind kind) {
  if (n < 2) throw DomainError("wilson_check: n must be >= 2");
  BigInt modulus(n);
  return make_verdict(n, kind, factorial_mod(n - 1, modulus),
                      Residue(BigInt(n - 1), modulus));
}

}  // namespace

Verdict wilson_check(std::uint64_t p) {
  return wilson_congruence(p, CheckKind::Wilson);
}

bool wilson_primality(std::uint64_t n) {
  return wilson_congruence(n, CheckKind::WilsonConverse).holds;
}

Verdict wolstenholme_check(std::uint64_t p, unsigned power) {
  if (power < 2 || power > 4) {
    throw DomainError("wolstenholme_check: power must be 2, 3 or 4");
  }
  Residue lhs = central_binom_mod(p, power);  // prime precheck happens here
  CheckKind kind = power == 2   ? CheckKind::Wolstenholme2
                   : power == 3 ? CheckKind::Wolstenholme3
                                : CheckKind::Wolstenholme4;
  return make_verdict(p, kind, lhs, Residue(BigInt(1), lhs.modulus()));
}

Verdict wilson_prime_check(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw NonPrimeError("wilson_prime_check: p is not prime");
  }
  BigInt p2 = BigInt(p) * p;
  return make_verdict(p, CheckKind::WilsonPrime, factorial_mod(p - 1, p2),
                      Residue(p2 - 1, p2));
}

std::vector<Verdict> divisibility_report(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw NonPrimeError("divisibility_report: p is not prime");
  }
  if (p < 3) throw DomainError("divisibility_report: requires p >= 3");
  BigInt pb(p);
  SymTable table = build_table(p, pb * pb * pb);
  std::vector<Verdict> out;
  out.reserve(p - 1);
  for (std::uint64_t i = 1; i + 2 <= p; ++i) {
    out.push_back(make_verdict(p, CheckKind::PDividesPi,
                               Residue(table.values[i], pb),
                               Residue(BigInt(0), pb)));
  }
  BigInt p2 = pb * pb;
  out.push_back(make_verdict(p, CheckKind::P2DividesPp2,
                             Residue(table.values[p - 2], p2),
                             Residue(BigInt(0), p2)));
  return out;
}

}  // namespace symprime
