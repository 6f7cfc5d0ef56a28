#include <doctest.h>

#include "symprime/errors.hpp"
#include "symprime/report.hpp"
#include "symprime/theorems.hpp"

using namespace symprime;

namespace {

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.subject == b.subject && a.check == b.check && a.lhs == b.lhs &&
         a.target == b.target && a.holds == b.holds;
}

}  // namespace

TEST_CASE("record line has the frozen field layout") {
  CHECK(verdict_to_record_line(wilson_check(13)) ==
        R"({"schema_version":1,"subject":13,"check":"wilson",)"
        R"("modulus":"13","lhs":"12","target":"12","holds":true})");
  CHECK(verdict_to_record_line(wilson_check(6)) ==
        R"({"schema_version":1,"subject":6,"check":"wilson",)"
        R"("modulus":"6","lhs":"0","target":"5","holds":false})");
}

TEST_CASE("record lines round-trip") {
  for (const Verdict& v :
       {wilson_check(13), wilson_check(6), wolstenholme_check(3, 3),
        wilson_prime_check(7)}) {
    Verdict back = verdict_from_record_line(verdict_to_record_line(v));
    CHECK(same_verdict(v, back));
  }
}

TEST_CASE("subjects beyond 2^53 serialize as decimal strings") {
  std::uint64_t subject = 1ull << 60;
  Verdict v = make_verdict(subject, CheckKind::Wilson, Residue(5, 7),
                           Residue(5, 7));
  std::string line = verdict_to_record_line(v);
  CHECK(line.find("\"subject\":\"1152921504606846976\"") != std::string::npos);
  CHECK(same_verdict(v, verdict_from_record_line(line)));
}

TEST_CASE("malformed records are rejected with a reason") {
  CHECK_THROWS_AS(verdict_from_record_line("not json"), Error);
  CHECK_THROWS_AS(verdict_from_record_line("{}"), Error);
  CHECK_THROWS_AS(
      verdict_from_record_line(
          R"({"schema_version":2,"subject":13,"check":"wilson",)"
          R"("modulus":"13","lhs":"12","target":"12","holds":true})"),
      Error);
  CHECK_THROWS_AS(
      verdict_from_record_line(
          R"({"schema_version":1,"subject":13,"check":"nope",)"
          R"("modulus":"13","lhs":"12","target":"12","holds":true})"),
      Error);
  // holds flag contradicting the residues is detected
  CHECK_THROWS_AS(
      verdict_from_record_line(
          R"({"schema_version":1,"subject":13,"check":"wilson",)"
          R"("modulus":"13","lhs":"12","target":"12","holds":false})"),
      Error);
  // modulus as a JSON number instead of a decimal string
  CHECK_THROWS_AS(
      verdict_from_record_line(
          R"({"schema_version":1,"subject":13,"check":"wilson",)"
          R"("modulus":13,"lhs":"12","target":"12","holds":true})"),
      Error);
}
