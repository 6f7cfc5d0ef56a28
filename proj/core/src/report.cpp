#include "symprime/report.hpp"

#include "json_codec.hpp"
#include "symprime/errors.hpp"

namespace symprime {

namespace detail {

namespace {

constexpr std::uint64_t kMaxSafeJsonInteger = 1ull << 53;

BigInt big_from_field(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw Error(std::string("record field '") + field +
                "' must be a decimal string");
  }
  try {
    return BigInt(j[field].get<std::string>());
  } catch (const std::exception&) {
    throw Error(std::string("record field '") + field +
                "' is not a valid decimal integer");
  }
}

}  // namespace

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  if (v.subject <= kMaxSafeJsonInteger) {
    j["subject"] = v.subject;
  } else {
    j["subject"] = std::to_string(v.subject);
  }
  j["check"] = std::string(check_token(v.check));
  j["modulus"] = to_decimal(v.lhs.modulus());
  j["lhs"] = to_decimal(v.lhs.value());
  j["target"] = to_decimal(v.target.value());
  j["holds"] = v.holds;
  return j;
}

Verdict verdict_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error("record is not a JSON object");
  if (!j.contains("schema_version") ||
      j["schema_version"] != kReportSchemaVersion) {
    throw Error("record has missing or unsupported schema_version");
  }
  std::uint64_t subject = 0;
  if (j.contains("subject") && j["subject"].is_number_unsigned()) {
    subject = j["subject"].get<std::uint64_t>();
  } else if (j.contains("subject") && j["subject"].is_string()) {
    try {
      subject = std::stoull(j["subject"].get<std::string>());
    } catch (const std::exception&) {
      throw Error("record subject is not a valid integer");
    }
  } else {
    throw Error("record subject must be an integer or decimal string");
  }
  if (!j.contains("check") || !j["check"].is_string()) {
    throw Error("record check must be a string");
  }
  auto kind = check_from_token(j["check"].get<std::string>());
  if (!kind) throw Error("record names an unknown check");
  BigInt modulus = big_from_field(j, "modulus");
  BigInt lhs = big_from_field(j, "lhs");
  BigInt target = big_from_field(j, "target");
  if (!j.contains("holds") || !j["holds"].is_boolean()) {
    throw Error("record holds must be a boolean");
  }
  std::optional<Verdict> v;
  try {
    v = make_verdict(subject, *kind, Residue(lhs, modulus),
                     Residue(target, modulus));
  } catch (const Error& e) {
    throw Error(std::string("record residues invalid: ") + e.what());
  }
  if (v->holds != j["holds"].get<bool>()) {
    throw Error("record holds flag contradicts its residues");
  }
  return *v;
}

}  // namespace detail

std::string verdict_to_record_line(const Verdict& v) {
  return detail::verdict_to_json(v).dump();
}

Verdict verdict_from_record_line(const std::string& line) {
  detail::ordered_json j;
  try {
    j = detail::ordered_json::parse(line);
  } catch (const std::exception& e) {
    throw Error(std::string("record is not valid JSON: ") + e.what());
  }
  return detail::verdict_from_json(j);
}

}  // namespace symprime
