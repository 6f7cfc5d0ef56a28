#pragma once

#include <string>

#include "symprime/verdict.hpp"

namespace symprime {

inline constexpr int kReportSchemaVersion = 1;

/// One newline-free JSON object per verdict. Field order is fixed;
/// modulus/lhs/target serialize as decimal strings, and the subject becomes
/// a decimal string once it exceeds 2^53 so downstream JSON consumers never
/// lose precision to doubles.
std::string verdict_to_record_line(const Verdict& v);

/// Inverse of verdict_to_record_line. Throws Error on malformed input or on
/// a record whose holds flag contradicts its residues.
Verdict verdict_from_record_line(const std::string& line);

}  // namespace symprime
