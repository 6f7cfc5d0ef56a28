#include "symprime/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json_codec.hpp"
#include "symprime/errors.hpp"

namespace symprime {

namespace {

using detail::ordered_json;

std::uint64_t u64_field(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_unsigned()) {
    throw CheckpointError(std::string("checkpoint field '") + field +
                          "' must be a nonnegative integer");
  }
  return j[field].get<std::uint64_t>();
}

}  // namespace

std::string checkpoint_to_json(const ScanCheckpoint& cp) {
  ordered_json j;
  j["schema_version"] = 1;
  j["from"] = cp.from;
  j["to"] = cp.to;
  ordered_json checks = ordered_json::array();
  for (CheckKind kind : cp.checks) checks.push_back(std::string(check_token(kind)));
  j["checks"] = std::move(checks);
  j["last_completed"] = cp.last_completed;
  ordered_json counts = ordered_json::object();
  for (const auto& [kind, c] : cp.counts) {
    counts[std::string(check_token(kind))] = {{"pass", c.pass},
                                              {"fail", c.fail}};
  }
  j["counts"] = std::move(counts);
  ordered_json findings = ordered_json::array();
  for (const Verdict& v : cp.findings) findings.push_back(detail::verdict_to_json(v));
  j["findings"] = std::move(findings);
  j["report_offset"] = cp.report_offset;
  return j.dump(2);
}

ScanCheckpoint checkpoint_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("checkpoint is not valid JSON: ") +
                          e.what());
  }
  if (!j.is_object()) throw CheckpointError("checkpoint is not a JSON object");
  if (!j.contains("schema_version") || j["schema_version"] != 1) {
    throw CheckpointError("checkpoint has missing or unsupported schema_version");
  }
  ScanCheckpoint cp;
  cp.from = u64_field(j, "from");
  cp.to = u64_field(j, "to");
  cp.last_completed = u64_field(j, "last_completed");
  cp.report_offset = u64_field(j, "report_offset");
  if (!j.contains("checks") || !j["checks"].is_array() || j["checks"].empty()) {
    throw CheckpointError("checkpoint checks must be a nonempty array");
  }
  for (const auto& tok : j["checks"]) {
    if (!tok.is_string()) throw CheckpointError("checkpoint check names must be strings");
    auto kind = check_from_token(tok.get<std::string>());
    if (!kind) {
      throw CheckpointError("checkpoint names an unknown check '" +
                            tok.get<std::string>() + "'");
    }
    cp.checks.push_back(*kind);
  }
  if (!j.contains("counts") || !j["counts"].is_object()) {
    throw CheckpointError("checkpoint counts must be an object");
  }
  for (const auto& [token, value] : j["counts"].items()) {
    auto kind = check_from_token(token);
    if (!kind) {
      throw CheckpointError("checkpoint counts name an unknown check '" +
                            token + "'");
    }
    VerdictCounts c;
    c.pass = u64_field(value, "pass");
    c.fail = u64_field(value, "fail");
    cp.counts[*kind] = c;
  }
  if (!j.contains("findings") || !j["findings"].is_array()) {
    throw CheckpointError("checkpoint findings must be an array");
  }
  for (const auto& record : j["findings"]) {
    try {
      cp.findings.push_back(detail::verdict_from_json(record));
    } catch (const Error& e) {
      throw CheckpointError(std::string("checkpoint finding invalid: ") +
                            e.what());
    }
  }
  if (cp.from < 2 || cp.from > cp.to) {
    throw CheckpointError("checkpoint range is invalid");
  }
  if (cp.last_completed < cp.from || cp.last_completed > cp.to) {
    throw CheckpointError("checkpoint last_completed is outside its range");
  }
  return cp;
}

void save_checkpoint(const std::filesystem::path& path,
                     const ScanCheckpoint& cp) {
  std::string body = checkpoint_to_json(cp);
  body.push_back('\n');
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw Error("cannot open checkpoint temp file " + tmp.string());
  bool ok = std::fwrite(body.data(), 1, body.size(), f) == body.size();
  ok = std::fflush(f) == 0 && ok;
  ok = ::fsync(fileno(f)) == 0 && ok;
  ok = std::fclose(f) == 0 && ok;
  if (!ok) {
    std::remove(tmp.c_str());
    throw Error("failed to write checkpoint temp file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error("failed to replace checkpoint file " + path.string() + ": " +
                ec.message());
  }
}

ScanCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CheckpointError("cannot read checkpoint file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json(buf.str());
}

}  // namespace symprime
