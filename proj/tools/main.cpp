// symprime: verify prime congruences (Wilson, Wolstenholme), replay the
// symmetric-polynomial identities behind them, dump P_k tables, and scan
// prime ranges with resumable checkpoints.
//
// Exit codes: 0 all checks hold, 1 at least one failure or search finding,
// 2 usage/domain/I-O error, 130 interrupted (scan).

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "symprime/arith.hpp"
#include "symprime/checkpoint.hpp"
#include "symprime/errors.hpp"
#include "symprime/modmath.hpp"
#include "symprime/report.hpp"
#include "symprime/scan.hpp"
#include "symprime/sympoly.hpp"
#include "symprime/theorems.hpp"

namespace {

constexpr int kExitAllHold = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInterrupted = 130;

volatile std::sig_atomic_t g_interrupted = 0;

extern "C" void handle_signal(int) { g_interrupted = 1; }

using namespace symprime;

std::vector<CheckKind> parse_check_list(const std::string& csv) {
  std::vector<CheckKind> checks;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    auto kind = check_from_token(token);
    if (!kind) throw Error("unknown check '" + token + "'");
    checks.push_back(*kind);
  }
  if (checks.empty()) throw Error("no checks requested");
  return checks;
}

int run_verify(const std::string& check, std::uint64_t n, unsigned power) {
  std::vector<Verdict> verdicts;
  if (check == "wilson") {
    verdicts.push_back(wilson_check(n));
  } else if (check == "wilson_converse") {
    Verdict v = wilson_check(n);
    verdicts.push_back(
        make_verdict(n, CheckKind::WilsonConverse, v.lhs, v.target));
  } else if (check == "wilson_prime") {
    verdicts.push_back(wilson_prime_check(n));
  } else if (check == "wolstenholme") {
    verdicts.push_back(wolstenholme_check(n, power));
  } else if (check == "divisibility") {
    verdicts = divisibility_report(n);
  } else {
    throw Error("unknown check '" + check +
                "' (expected wilson, wilson_converse, wilson_prime, "
                "wolstenholme or divisibility)");
  }
  bool all_hold = true;
  for (const Verdict& v : verdicts) {
    std::cout << verdict_to_record_line(v) << '\n';
    all_hold = all_hold && v.holds;
  }
  return all_hold ? kExitAllHold : kExitFindings;
}

int run_identity(std::uint64_t n) {
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << name << ": " << (pass ? "pass" : "FAIL") << '\n';
    all_pass = all_pass && pass;
  };

  report("factorization n=" + std::to_string(n),
         verify_factorization_identity(n));

  SymTable table = build_table(n);
  bool coeff_ok = true;
  std::uint64_t coeff_bad = 0;
  for (std::uint64_t m = 0; m <= n; ++m) {
    if (!coefficient_identity_check(n, m, table)) {
      coeff_ok = false;
      coeff_bad = m;
      break;
    }
  }
  report("coefficient m=0.." + std::to_string(n) +
             (coeff_ok ? "" : " (first failure m=" + std::to_string(coeff_bad) + ")"),
         coeff_ok);

  bool rec_ok = true;
  std::uint64_t rec_bad = 0;
  for (std::uint64_t m = 2; m <= n; ++m) {
    if (recurrence_rhs(n, m, table) != BigInt(m - 1) * table.values[m - 1]) {
      rec_ok = false;
      rec_bad = m;
      break;
    }
  }
  report("recurrence m=2.." + std::to_string(n) +
             (rec_ok ? "" : " (first failure m=" + std::to_string(rec_bad) + ")"),
         rec_ok);

  if (!is_prime_u64(n)) {
    std::cout << "p_p2_identity: skipped (" << n << " is not prime)\n";
    std::cout << "central_binomial: skipped (" << n << " is not prime)\n";
  } else if (n < 3) {
    std::cout << "p_p2_identity: skipped (requires p >= 3)\n";
    std::cout << "central_binomial: skipped (requires p >= 3)\n";
  } else {
    report("p_p2_identity p=" + std::to_string(n), p_p2_identity_check(n));
    report("central_binomial p=" + std::to_string(n), central_binomial_identity_check(n));
  }
  return all_pass ? kExitAllHold : kExitFindings;
}

int run_table(std::uint64_t n, const std::optional<std::string>& mod_text,
              bool as_json) {
  std::optional<BigInt> modulus;
  if (mod_text) {
    try {
      modulus = BigInt(*mod_text);
    } catch (const std::exception&) {
      throw Error("--mod is not a valid decimal integer");
    }
  }
  SymTable table = build_table(n, modulus);
  if (as_json) {
    std::string out = "[";
    for (std::size_t k = 0; k < table.values.size(); ++k) {
      if (k) out += ',';
      out += '"' + to_decimal(table.values[k]) + '"';
    }
    out += "]";
    std::cout << out << '\n';
  } else {
    for (const BigInt& v : table.values) std::cout << to_decimal(v) << '\n';
  }
  return kExitAllHold;
}

unsigned default_jobs() {
  const char* env = std::getenv("SYMPRIME_JOBS");
  if (!env || !*env) return 1;
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size() || v == 0 || v > 1024) {
      throw std::invalid_argument("range");
    }
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw Error("SYMPRIME_JOBS must be a positive integer");
  }
}

int run_scan(std::uint64_t from, std::uint64_t to, const std::string& checks_csv,
             std::optional<unsigned> jobs_flag,
             const std::optional<std::string>& out_path,
             const std::optional<std::string>& checkpoint_path) {
  std::vector<CheckKind> checks = parse_check_list(checks_csv);
  unsigned jobs = jobs_flag ? *jobs_flag : default_jobs();

  std::optional<ScanCheckpoint> resume;
  if (checkpoint_path && std::filesystem::exists(*checkpoint_path)) {
    resume = load_checkpoint(*checkpoint_path);  // CheckpointError -> exit 2
  }

  // Keep the report file consistent with the checkpoint: anything past the
  // checkpointed offset was never made durable, so drop it before resuming.
  std::uint64_t bytes_written = resume ? resume->report_offset : 0;
  std::FILE* out = stdout;
  bool out_is_file = false;
  if (out_path) {
    if (resume) {
      if (!std::filesystem::exists(*out_path)) {
        if (resume->report_offset > 0) {
          throw Error("report file " + *out_path +
                      " is missing but the checkpoint expects " +
                      std::to_string(resume->report_offset) + " bytes");
        }
      } else {
        std::uintmax_t size = std::filesystem::file_size(*out_path);
        if (size < resume->report_offset) {
          throw Error("report file " + *out_path +
                      " is shorter than the checkpoint offset");
        }
        if (size > resume->report_offset) {
          std::filesystem::resize_file(*out_path, resume->report_offset);
        }
      }
      out = std::fopen(out_path->c_str(), "ab");
    } else {
      out = std::fopen(out_path->c_str(), "wb");
    }
    if (!out) throw Error("cannot open report file " + *out_path);
    out_is_file = true;
  }

  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);

  ScanOptions opts;
  opts.from = from;
  opts.to = to;
  opts.checks = checks;
  opts.workers = jobs;
  opts.resume = resume;
  opts.emit = [&](const Verdict& v, bool) {
    std::string line = verdict_to_record_line(v);
    line.push_back('\n');
    std::fwrite(line.data(), 1, line.size(), out);
    bytes_written += line.size();
  };
  opts.on_checkpoint = [&](ScanCheckpoint& cp) {
    std::fflush(out);
    if (out_is_file) ::fsync(fileno(out));
    cp.report_offset = bytes_written;
    if (checkpoint_path) save_checkpoint(*checkpoint_path, cp);
    return g_interrupted == 0;
  };
  opts.stop_requested = [] { return g_interrupted != 0; };

  ScanCheckpoint final_state = scan_range(opts);
  std::fflush(out);
  if (out_is_file) {
    ::fsync(fileno(out));
    std::fclose(out);
  }

  std::ostream& summary = out_is_file ? std::cout : std::cerr;
  if (!final_state.complete()) {
    summary << "scan " << from << ".." << to << " interrupted at "
            << final_state.last_completed
            << (checkpoint_path ? "; resume with the same --checkpoint"
                                : "; no --checkpoint given, progress lost")
            << '\n';
    return kExitInterrupted;
  }
  summary << "scan " << from << ".." << to << " complete\n";
  bool any_fail = false;
  for (const auto& [kind, counts] : final_state.counts) {
    summary << check_token(kind) << ": " << counts.pass << " pass, "
            << counts.fail << " fail\n";
    any_fail = any_fail || counts.fail > 0;
  }
  if (final_state.findings.empty()) {
    summary << "findings: none\n";
  } else {
    summary << "findings:\n";
    for (const Verdict& v : final_state.findings) {
      summary << "  " << check_token(v.check) << ' ' << v.subject << '\n';
    }
  }
  return any_fail ? kExitFindings : kExitAllHold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "prime congruence toolkit: Wilson / Wolstenholme checks, elementary "
      "symmetric polynomial tables, and resumable prime-range scans"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify", "run one check and print its record as JSON");
  std::string verify_check;
  std::uint64_t verify_n = 0;
  unsigned verify_power = 3;
  verify->add_option("check", verify_check,
                     "wilson | wilson_converse | wilson_prime | wolstenholme "
                     "| divisibility")
      ->required();
  verify->add_option("--n", verify_n, "subject integer")->required();
  verify->add_option("--power", verify_power,
                     "modulus exponent for wolstenholme (2..4, default 3)");

  auto* identity = app.add_subcommand(
      "identity", "replay the exact identities behind the theorems for one n");
  std::uint64_t identity_n = 0;
  identity->add_option("--n", identity_n, "n >= 2")->required();

  auto* table = app.add_subcommand(
      "table", "print the table P_0..P_{n-1} of {1..n-1}");
  std::uint64_t table_n = 0;
  std::optional<std::string> table_mod;
  bool table_json = false;
  table->add_option("--n", table_n, "n >= 2")->required();
  table->add_option("--mod", table_mod, "reduce the table mod this integer");
  table->add_flag("--json", table_json, "print one JSON array instead of lines");

  auto* scan = app.add_subcommand(
      "scan", "run checks over every prime in a range, streaming JSON records");
  std::uint64_t scan_from = 0, scan_to = 0;
  std::string scan_checks;
  std::optional<unsigned> scan_jobs;
  std::optional<std::string> scan_out, scan_checkpoint;
  scan->add_option("--from", scan_from, "lower bound (>= 2)")->required();
  scan->add_option("--to", scan_to, "upper bound")->required();
  scan->add_option("--checks", scan_checks,
                   "comma-separated list: wilson, wilson_converse, "
                   "wilson_prime, wolstenholme2, wolstenholme3, "
                   "wolstenholme4, p_divides_Pi, p2_divides_Pp2")
      ->required();
  scan->add_option("--jobs", scan_jobs,
                   "worker threads (default $SYMPRIME_JOBS or 1)");
  scan->add_option("--out", scan_out, "write records here instead of stdout");
  scan->add_option("--checkpoint", scan_checkpoint,
                   "checkpoint file to write, and resume from when present");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(verify_check, verify_n, verify_power);
    if (*identity) return run_identity(identity_n);
    if (*table) return run_table(table_n, table_mod, table_json);
    if (*scan) {
      return run_scan(scan_from, scan_to, scan_checks, scan_jobs, scan_out,
                      scan_checkpoint);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
