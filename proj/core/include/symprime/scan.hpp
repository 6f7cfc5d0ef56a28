#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symprime/verdict.hpp"

namespace symprime {

struct VerdictCounts {
  std::uint64_t pass = 0;  // outcome the statement predicts
  std::uint64_t fail = 0;  // counterexample, or a search hit

  bool operator==(const VerdictCounts&) const = default;
};

/// Durable state of one range scan. A resumed scan continues after
/// last_completed and, run to completion, reproduces the counts, findings
/// and report stream of an uninterrupted run exactly.
struct ScanCheckpoint {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::vector<CheckKind> checks;  // canonical order, deduplicated
  std::uint64_t last_completed = 0;
  std::map<CheckKind, VerdictCounts> counts;
  std::vector<Verdict> findings;
  std::uint64_t report_offset = 0;  // bytes of report stream already durable

  bool complete() const { return last_completed >= to; }
};

struct ScanOptions {
  std::uint64_t from = 2;
  std::uint64_t to = 2;
  std::vector<CheckKind> checks;
  unsigned workers = 1;
  std::optional<ScanCheckpoint> resume;

  /// Called for every verdict, in ascending subject order (checks in
  /// enumerator order within a subject) regardless of worker count.
  std::function<void(const Verdict&, bool exceptional)> emit;

  /// Called at every checkpoint, including the final one. The callee may
  /// fill report_offset before persisting. Returning false stops the scan
  /// at this checkpoint; scan_range then returns the checkpoint it was
  /// handed, suitable for a later resume.
  std::function<bool(ScanCheckpoint&)> on_checkpoint;

  /// Polled between segments; returning true forces a checkpoint-and-stop.
  std::function<bool()> stop_requested;

  // Checkpoint cadence: whichever threshold trips first.
  std::uint64_t checkpoint_primes = 1000;
  std::chrono::milliseconds checkpoint_interval{5000};
};

/// A verdict worth surfacing: a counterexample to a theorem check, a
/// disagreement between the Wilson congruence and actual primality, or a
/// hit in a wilson_prime / wolstenholme4 search.
bool verdict_exceptional(const Verdict& v, bool subject_is_prime);

/// Enumerate subjects in [from, to] (primes, plus composites for
/// wilson_converse), run every requested check, and stream verdicts through
/// opts.emit in deterministic order. Returns the final checkpoint.
ScanCheckpoint scan_range(const ScanOptions& opts);

}  // namespace symprime
