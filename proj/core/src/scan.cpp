#include "symprime/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "symprime/errors.hpp"
#include "symprime/modmath.hpp"
#include "symprime/sieve.hpp"
#include "symprime/theorems.hpp"

namespace symprime {

namespace {

constexpr std::uint64_t kSegmentWidth = 8192;

struct SegmentResult {
  std::vector<std::pair<Verdict, bool>> verdicts;  // verdict, exceptional
  std::uint64_t prime_count = 0;
  bool ready = false;
};

std::vector<CheckKind> canonical_checks(std::vector<CheckKind> checks) {
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
  return checks;
}

void run_checks_for_subject(std::uint64_t subject, bool subject_is_prime,
                            const std::vector<CheckKind>& checks,
                            SegmentResult& out) {
  std::optional<std::vector<Verdict>> divisibility;
  auto divisibility_verdicts = [&]() -> const std::vector<Verdict>& {
    if (!divisibility) divisibility = divisibility_report(subject);
    return *divisibility;
  };
  auto push = [&](Verdict v) {
    bool exceptional = verdict_exceptional(v, subject_is_prime);
    out.verdicts.emplace_back(std::move(v), exceptional);
  };

  for (CheckKind kind : checks) {
    CheckTraits traits = check_traits(kind);
    if (subject < traits.min_subject) continue;
    if (traits.primes_only && !subject_is_prime) continue;
    switch (kind) {
      case CheckKind::Wilson:
        push(wilson_check(subject));
        break;
      case CheckKind::WilsonConverse: {
        Verdict v = wilson_check(subject);
        push(make_verdict(subject, CheckKind::WilsonConverse, v.lhs, v.target));
        break;
      }
      case CheckKind::WilsonPrime:
        push(wilson_prime_check(subject));
        break;
      case CheckKind::Wolstenholme2:
        push(wolstenholme_check(subject, 2));
        break;
      case CheckKind::Wolstenholme3:
        push(wolstenholme_check(subject, 3));
        break;
      case CheckKind::Wolstenholme4:
        push(wolstenholme_check(subject, 4));
        break;
      case CheckKind::PDividesPi:
        for (const Verdict& v : divisibility_verdicts()) {
          if (v.check == CheckKind::PDividesPi) push(v);
        }
        break;
      case CheckKind::P2DividesPp2:
        for (const Verdict& v : divisibility_verdicts()) {
          if (v.check == CheckKind::P2DividesPp2) push(v);
        }
        break;
    }
  }
}

}  // namespace

bool verdict_exceptional(const Verdict& v, bool subject_is_prime) {
  switch (v.check) {
    case CheckKind::WilsonConverse:
      return v.holds != subject_is_prime;
    case CheckKind::WilsonPrime:
    case CheckKind::Wolstenholme4:
      return v.holds;
    default:
      return !v.holds;
  }
}

ScanCheckpoint scan_range(const ScanOptions& opts) {
  if (opts.from < 2) throw DomainError("scan_range: from must be >= 2");
  if (opts.from > opts.to) throw DomainError("scan_range: from must be <= to");
  std::vector<CheckKind> checks = canonical_checks(opts.checks);
  if (checks.empty()) throw DomainError("scan_range: no checks requested");

  ScanCheckpoint state;
  state.from = opts.from;
  state.to = opts.to;
  state.checks = checks;
  state.last_completed = opts.from - 1;

  if (opts.resume) {
    const ScanCheckpoint& r = *opts.resume;
    if (r.from != opts.from || r.to != opts.to ||
        canonical_checks(r.checks) != checks) {
      throw CheckpointError(
          "checkpoint does not match the requested range and checks");
    }
    if (r.complete()) return r;
    state = r;
    state.checks = checks;
  }
  for (CheckKind kind : checks) state.counts[kind];  // materialize zero rows

  const std::uint64_t start = state.last_completed + 1;
  const bool want_composites =
      std::find(checks.begin(), checks.end(), CheckKind::WilsonConverse) !=
      checks.end();
  const std::vector<std::uint64_t> base_primes =
      primes_up_to(isqrt_u64(opts.to));
  const std::size_t n_segments =
      static_cast<std::size_t>((opts.to - start) / kSegmentWidth) + 1;

  std::vector<SegmentResult> results(n_segments);
  std::atomic<std::size_t> next_segment{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable ready_cv;
  std::exception_ptr worker_error;

  auto segment_bounds = [&](std::size_t idx) {
    std::uint64_t lo = start + idx * kSegmentWidth;
    std::uint64_t hi = std::min(opts.to, lo + kSegmentWidth - 1);
    return std::pair{lo, hi};
  };

  auto worker = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      std::size_t idx = next_segment.fetch_add(1);
      if (idx >= n_segments) break;
      SegmentResult local;
      try {
        auto [lo, hi] = segment_bounds(idx);
        std::vector<char> prime_flags = sieve_segment(lo, hi, base_primes);
        for (std::uint64_t subject = lo; subject <= hi; ++subject) {
          bool subject_is_prime = prime_flags[subject - lo] != 0;
          if (subject_is_prime) ++local.prime_count;
          if (!subject_is_prime && !want_composites) continue;
          run_checks_for_subject(subject, subject_is_prime, checks, local);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!worker_error) worker_error = std::current_exception();
        stop.store(true);
        ready_cv.notify_all();
        return;
      }
      {
        std::lock_guard lock(mu);
        results[idx] = std::move(local);
        results[idx].ready = true;
      }
      ready_cv.notify_all();
    }
  };

  unsigned n_workers = std::max(1u, opts.workers);
  n_workers = static_cast<unsigned>(
      std::min<std::size_t>(n_workers, n_segments));
  std::vector<std::jthread> pool;
  pool.reserve(n_workers);
  for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);

  // Collector: consumes segments strictly in order, so emission order and
  // checkpoint contents never depend on worker scheduling.
  std::uint64_t primes_since_checkpoint = 0;
  auto last_checkpoint_time = std::chrono::steady_clock::now();
  auto checkpoint_now = [&](std::uint64_t completed) {
    state.last_completed = completed;
    bool keep_going = true;
    if (opts.on_checkpoint) keep_going = opts.on_checkpoint(state);
    primes_since_checkpoint = 0;
    last_checkpoint_time = std::chrono::steady_clock::now();
    return keep_going;
  };

  for (std::size_t idx = 0; idx < n_segments; ++idx) {
    SegmentResult segment;
    {
      std::unique_lock lock(mu);
      ready_cv.wait(lock, [&] {
        return results[idx].ready || worker_error != nullptr;
      });
      if (worker_error) {
        stop.store(true);
        std::exception_ptr err = worker_error;
        lock.unlock();
        pool.clear();  // join
        std::rethrow_exception(err);
      }
      segment = std::move(results[idx]);
    }
    for (const auto& [verdict, exceptional] : segment.verdicts) {
      if (exceptional) {
        ++state.counts[verdict.check].fail;
        state.findings.push_back(verdict);
      } else {
        ++state.counts[verdict.check].pass;
      }
      if (opts.emit) opts.emit(verdict, exceptional);
    }
    primes_since_checkpoint += segment.prime_count;

    std::uint64_t hi = segment_bounds(idx).second;
    bool external_stop = opts.stop_requested && opts.stop_requested();
    bool cadence_hit =
        primes_since_checkpoint >= opts.checkpoint_primes ||
        std::chrono::steady_clock::now() - last_checkpoint_time >=
            opts.checkpoint_interval;
    if (hi < opts.to && (external_stop || cadence_hit)) {
      bool keep_going = checkpoint_now(hi);
      if (external_stop || !keep_going) {
        stop.store(true);
        return state;  // jthreads join on scope exit
      }
    }
  }

  checkpoint_now(opts.to);
  return state;
}

}  // namespace symprime
