#pragma once

// Deterministic data-parallel driver. The index space [0, count) is cut into
// contiguous ranges whose boundaries depend only on `count`; workers claim
// ranges dynamically and the per-range results are merged in range order,
// so the output never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mstd::parallel {

struct Range {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

inline std::vector<Range> split(std::uint64_t count,
                                std::uint64_t max_ranges = 256,
                                std::uint64_t min_range = 1024) {
  std::vector<Range> out;
  if (count == 0) return out;
  std::uint64_t pieces = std::max<std::uint64_t>(1, count / min_range);
  pieces = std::min(pieces, max_ranges);
  const std::uint64_t base = count / pieces, extra = count % pieces;
  std::uint64_t at = 0;
  for (std::uint64_t i = 0; i < pieces; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

/// Runs `process(Range) -> Acc` over every range with `threads` workers and
/// folds the results left to right with `merge(Acc&, Acc&&)`.
template <typename Acc, typename Process, typename Merge>
Acc map_reduce(std::uint64_t count, unsigned threads, Process process,
               Merge merge) {
  const auto ranges = split(count);
  std::vector<Acc> partial(ranges.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ranges.size()) return;
      try {
        partial[i] = process(ranges[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(ranges.size());
        return;
      }
    }
  };

  threads = std::max(1U, threads);
  if (threads == 1 || ranges.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(threads, ranges.size());
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Acc out{};
  for (auto& p : partial) merge(out, std::move(p));
  return out;
}

}  // namespace mstd::parallel
