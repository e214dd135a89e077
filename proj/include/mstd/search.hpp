#pragma once

// Exhaustive search drivers. Every driver splits its candidate space into
// contiguous index ranges (see parallel.hpp), so reports are identical for
// any worker count. Witness lists are sorted lexicographically.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mstd/combinatorics.hpp"
#include "mstd/constructions.hpp"
#include "mstd/error.hpp"
#include "mstd/int_set.hpp"
#include "mstd/kernel.hpp"
#include "mstd/parallel.hpp"
#include "mstd/sets.hpp"

namespace mstd {

struct SearchReport {
  std::string search;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::uint64_t examined = 0;
  std::vector<IntSet> witnesses;
  /// Short verdict, e.g. "held", "witness", "absent", "feasible".
  std::string outcome;
  /// Search-specific extra figures (per-level counts, N, ...).
  std::vector<std::pair<std::string, std::int64_t>> summary;
  double elapsed_s = 0.0;
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(SearchReport partial)
      : Error(ErrorCode::BudgetExceeded,
              "search budget exceeded after " +
                  std::to_string(partial.examined) + " candidates"),
        partial_(std::move(partial)) {}

  const SearchReport& partial() const noexcept { return partial_; }

 private:
  SearchReport partial_;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct Hits {
  std::uint64_t examined = 0;
  std::vector<IntSet> witnesses;
};

inline void merge_hits(Hits& into, Hits&& from) {
  into.examined += from.examined;
  into.witnesses.insert(into.witnesses.end(),
                        std::make_move_iterator(from.witnesses.begin()),
                        std::make_move_iterator(from.witnesses.end()));
}

inline void sort_unique(std::vector<IntSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <std::size_t W>
inline bool sum_dominant(const kernel::SmallBits<W>& bits) {
  return kernel::count(bits).excess() > 0;
}

template <std::size_t W>
inline IntSet to_set(const kernel::SmallBits<W>& bits) {
  return IntSet::from_bits(bits.words);
}

/// Picks a fixed bit width able to hold `max_element`.
template <typename F>
inline void dispatch_width(std::size_t max_element, F&& f) {
  if (kernel::with_width(max_element, f)) return;
  if (max_element < 512) {
    f(std::integral_constant<std::size_t, 8>{});
    return;
  }
  if (max_element < 1024) {
    f(std::integral_constant<std::size_t, 16>{});
    return;
  }
  throw Error(ErrorCode::InvalidParameter,
              "search universe too large (max element " +
                  std::to_string(max_element) + ")");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Largest sum-dominant subsets of {0, ..., n-1} containing 0 and n-1.

struct DiscardLevel {
  int discard = 0;
  std::uint64_t examined = 0;
  std::uint64_t witnesses = 0;
};

struct LargestSubsetResult {
  int n = 0;
  std::optional<int> n_value;
  /// Lexicographically smallest witness at the first successful level.
  std::optional<IntSet> witness;
  /// Every witness at that level.
  std::vector<IntSet> all_witnesses;
  std::vector<DiscardLevel> levels;
  SearchReport report;
};

struct LargestSubsetOptions {
  /// Largest discard count the caller accepts; the search must either hit a
  /// witness by then or have exhausted every discard count.
  int max_discard = 8;
  unsigned threads = 1;
};

namespace detail {

inline Hits scan_discard_level(int n, int discard, unsigned threads) {
  const int interior = n - 2;
  const std::uint64_t total = comb::binomial(interior, discard);
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return parallel::map_reduce<Hits>(
      total, threads,
      [&](parallel::Range range) {
        Hits h;
        auto c = comb::unrank_combination(interior, discard, range.begin);
        for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
          kernel::SmallBits<1> bits;
          std::uint64_t removed = 0;
          for (int x : c) removed |= std::uint64_t{1} << (x + 1);
          bits.words[0] = full & ~removed;
          ++h.examined;
          if (sum_dominant(bits)) h.witnesses.push_back(to_set(bits));
          comb::next_combination(c, interior);
        }
        return h;
      },
      merge_hits);
}

}  // namespace detail

inline LargestSubsetResult largest_subset(int n,
                                          const LargestSubsetOptions& opt = {}) {
  if (n < 2 || n > 64) {
    throw Error(ErrorCode::InvalidParameter,
                "largest_subset needs 2 <= n <= 64, got " + std::to_string(n));
  }
  if (opt.max_discard < 0) {
    throw Error(ErrorCode::InvalidParameter, "max_discard must be >= 0");
  }
  detail::Stopwatch clock;
  LargestSubsetResult res;
  res.n = n;
  SearchReport& rep = res.report;
  rep.search = "largest";
  rep.params = {{"n", n}, {"max_discard", opt.max_discard}};

  const int last_level = std::min(opt.max_discard, n - 2);
  for (int d = 0; d <= last_level; ++d) {
    auto hits = detail::scan_discard_level(n, d, opt.threads);
    rep.examined += hits.examined;
    res.levels.push_back({d, hits.examined, hits.witnesses.size()});
    rep.summary.emplace_back("level_" + std::to_string(d) + "_witnesses",
                             static_cast<std::int64_t>(hits.witnesses.size()));
    if (!hits.witnesses.empty()) {
      detail::sort_unique(hits.witnesses);
      res.n_value = n - d;
      res.witness = hits.witnesses.front();
      res.all_witnesses = std::move(hits.witnesses);
      rep.witnesses = res.all_witnesses;
      rep.outcome = "found";
      rep.summary.emplace_back("n_value", n - d);
      rep.elapsed_s = clock.seconds();
      return res;
    }
  }
  rep.elapsed_s = clock.seconds();
  if (last_level < n - 2) {
    rep.outcome = "budget-exceeded";
    throw BudgetExceededError(rep);
  }
  rep.outcome = "absent";
  return res;
}

// ---------------------------------------------------------------------------
// Smallest sum-dominant sets by diameter.

struct MinSizeOptions {
  int max_card = 8;
  unsigned threads = 1;
};

/// Every set containing 0 and D (1 <= D <= max_diameter) with at most
/// `max_card` elements; witnesses are the sum-dominant ones.
inline SearchReport min_size_scan(int max_diameter,
                                  const MinSizeOptions& opt = {}) {
  if (max_diameter < 1 || max_diameter > 63) {
    throw Error(ErrorCode::InvalidParameter,
                "min_size_scan needs 1 <= max_diameter <= 63");
  }
  if (opt.max_card < 2) {
    throw Error(ErrorCode::InvalidParameter, "max_card must be >= 2");
  }
  detail::Stopwatch clock;
  SearchReport rep;
  rep.search = "minsize";
  rep.params = {{"max_diameter", max_diameter}, {"max_card", opt.max_card}};

  detail::Hits all;
  for (int diam = 1; diam <= max_diameter; ++diam) {
    const int interior = diam - 1;
    for (int k = 0; k <= std::min(opt.max_card - 2, interior); ++k) {
      const std::uint64_t total = comb::binomial(interior, k);
      auto hits = parallel::map_reduce<detail::Hits>(
          total, opt.threads,
          [&](parallel::Range range) {
            detail::Hits h;
            auto c = comb::unrank_combination(interior, k, range.begin);
            for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
              kernel::SmallBits<1> bits;
              bits.set(0);
              bits.set(static_cast<std::size_t>(diam));
              for (int x : c) bits.set(static_cast<std::size_t>(x + 1));
              ++h.examined;
              if (detail::sum_dominant(bits)) {
                h.witnesses.push_back(detail::to_set(bits));
              }
              comb::next_combination(c, interior);
            }
            return h;
          },
          detail::merge_hits);
      detail::merge_hits(all, std::move(hits));
    }
  }
  detail::sort_unique(all.witnesses);
  rep.examined = all.examined;
  rep.witnesses = std::move(all.witnesses);

  std::int64_t smallest = 0;
  for (const auto& w : rep.witnesses) {
    const auto card = static_cast<std::int64_t>(w.size());
    if (smallest == 0 || card < smallest) smallest = card;
  }
  for (int card = 2; card <= opt.max_card; ++card) {
    const auto n = std::count_if(
        rep.witnesses.begin(), rep.witnesses.end(),
        [&](const IntSet& w) { return static_cast<int>(w.size()) == card; });
    rep.summary.emplace_back("witnesses_card_" + std::to_string(card), n);
  }
  rep.summary.emplace_back("smallest_witness_card", smallest);
  rep.outcome = (smallest != 0 && smallest <= 7) ? "witness" : "held";
  rep.elapsed_s = clock.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Unions of two arithmetic progressions.

struct ApScanOptions {
  /// Grid refinement: the second progression is also offset by r/scale of
  /// a step for r = 1, ..., scale-1 (realized on the scaled integer grid).
  int scale = 2;
  unsigned threads = 1;
};

/// Number of progressions with difference d inside {0, ..., span}.
inline std::uint64_t progressions_in_span(std::int64_t span, std::int64_t d) {
  std::uint64_t n = 0;
  for (std::int64_t len = 1; (len - 1) * d <= span; ++len) {
    n += static_cast<std::uint64_t>(span - (len - 1) * d + 1);
  }
  return n;
}

namespace detail {

struct Progression {
  std::int64_t start, diff, len;
};

inline std::vector<Progression> progressions(std::int64_t span,
                                             std::int64_t d) {
  std::vector<Progression> out;
  for (std::int64_t len = 1; (len - 1) * d <= span; ++len)
    for (std::int64_t a = 0; a + (len - 1) * d <= span; ++a)
      out.push_back({a, d, len});
  return out;
}

// Ordered pairs (P1, P2) from `first` x `second`, each scaled by `scale`
// with P2 shifted by r in [0, scale).
inline Hits scan_progression_pairs(const std::vector<Progression>& first,
                                   const std::vector<Progression>& second,
                                   std::int64_t span, int scale,
                                   unsigned threads) {
  const std::uint64_t n1 = first.size(), n2 = second.size();
  const std::uint64_t total = static_cast<std::uint64_t>(scale) * n1 * n2;
  const auto max_element = static_cast<std::size_t>(scale * span + scale - 1);
  Hits out;
  dispatch_width(max_element, [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    out = parallel::map_reduce<Hits>(
        total, threads,
        [&](parallel::Range range) {
          Hits h;
          for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
            const std::uint64_t r = idx / (n1 * n2);
            const auto& p = first[(idx / n2) % n1];
            const auto& q = second[idx % n2];
            kernel::SmallBits<W> bits;
            for (std::int64_t t = 0; t < p.len; ++t)
              bits.set(static_cast<std::size_t>(scale * (p.start + t * p.diff)));
            for (std::int64_t t = 0; t < q.len; ++t)
              bits.set(static_cast<std::size_t>(
                  scale * (q.start + t * q.diff) + static_cast<std::int64_t>(r)));
            ++h.examined;
            if (sum_dominant(bits)) h.witnesses.push_back(to_set(bits));
          }
          return h;
        },
        merge_hits);
  });
  return out;
}

inline void check_scan_bounds(std::int64_t span, std::int64_t max_diff,
                              int scale) {
  if (span < 1 || max_diff < 1 || scale < 1) {
    throw Error(ErrorCode::InvalidParameter,
                "scan bounds and scale must be >= 1");
  }
}

}  // namespace detail

/// Pairs of progressions sharing a common difference d <= max_diff, both
/// inside {0, ..., max_span}. Witnesses are sum-dominant unions.
inline SearchReport ap_pair_scan(std::int64_t max_span, std::int64_t max_diff,
                                 const ApScanOptions& opt = {}) {
  detail::check_scan_bounds(max_span, max_diff, opt.scale);
  detail::Stopwatch clock;
  SearchReport rep;
  rep.search = "appairs";
  rep.params = {
      {"max_span", max_span}, {"max_diff", max_diff}, {"scale", opt.scale}};
  detail::Hits all;
  for (std::int64_t d = 1; d <= max_diff; ++d) {
    const auto aps = detail::progressions(max_span, d);
    auto hits = detail::scan_progression_pairs(aps, aps, max_span, opt.scale,
                                               opt.threads);
    rep.summary.emplace_back("examined_diff_" + std::to_string(d),
                             static_cast<std::int64_t>(hits.examined));
    detail::merge_hits(all, std::move(hits));
  }
  detail::sort_unique(all.witnesses);
  rep.examined = all.examined;
  rep.witnesses = std::move(all.witnesses);
  rep.outcome = rep.witnesses.empty() ? "held" : "witness";
  rep.elapsed_s = clock.seconds();
  return rep;
}

/// As ap_pair_scan, but the two differences range independently.
inline SearchReport two_ap_general_scan(std::int64_t max_span,
                                        std::int64_t max_diff,
                                        const ApScanOptions& opt = {}) {
  detail::check_scan_bounds(max_span, max_diff, opt.scale);
  detail::Stopwatch clock;
  SearchReport rep;
  rep.search = "twoap";
  rep.params = {
      {"max_span", max_span}, {"max_diff", max_diff}, {"scale", opt.scale}};
  std::vector<detail::Progression> aps;
  for (std::int64_t d = 1; d <= max_diff; ++d) {
    const auto some = detail::progressions(max_span, d);
    aps.insert(aps.end(), some.begin(), some.end());
  }
  auto hits = detail::scan_progression_pairs(aps, aps, max_span, opt.scale,
                                             opt.threads);
  detail::sort_unique(hits.witnesses);
  rep.examined = hits.examined;
  rep.witnesses = std::move(hits.witnesses);
  rep.outcome = rep.witnesses.empty() ? "held" : "witness";
  rep.elapsed_s = clock.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Partitions of {1, ..., r} into three sum-dominant parts.

enum class Feasibility { Infeasible, Feasible, Unknown };

inline const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Unknown: return "unknown";
  }
  return "unknown";
}

struct Partition3Feasibility {
  Feasibility status = Feasibility::Unknown;
  std::string reason;
  /// The three parts when feasible.
  std::vector<IntSet> parts;
  SearchReport report;
};

struct Partition3FeasibleOptions {
  /// Resolve 24 <= r <= kMaxSearchR by exhaustive search.
  bool search_small = false;
  unsigned threads = 1;
};

/// Largest r the exhaustive partition search accepts.
inline constexpr int kMaxPartitionSearchR = 26;

/// Smallest possible size of a sum-dominant set.
inline constexpr int kMinSumDominantCard = 8;

namespace detail {

// First (A, B, C) in lexicographic order of A then B, where A holds 1,
// B holds min({1..r} \ A), and all three are sum-dominant.
inline std::optional<std::vector<IntSet>> search_partition3(
    int r, unsigned threads, std::uint64_t& examined) {
  const int k = kMinSumDominantCard;
  const std::uint64_t everything = (std::uint64_t{1} << (r + 1)) - 2;
  std::optional<std::vector<IntSet>> found;
  for (int size_a = k; size_a <= r - 2 * k && !found; ++size_a) {
    // Choose size_a - 1 further elements from {2, ..., r}.
    const int pool = r - 1;
    const std::uint64_t total = comb::binomial(pool, size_a - 1);
    struct Acc {
      std::uint64_t examined = 0;
      std::optional<std::vector<IntSet>> first;
    };
    auto acc = parallel::map_reduce<Acc>(
        total, threads,
        [&](parallel::Range range) {
          Acc out;
          auto c = comb::unrank_combination(pool, size_a - 1, range.begin);
          for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
            kernel::SmallBits<1> a;
            a.set(1);
            for (int x : c) a.set(static_cast<std::size_t>(x + 2));
            comb::next_combination(c, pool);
            ++out.examined;
            if (out.first || !sum_dominant(a)) continue;

            const std::uint64_t rest = everything & ~a.words[0];
            const int low = std::countr_zero(rest);
            std::vector<int> others;
            for (int x = low + 1; x <= r; ++x)
              if ((rest >> x) & 1U) others.push_back(x);
            const int rest_size = static_cast<int>(others.size()) + 1;
            for (int size_b = k; size_b <= rest_size - k && !out.first;
                 ++size_b) {
              std::vector<int> cb(static_cast<std::size_t>(size_b - 1));
              for (int i = 0; i < size_b - 1; ++i) cb[i] = i;
              do {
                kernel::SmallBits<1> b;
                b.set(static_cast<std::size_t>(low));
                for (int i : cb) b.set(static_cast<std::size_t>(others[i]));
                kernel::SmallBits<1> cpart;
                cpart.words[0] = rest & ~b.words[0];
                if (sum_dominant(b) && sum_dominant(cpart)) {
                  out.first = std::vector<IntSet>{to_set(a), to_set(b),
                                                  to_set(cpart)};
                  break;
                }
              } while (comb::next_combination(
                  cb, static_cast<int>(others.size())));
            }
          }
          return out;
        },
        [](Acc& into, Acc&& from) {
          into.examined += from.examined;
          if (!into.first && from.first) into.first = std::move(from.first);
        });
    examined += acc.examined;
    found = std::move(acc.first);
  }
  return found;
}

}  // namespace detail

inline Partition3Feasibility partition3_feasible(
    int r, const Partition3FeasibleOptions& opt = {}) {
  if (r < 1) throw Error(ErrorCode::InvalidParameter, "r must be >= 1");
  detail::Stopwatch clock;
  Partition3Feasibility out;
  SearchReport& rep = out.report;
  rep.search = "partition3";
  rep.params = {{"r", r}, {"search_small", opt.search_small ? 1 : 0}};

  const auto finish = [&](Feasibility status, std::string reason) {
    out.status = status;
    out.reason = std::move(reason);
    rep.witnesses = out.parts;
    rep.outcome = to_string(status);
    rep.elapsed_s = clock.seconds();
    return out;
  };

  if (r < 3 * kMinSumDominantCard) {
    return finish(Feasibility::Infeasible,
                  "3x8 > " + std::to_string(r) +
                      ": each sum-dominant part needs at least 8 elements");
  }
  if (r >= 124 + partition_blocks::kMinM) {
    const Element m = r - 124;
    const auto parts = partition3(default_blocks(m));
    rep.examined = 3;
    for (const IntSet* p : {&parts.a1, &parts.a2, &parts.s}) {
      if (classify(*p).kind != Kind::SumDominant) {
        return finish(Feasibility::Unknown,
                      "construction part is not sum-dominant");
      }
    }
    out.parts = {parts.a1, parts.a2, parts.s};
    return finish(Feasibility::Feasible,
                  "three-block construction with m = " + std::to_string(m));
  }
  if (opt.search_small && r <= kMaxPartitionSearchR) {
    auto found = detail::search_partition3(r, opt.threads, rep.examined);
    if (found) {
      out.parts = std::move(*found);
      return finish(Feasibility::Feasible, "exhaustive search");
    }
    return finish(Feasibility::Infeasible,
                  "exhaustive search found no partition");
  }
  return finish(Feasibility::Unknown,
                "no construction for r = " + std::to_string(r));
}

}  // namespace mstd
