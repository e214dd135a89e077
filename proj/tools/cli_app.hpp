#pragma once

// Command-line front end. `run` is separate from main() so tests can drive
// it with captured streams.
//
// Exit codes: 0 predicate held, 1 refuting witness found, 2 search budget
// exceeded, 64 usage error, 65 malformed or invalid input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mstd/mstd.hpp"
#include "mstd/report_json.hpp"

namespace mstd::cli {

inline constexpr int kExitHeld = 0;
inline constexpr int kExitWitness = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;

inline constexpr const char* kThreadsEnv = "MSTD_THREADS";

enum class Format { Plain, Json, Spohn };

namespace detail {

using json = nlohmann::ordered_json;

struct Globals {
  Format format = Format::Plain;
  unsigned threads = 1;
  int max_discard = 8;
  int scale = 2;
  bool no_timing = false;
  bool search_small = false;
};

inline std::string render_set(const IntSet& a, Format f) {
  if (f == Format::Spohn) return format_gap_notation(a);
  return format_set_literal(a);
}

inline void emit_set(std::ostream& out, const IntSet& a, Format f) {
  if (f == Format::Json) {
    out << json{{"set", to_json(a)}}.dump() << '\n';
  } else {
    out << render_set(a, f) << '\n';
  }
}

inline void emit_verdict(std::ostream& out, const char* name,
                         const LemmaVerdict& v, Format f) {
  if (f == Format::Json) {
    json doc{{"condition", name}, {"applies", v.applies}};
    doc["guarantee"] = v.guarantee ? json("NotSumDominant") : json(nullptr);
    out << doc.dump() << '\n';
  } else if (v.applies) {
    out << name << " applies guarantee=not-sum-dominant\n";
  } else {
    out << name << " does-not-apply\n";
  }
}

inline void emit_report(std::ostream& out, const SearchReport& r,
                        const Globals& g) {
  if (g.format == Format::Json) {
    out << dump_line(r, {.include_timing = !g.no_timing}) << '\n';
    return;
  }
  out << r.search << " outcome=" << r.outcome << " examined=" << r.examined
      << " witnesses=" << r.witnesses.size() << '\n';
  for (const auto& [k, v] : r.params) out << "param " << k << '=' << v << '\n';
  for (const auto& [k, v] : r.summary) out << k << '=' << v << '\n';
  for (const auto& w : r.witnesses) {
    out << "witness " << render_set(w, g.format) << '\n';
  }
  if (!g.no_timing) out << "elapsed_s=" << r.elapsed_s << '\n';
}

inline unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  using detail::json;
  detail::Globals g;
  g.threads = detail::default_threads();

  CLI::App app{"Sum-dominant set toolkit", "mstd"};
  app.require_subcommand(1);
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "spohn"}));
  app.add_option("--threads", g.threads, "Search worker count")
      ->check(CLI::Range(1U, 1024U));
  app.add_option("--max-discard", g.max_discard,
                 "Largest discard count for `search largest`")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--scale", g.scale,
                 "Grid refinement for progression scans")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", g.no_timing,
               "Write elapsed_s as 0 for reproducible output");
  app.add_flag("--search-small", g.search_small,
               "Resolve 24 <= r <= 26 in `search partition3` exhaustively");

  // The selected action runs after parsing, once globals are known.
  std::function<int()> action;
  const auto sub = [](CLI::App* parent, const std::string& name,
                      const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string text_a, text_b;
  Element int_a = 0, int_b = 0, int_c = 0;
  std::optional<Element> opt_int;
  std::optional<std::string> m1_text, m2_text;

  auto* classify_cmd = sub(&app, "classify", "Classify a set");
  classify_cmd->add_option("SET", text_a)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const auto c = classify(parse_any_set(text_a));
      if (g.format == Format::Json) {
        out << to_json(c).dump() << '\n';
      } else {
        out << to_string(c.kind) << " excess=" << c.excess << '\n';
      }
      return kExitHeld;
    };
  });

  auto* sumset_cmd = sub(&app, "sumset", "Print A+A");
  sumset_cmd->add_option("SET", text_a)->required();
  sumset_cmd->callback([&] {
    action = [&] {
      detail::emit_set(out, sumset(parse_any_set(text_a)), g.format);
      return kExitHeld;
    };
  });

  auto* diffset_cmd = sub(&app, "diffset", "Print the magnitudes of A-A");
  diffset_cmd->add_option("SET", text_a)->required();
  diffset_cmd->callback([&] {
    action = [&] {
      const auto d = diffset(parse_any_set(text_a));
      if (g.format == Format::Json) {
        out << json{{"magnitudes", to_json(d.magnitudes)},
                    {"cardinality", d.cardinality}}
                   .dump()
            << '\n';
      } else {
        out << "magnitudes=" << detail::render_set(d.magnitudes, g.format)
            << " cardinality=" << d.cardinality << '\n';
      }
      return kExitHeld;
    };
  });

  auto* spohn_cmd = sub(&app, "spohn", "Gap notation");
  spohn_cmd->require_subcommand(1);
  auto* spohn_parse = sub(spohn_cmd, "parse", "Gap notation to set");
  spohn_parse->add_option("TEXT", text_a)->required();
  spohn_parse->callback([&] {
    action = [&] {
      const auto gn = parse_gap_notation(text_a);
      const auto set = gn.to_set();
      if (g.format == Format::Json) {
        out << json{{"set", to_json(set)},
                    {"origin", gn.origin},
                    {"gaps", gn.gaps}}
                   .dump()
            << '\n';
      } else {
        out << detail::render_set(set, g.format) << '\n';
      }
      return kExitHeld;
    };
  });
  auto* spohn_format = sub(spohn_cmd, "format", "Set to gap notation");
  spohn_format->add_option("SET", text_a)->required();
  spohn_format->callback([&] {
    action = [&] {
      const auto s = format_gap_notation(parse_any_set(text_a));
      if (g.format == Format::Json) {
        out << json{{"spohn", s}}.dump() << '\n';
      } else {
        out << s << '\n';
      }
      return kExitHeld;
    };
  });

  auto* lemma_cmd = sub(&app, "lemma", "Check sufficient conditions");
  lemma_cmd->require_subcommand(1);
  auto* ms1 = sub(lemma_cmd, "ms1", "All gaps at most 2");
  ms1->add_option("SET", text_a)->required();
  ms1->callback([&] {
    action = [&] {
      detail::emit_verdict(out, "ms1", ms_condition1(parse_any_set(text_a)),
                           g.format);
      return kExitHeld;
    };
  });
  auto* ms2 = sub(lemma_cmd, "ms2", "Gaps in {1,m} with long end runs");
  ms2->add_option("SET", text_a)->required();
  ms2->add_option("M", opt_int, "Large gap; inferred when omitted");
  ms2->callback([&] {
    action = [&] {
      const auto set = parse_any_set(text_a);
      std::optional<Element> m = opt_int;
      if (!m) m = infer_ms_parameter(set);
      // No gap other than 1: the set is an AP and condition 2 holds for m=2.
      const auto v = ms_condition2(set, m.value_or(2));
      detail::emit_verdict(out, "ms2", v, g.format);
      return kExitHeld;
    };
  });
  auto* extend = sub(lemma_cmd, "extend", "New sums from adding a point");
  extend->add_option("SET", text_a)->required();
  extend->add_option("POINT", int_a)->required();
  extend->callback([&] {
    action = [&] {
      const auto n = new_sums_on_extend(parse_any_set(text_a), int_a);
      if (g.format == Format::Json) {
        out << json{{"new_sums", n}}.dump() << '\n';
      } else {
        out << "new_sums=" << n << '\n';
      }
      return kExitHeld;
    };
  });

  auto* construct_cmd = sub(&app, "construct", "Generate a set family member");
  construct_cmd->require_subcommand(1);
  auto* kset = sub(construct_cmd, "kset", "K(m), m >= 9");
  kset->add_option("M", int_a)->required();
  kset->callback([&] {
    action = [&] {
      detail::emit_set(out, k_set(int_a), g.format);
      return kExitHeld;
    };
  });
  auto* nathanson = sub(construct_cmd, "nathanson", "Three-AP family, k >= 5");
  nathanson->add_option("K", int_a)->required();
  nathanson->callback([&] {
    action = [&] {
      detail::emit_set(out, nathanson_set(int_a), g.format);
      return kExitHeld;
    };
  });
  auto* ap_cmd = sub(construct_cmd, "ap", "Arithmetic progression");
  ap_cmd->add_option("A", int_a)->required();
  ap_cmd->add_option("D", int_b)->required();
  ap_cmd->add_option("LEN", int_c)->required();
  ap_cmd->callback([&] {
    action = [&] {
      detail::emit_set(out, ap(int_a, int_b, int_c), g.format);
      return kExitHeld;
    };
  });
  auto* part = sub(construct_cmd, "partition3",
                   "Three sum-dominant parts of {1..124+m}");
  part->add_option("M", int_a)->required();
  part->add_option("--m1", m1_text, "M1 block (defaults per m)");
  part->add_option("--m2", m2_text, "M2 block (defaults per m)");
  part->callback([&] {
    action = [&] {
      Partition3Spec spec = default_blocks(int_a);
      if (m1_text || m2_text) {
        if (!m1_text || !m2_text) {
          throw Error(ErrorCode::InvalidParameter,
                      "--m1 and --m2 must be given together");
        }
        spec.m1 = parse_any_set(*m1_text);
        spec.m2 = parse_any_set(*m2_text);
      }
      const auto r = partition3(spec);
      const IntSet* parts[] = {&r.a1, &r.a2, &r.s};
      const char* names[] = {"a1", "a2", "s"};
      if (g.format == Format::Json) {
        json doc{{"m", spec.m}, {"span", r.span}};
        auto excess = json::array();
        for (int i = 0; i < 3; ++i) {
          doc[names[i]] = to_json(*parts[i]);
          excess.push_back(classify(*parts[i]).excess);
        }
        doc["excess"] = excess;
        out << doc.dump() << '\n';
      } else {
        for (int i = 0; i < 3; ++i) {
          out << names[i] << ' ' << detail::render_set(*parts[i], g.format)
              << " excess=" << classify(*parts[i]).excess << '\n';
        }
      }
      return kExitHeld;
    };
  });

  auto* search_cmd = sub(&app, "search", "Exhaustive searches");
  search_cmd->require_subcommand(1);
  auto* largest = sub(search_cmd, "largest",
                      "Largest sum-dominant subset of {0..N-1} with both ends");
  largest->add_option("N", int_a)->required();
  largest->callback([&] {
    action = [&] {
      const int n = static_cast<int>(int_a);
      try {
        const auto res = largest_subset(
            n, {.max_discard = g.max_discard, .threads = g.threads});
        detail::emit_report(out, res.report, g);
        if (n >= 16 && (!res.n_value || *res.n_value < n - 7 ||
                        *res.n_value > n - 4)) {
          return kExitWitness;
        }
        return kExitHeld;
      } catch (const BudgetExceededError& e) {
        detail::emit_report(out, e.partial(), g);
        err << "error: " << e.what() << '\n';
        return kExitBudget;
      }
    };
  });
  auto* minsize = sub(search_cmd, "minsize",
                      "Sum-dominant sets of at most 8 elements by diameter");
  minsize->add_option("DIAM", int_a)->required();
  minsize->callback([&] {
    action = [&] {
      const auto rep =
          min_size_scan(static_cast<int>(int_a), {.threads = g.threads});
      detail::emit_report(out, rep, g);
      return rep.outcome == "witness" ? kExitWitness : kExitHeld;
    };
  });
  auto* appairs = sub(search_cmd, "appairs",
                      "Unions of two APs with a common difference");
  appairs->add_option("SPAN", int_a)->required();
  appairs->add_option("DIFF", int_b)->required();
  appairs->callback([&] {
    action = [&] {
      const auto rep = ap_pair_scan(int_a, int_b,
                                    {.scale = g.scale, .threads = g.threads});
      detail::emit_report(out, rep, g);
      return rep.witnesses.empty() ? kExitHeld : kExitWitness;
    };
  });
  auto* twoap = sub(search_cmd, "twoap", "Unions of two arbitrary APs");
  twoap->add_option("SPAN", int_a)->required();
  twoap->add_option("DIFF", int_b)->required();
  twoap->callback([&] {
    action = [&] {
      const auto rep = two_ap_general_scan(
          int_a, int_b, {.scale = g.scale, .threads = g.threads});
      detail::emit_report(out, rep, g);
      return rep.witnesses.empty() ? kExitHeld : kExitWitness;
    };
  });
  auto* p3 = sub(search_cmd, "partition3",
                 "Can {1..R} split into three sum-dominant sets?");
  p3->add_option("R", int_a)->required();
  p3->callback([&] {
    action = [&] {
      const int r = static_cast<int>(int_a);
      const auto res = partition3_feasible(
          r, {.search_small = g.search_small, .threads = g.threads});
      detail::emit_report(out, res.report, g);
      if (g.format != Format::Json) out << "reason=" << res.reason << '\n';
      return kExitHeld;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHeld;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  if (format_name == "json") g.format = Format::Json;
  if (format_name == "spohn") g.format = Format::Spohn;
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace mstd::cli
