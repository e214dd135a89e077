#pragma once

// Line-oriented JSON for search reports:
// {"search": name, "params": {...}, "examined": int, "witnesses": [[ints]],
//  "elapsed_s": float, ...}

#include <string>

#include <nlohmann/json.hpp>

#include "mstd/int_set.hpp"
#include "mstd/search.hpp"
#include "mstd/sets.hpp"

namespace mstd {

struct JsonOptions {
  /// When false, elapsed_s is written as 0 so documents compare bytewise.
  bool include_timing = true;
};

inline nlohmann::ordered_json to_json(const IntSet& a) {
  auto arr = nlohmann::ordered_json::array();
  for (Element x : a) arr.push_back(x);
  return arr;
}

inline nlohmann::ordered_json to_json(const Classification& c) {
  return {{"kind", to_string(c.kind)},
          {"sum_card", c.sum_card},
          {"diff_card", c.diff_card},
          {"excess", c.excess}};
}

inline nlohmann::ordered_json to_json(const SearchReport& r,
                                      const JsonOptions& opt = {}) {
  nlohmann::ordered_json doc;
  doc["search"] = r.search;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  doc["params"] = params;
  doc["examined"] = r.examined;
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  doc["witnesses"] = witnesses;
  doc["elapsed_s"] = opt.include_timing ? r.elapsed_s : 0.0;
  doc["outcome"] = r.outcome;
  auto summary = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  doc["summary"] = summary;
  return doc;
}

inline std::string dump_line(const SearchReport& r,
                             const JsonOptions& opt = {}) {
  return to_json(r, opt).dump();
}

}  // namespace mstd
