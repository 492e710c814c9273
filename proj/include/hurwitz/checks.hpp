#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hurwitz {

/// One verified fact: expected vs computed rendering plus a verdict.
struct ReportItem {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// A bundle of verified facts.
struct Report {
  std::string bundle;
  std::vector<ReportItem> items;

  bool pass() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Names of the available verification bundles, in canonical order.
const std::vector<std::string>& check_names();

/// Runs one named bundle.  `max_n` bounds the degrees used for the
/// factorization-count cross-checks; `override_bound` lifts the oracle's
/// resource limit.  Throws UnknownLabel for an unknown bundle name.
Report run_check(const std::string& name, int max_n = 6,
                 bool override_bound = false);

/// Runs every bundle and concatenates the items.
std::vector<Report> run_all(int max_n = 6, bool override_bound = false);

}  // namespace hurwitz
