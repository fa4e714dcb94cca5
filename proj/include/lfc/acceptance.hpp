#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lfc/io.hpp"

namespace lfc {

enum class SuiteSize { full, tiny };

struct AcceptanceOptions {
  std::uint64_t seed = 20240615;
  SuiteSize sizes = SuiteSize::full;
  /// Replaces named fixtures (maximal simplices over vertex indices); used to
  /// check that a corrupted catalog is caught.
  std::map<std::string, std::vector<std::vector<std::uint32_t>>> fixture_overrides;
  /// Progress messages (corpus position, timings); may be empty.
  std::function<void(const std::string&)> progress;
};

struct CriterionResult {
  std::string id;    // "1" .. "10", or "fixtures" for the catalog check
  std::string name;
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;  // first few
  double seconds = 0;

  void fail(std::string message);
};

struct AcceptanceReport {
  std::uint64_t seed = 0;
  SuiteSize sizes = SuiteSize::full;
  std::vector<CriterionResult> results;  // catalog check first, then 1..10
  double seconds = 0;

  bool passed() const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  criterion 4  homology preservation: ..." and follow-up failure lines.
std::string format_result(const CriterionResult& r);
Json report_to_json(const AcceptanceReport& report);

}  // namespace lfc
