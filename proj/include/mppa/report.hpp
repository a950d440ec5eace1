#pragma once

#include "mppa/witnesses.hpp"

#include <string>
#include <vector>

namespace mppa {

struct ReportOptions {
  bool json = false;
  bool timing = false;  // elapsed times make output run-dependent
};

struct ReportContext {
  std::vector<std::string> suites;
  int truncation = 5;
  int trials = 20;
  std::uint64_t seed = 7;
};

std::string format_report(const SuiteReport& r, const ReportContext& ctx, const ReportOptions& opts);

}  // namespace mppa
