#pragma once

// Aggregated JSON report over every module, plus a plain-text rendering.

#include <string>
#include <vector>

#include "toricfrob/fan.hpp"

namespace toricfrob {

struct ReportOptions {
  unsigned p = 2;
  std::vector<unsigned> e_list{1, 2, 3};
  bool checks = true;
  bool oracles = true;  // trace kernel counts for each e
  bool timing = false;  // wall-clock sections make the output nondeterministic
};

/// Deterministic JSON document (2-space indent) unless timing is requested.
std::string run_report(const Fan& fan, const ReportOptions& options = {});

/// Human-readable rendering of a run_report document.
std::string render_text(const std::string& report_json);

}  // namespace toricfrob
