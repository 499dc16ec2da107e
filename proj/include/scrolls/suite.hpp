#pragma once

#include <functional>

#include "scrolls/report.hpp"
#include "scrolls/groebner.hpp"

namespace scrolls {

enum class SuiteLevel { Smoke, Paper, Stretch };

SuiteLevel suite_level_parse(std::string_view text);

/// One independently runnable verification job. Jobs sharing a criterion
/// number together implement that acceptance criterion.
struct SuiteJob {
  std::string id;
  int criterion = 0;  // 0 = not part of the gating set
  std::function<Report(const Budget&)> run;
};

std::vector<SuiteJob> suite_jobs(SuiteLevel level);

/// Gating criteria with their wall-clock limits (seconds). A per-job
/// limit of 0 means only the total is constrained.
struct CriterionInfo {
  int number;
  std::string description;
  double total_seconds;
  double per_job_seconds;
};

std::vector<CriterionInfo> criterion_infos();

/// Runs jobs concurrently up to `parallel_jobs` (0 = library default)
/// and merges their reports in catalog order.
Report run_jobs(const std::vector<SuiteJob>& jobs, const Budget& budget, int parallel_jobs = 0);

}  // namespace scrolls
