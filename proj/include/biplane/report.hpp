#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "biplane/sieve.hpp"

namespace biplane {

struct ReportRow {
  unsigned case_number = 0u;
  std::string group;
  std::string stabilizer;
  DesignParameters params;
  std::string verdict;
  std::string annotation; // shown in the human rendering only
};

struct Report {
  std::vector<ReportRow> rows; // ordered by case number
  std::vector<std::string> warnings;
};

// one record per line, tab-separated:
// case, group, stabilizer, v, b, r, k, lambda, verdict
void render_tsv(Report const &report, std::ostream &out);

// aligned table with annotations and warnings
void render_table(Report const &report, std::ostream &out);

} // namespace biplane
