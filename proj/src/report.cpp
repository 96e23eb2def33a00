#include "biplane/report.hpp"

#include <algorithm>
#include <cassert>

namespace biplane {

namespace {

std::vector<std::string> row_cells(ReportRow const &row)
{
  return {std::to_string(row.case_number),
          row.group,
          row.stabilizer,
          row.params.v.str(),
          row.params.b.str(),
          row.params.r.str(),
          row.params.k.str(),
          std::to_string(row.params.lambda),
          row.verdict};
}

} // namespace

void render_tsv(Report const &report, std::ostream &out)
{
  for (ReportRow const &row : report.rows) {
    auto const cells = row_cells(row);
    for (std::size_t i = 0u; i < cells.size(); ++i)
      out << (i ? "\t" : "") << cells[i];
    out << '\n';
  }
}

void render_table(Report const &report, std::ostream &out)
{
  std::vector<std::string> const header = {
    "case", "group", "stabilizer", "v", "b", "r", "k", "lambda", "verdict"};

  std::vector<std::vector<std::string>> table{header};
  for (ReportRow const &row : report.rows)
    table.push_back(row_cells(row));

  std::vector<std::size_t> width(header.size(), 0u);
  for (auto const &cells : table)
    for (std::size_t i = 0u; i < cells.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());

  for (std::size_t r = 0u; r < table.size(); ++r) {
    auto const &cells = table[r];
    for (std::size_t i = 0u; i < cells.size(); ++i) {
      if (i)
        out << "  ";
      out << cells[i];
      if (i + 1u < cells.size())
        out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << '\n';
    if (r == 0u) {
      std::size_t total = 0u;
      for (std::size_t i = 0u; i < width.size(); ++i)
        total += width[i] + (i ? 2u : 0u);
      out << std::string(total, '-') << '\n';
    } else if (!report.rows[r - 1u].annotation.empty()) {
      out << "      note: " << report.rows[r - 1u].annotation << '\n';
    }
  }

  if (!report.warnings.empty()) {
    out << '\n';
    for (std::string const &warning : report.warnings)
      out << "warning: " << warning << '\n';
  }
}

} // namespace biplane
