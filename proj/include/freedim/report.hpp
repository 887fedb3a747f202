#pragma once

#include <optional>
#include <string>
#include <vector>

namespace freedim {

enum class ReportFormat { text, json, csv };

/// Tabular command output. Cells are pre-rendered exact strings (integers,
/// p/q rationals, index sets), so every format carries identical content;
/// the verdict additionally drives the process exit status.
struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<bool> verdict;
};

/// Throws std::invalid_argument on an unknown format name.
ReportFormat parse_format(const std::string& name);

std::string render_report(const Report& report, ReportFormat format);

}  // namespace freedim
