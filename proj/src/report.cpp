#include "freedim/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace freedim {

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "# " << report.command << "\n";
  std::vector<std::size_t> widths(report.columns.size(), 0);
  for (std::size_t c = 0; c < report.columns.size(); ++c) widths[c] = report.columns[c].size();
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size(), ' ');
    }
    out << "\n";
  };
  emit(report.columns);
  for (const auto& row : report.rows) emit(row);
  if (report.verdict) out << "verdict: " << (*report.verdict ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::json root;
  root["command"] = report.command;
  root["columns"] = report.columns;
  root["rows"] = report.rows;
  if (report.verdict) root["verdict"] = *report.verdict ? "pass" : "fail";
  return root.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ",";
      out << csv_cell(row[c]);
    }
    out << "\n";
  };
  emit(report.columns);
  for (const auto& row : report.rows) emit(row);
  return out.str();
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

std::string render_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return render_text(report);
    case ReportFormat::json: return render_json(report);
    case ReportFormat::csv: return render_csv(report);
  }
  throw std::invalid_argument("unknown report format");
}

}  // namespace freedim
