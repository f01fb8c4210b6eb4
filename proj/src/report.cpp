#include "mds/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace mds {

namespace {

using nlohmann::json;

std::string opt(const std::optional<Count>& v) { return v ? to_string(*v) : std::string(); }

std::string opt(const std::optional<BoundValue>& v) { return v ? v->str() : std::string(); }

std::string joined(const std::vector<CanonicalForestCode>& codes) {
  std::string out;
  for (const auto& c : codes) {
    if (!out.empty()) out += ';';
    out += c.str();
  }
  return out;
}

std::string checks_field(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (!out.empty()) out += ';';
    out += c.name + '=' + to_string(c.verdict);
  }
  return out;
}

// Counts go out as strings once they stop fitting a JSON integer exactly.
json count_json(const std::optional<Count>& v) {
  if (!v) return nullptr;
  if (*v <= static_cast<Count>(UINT64_MAX)) return to_u64(*v);
  return to_string(*v);
}

json codes_json(const std::vector<CanonicalForestCode>& codes) {
  json out = json::array();
  for (const auto& c : codes) out.push_back(c.str());
  return out;
}

// Codes contain only parentheses and ';', and names none of ",\"\n", so no
// quoting is ever needed; still guard against it.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
  out << '\n';
}

}  // namespace

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) line += "  ";
      line += rows[r][i];
      if (i + 1 < rows[r].size()) line.append(width[i] - rows[r][i].size(), ' ');
    }
    out << line << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w;
      out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
    }
  }
}

void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv:
      out << kReportCsvHeader << '\n';
      for (const auto& r : reports)
        write_csv_row(out, {r.target, std::to_string(r.n), r.population.str(), std::to_string(r.instances),
                            opt(r.max_phi), joined(r.argmax_codes), opt(r.second_max_phi),
                            joined(r.second_argmax_codes), checks_field(r), to_string(r.verdict)});
      return;
    case ReportFormat::Jsonl:
      for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks)
          checks.push_back(
              {{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"verdict", to_string(c.verdict)}});
        json row = {{"target", r.target},
                    {"n", r.n},
                    {"population", r.population.str()},
                    {"instances", r.instances},
                    {"max_phi", count_json(r.max_phi)},
                    {"argmax_codes", codes_json(r.argmax_codes)},
                    {"second_max_phi", count_json(r.second_max_phi)},
                    {"second_argmax_codes", codes_json(r.second_argmax_codes)},
                    {"checks", checks},
                    {"verdict", to_string(r.verdict)}};
        out << row.dump() << '\n';
      }
      return;
    case ReportFormat::Table: {
      std::vector<std::vector<std::string>> rows = {
          {"target", "n", "population", "instances", "max", "second", "verdict", "checks"}};
      for (const auto& r : reports)
        rows.push_back({r.target, std::to_string(r.n), r.population.str(), std::to_string(r.instances),
                        opt(r.max_phi), opt(r.second_max_phi), to_string(r.verdict), checks_field(r)});
      write_table(out, rows);
      // Spell out whatever did not pass.
      for (const auto& r : reports)
        for (const auto& c : r.checks)
          if (is_failure(c.verdict))
            out << r.target << " n=" << r.n << " " << c.name << ": expected " << c.expected << ", observed "
                << c.observed << '\n';
      return;
    }
  }
}

void write_scan(std::ostream& out, const std::vector<ScanRow>& rows, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv:
      out << kScanCsvHeader << '\n';
      for (const auto& r : rows)
        write_csv_row(out, {std::to_string(r.n), std::to_string(r.classes), to_string(r.max_phi),
                            opt(r.second_max_phi), opt(r.t), opt(r.f1), opt(r.f2), opt(r.conjecture),
                            joined(r.argmax_codes)});
      return;
    case ReportFormat::Jsonl:
      for (const auto& r : rows) {
        auto bound = [](const std::optional<BoundValue>& b) -> json { return b ? json(b->str()) : json(nullptr); };
        json row = {{"n", r.n},
                    {"classes", r.classes},
                    {"max_phi", count_json(r.max_phi)},
                    {"second_max_phi", count_json(r.second_max_phi)},
                    {"t", bound(r.t)},
                    {"f1", bound(r.f1)},
                    {"f2", bound(r.f2)},
                    {"conjecture", bound(r.conjecture)},
                    {"argmax_codes", codes_json(r.argmax_codes)}};
        out << row.dump() << '\n';
      }
      return;
    case ReportFormat::Table: {
      std::vector<std::vector<std::string>> table = {
          {"n", "classes", "max", "second", "t(n)", "f1(n)", "f2(n)", "conjecture", "argmax"}};
      for (const auto& r : rows)
        table.push_back({std::to_string(r.n), std::to_string(r.classes), to_string(r.max_phi),
                         opt(r.second_max_phi), opt(r.t), opt(r.f1), opt(r.f2), opt(r.conjecture),
                         joined(r.argmax_codes)});
      write_table(out, table);
      return;
    }
  }
}

}  // namespace mds
