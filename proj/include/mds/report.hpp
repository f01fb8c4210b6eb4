#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mds/verify.hpp"

namespace mds {

enum class ReportFormat { Table, Csv, Jsonl };

/// Fixed CSV header for verification reports.
inline constexpr const char* kReportCsvHeader =
    "target,n,population,instances,max_phi,argmax_codes,second_max_phi,second_argmax_codes,checks,verdict";

/// Fixed CSV header for scan rows.
inline constexpr const char* kScanCsvHeader = "n,classes,max_phi,second_max_phi,t,f1,f2,conjecture,argmax_codes";

// Wall times are never written here; callers log them separately.
void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports, ReportFormat format);
void write_scan(std::ostream& out, const std::vector<ScanRow>& rows, ReportFormat format);

/// Prints rows as a left-aligned ASCII table; the first row is the header.
void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows);

}  // namespace mds
