#pragma once

#include <string>
#include <vector>

#include "grouplab/theorems.hpp"

namespace grouplab {

// Plain structured text: one record per report, "key: value" lines in a
// fixed key order, records separated by blank lines, a summary record at
// the end. Wall times are deliberately excluded so that reports are
// byte-identical across any scheduling of the scan.
std::string format_report(const TheoremReport& rep);
std::string format_reports(const std::vector<TheoremReport>& reports,
                           const std::vector<std::string>& entry_errors,
                           const ScanSummary& summary);

void write_text_file(const std::string& path, const std::string& content);

} // namespace grouplab
