#include "grouplab/report.hpp"

#include <fstream>
#include <sstream>

#include "grouplab/errors.hpp"

namespace grouplab {

std::string format_report(const TheoremReport& rep) {
  std::ostringstream out;
  out << "group: " << rep.group << "\n";
  out << "order: " << rep.order << "\n";
  out << "prime: " << rep.prime << "\n";
  out << "check: " << rep.check << "\n";
  for (const HypothesisResult& h : rep.hypotheses) {
    out << "hypothesis: " << h.description << " :: " << to_string(h.status);
    if (!h.witness.empty()) out << " :: " << h.witness;
    out << "\n";
  }
  out << "conclusion: " << rep.conclusion.description
      << " :: " << to_string(rep.conclusion.status);
  if (!rep.conclusion.witness.empty())
    out << " :: " << rep.conclusion.witness;
  out << "\n";
  out << "verdict: " << to_string(rep.verdict) << "\n";
  return out.str();
}

std::string format_reports(const std::vector<TheoremReport>& reports,
                           const std::vector<std::string>& entry_errors,
                           const ScanSummary& summary) {
  std::ostringstream out;
  for (const TheoremReport& rep : reports) out << format_report(rep) << "\n";
  for (const std::string& err : entry_errors)
    out << "error: " << err << "\n\n";
  out << "records: " << summary.records << "\n";
  out << "confirmed: " << summary.confirmed << "\n";
  out << "vacuous: " << summary.vacuous << "\n";
  out << "violations: " << summary.violations << "\n";
  out << "undecided: " << summary.undecided << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

} // namespace grouplab
