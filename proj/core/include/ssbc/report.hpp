#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssbc/codeword.hpp"
#include "ssbc/eval.hpp"

namespace ssbc {

inline constexpr int kFormatVersion = 1;

nlohmann::json to_json(const EvalReport& report);
EvalReport report_from_json(const nlohmann::json& j);

/// JSON report document:
///   {"format": "ssbc-report", "format_version": 1, "status": "ok"|"partial",
///    "config": {...}, "dataset": {...}, "reports": [EvalReport...],
///    "error": "..." (only when partial)}
struct ReportDocument {
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json dataset = nlohmann::json::object();
  std::vector<EvalReport> reports;
  std::optional<std::string> error;
};

nlohmann::json to_json(const ReportDocument& doc);
void write_report_json(std::ostream& out, const ReportDocument& doc);

/// Flat CSV: two '#' comment lines (format/version, config JSON), a header
///   method,k,row,radius,precision,recall,map
/// then per report one "summary" row followed by one "pr" row per radius
/// (map left empty on pr rows).
void write_report_csv(std::ostream& out, const ReportDocument& doc);

enum class CodeEncoding { signs, hex };

/// Codes file: header line
///   # ssbc-codes version=1 method=<m> k=<k> encoding=<signs|hex> count=<n>
/// a "# config=<json>" line, then one code per line.
void write_codes(std::ostream& out, std::span<const Codeword> codes, const std::string& method,
                 Index k, CodeEncoding encoding, const nlohmann::json& config);

struct CodesFile {
  std::string method;
  Index k = 0;
  CodeEncoding encoding = CodeEncoding::signs;
  nlohmann::json config;
  std::vector<Codeword> codes;
};

CodesFile read_codes(std::istream& in);

}  // namespace ssbc
