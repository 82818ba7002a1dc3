#include "ssbc/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ssbc/data.hpp"
#include "ssbc/error.hpp"

namespace ssbc {

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& p : report.pr_curve)
    curve.push_back({{"radius", p.radius}, {"precision", p.precision}, {"recall", p.recall}});
  return {{"method", report.method},   {"k", report.k},
          {"radius", report.radius},   {"precision", report.precision},
          {"recall", report.recall},   {"map", report.map},
          {"pr_curve", std::move(curve)}, {"params", report.params}};
}

EvalReport report_from_json(const nlohmann::json& j) {
  EvalReport r;
  r.method = j.at("method").get<std::string>();
  r.k = j.at("k").get<Index>();
  r.radius = j.at("radius").get<int>();
  r.precision = j.at("precision").get<double>();
  r.recall = j.at("recall").get<double>();
  r.map = j.at("map").get<double>();
  for (const auto& p : j.at("pr_curve"))
    r.pr_curve.push_back({p.at("radius").get<int>(), p.at("precision").get<double>(),
                          p.at("recall").get<double>()});
  r.params = j.value("params", nlohmann::json::object());
  return r;
}

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : doc.reports) reports.push_back(to_json(r));
  nlohmann::json j = {{"format", "ssbc-report"},
                      {"format_version", kFormatVersion},
                      {"status", doc.error ? "partial" : "ok"},
                      {"config", doc.config},
                      {"dataset", doc.dataset},
                      {"reports", std::move(reports)}};
  if (doc.error) j["error"] = *doc.error;
  return j;
}

void write_report_json(std::ostream& out, const ReportDocument& doc) { out << to_json(doc).dump(2) << '\n'; }

void write_report_csv(std::ostream& out, const ReportDocument& doc) {
  out << "# format=ssbc-report-csv version=" << kFormatVersion
      << " status=" << (doc.error ? "partial" : "ok") << '\n';
  out << "# config=" << doc.config.dump() << '\n';
  out << "method,k,row,radius,precision,recall,map\n";
  for (const auto& r : doc.reports) {
    out << r.method << ',' << r.k << ",summary," << r.radius << ',' << format_double(r.precision) << ','
        << format_double(r.recall) << ',' << format_double(r.map) << '\n';
    for (const auto& p : r.pr_curve)
      out << r.method << ',' << r.k << ",pr," << p.radius << ',' << format_double(p.precision) << ','
          << format_double(p.recall) << ",\n";
  }
}

void write_codes(std::ostream& out, std::span<const Codeword> codes, const std::string& method,
                 Index k, CodeEncoding encoding, const nlohmann::json& config) {
  out << "# ssbc-codes version=" << kFormatVersion << " method=" << method << " k=" << k
      << " encoding=" << (encoding == CodeEncoding::signs ? "signs" : "hex") << " count=" << codes.size()
      << '\n';
  out << "# config=" << config.dump() << '\n';
  for (const auto& c : codes) {
    if (c.size() != k) detail::throw_dimension("write_codes", k, c.size());
    out << (encoding == CodeEncoding::signs ? c.to_sign_string() : c.to_hex()) << '\n';
  }
}

CodesFile read_codes(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ssbc-codes ", 0) != 0)
    throw DataError("codes file: missing '# ssbc-codes' header");
  CodesFile file;
  std::size_t count = 0;
  bool have_version = false;
  std::istringstream header(line.substr(13));
  std::string token;
  while (header >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw DataError("codes file: bad header token '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "version") {
      if (value != std::to_string(kFormatVersion)) throw DataError("codes file: unsupported version " + value);
      have_version = true;
    } else if (key == "method") {
      file.method = value;
    } else if (key == "k") {
      file.k = std::stol(value);
    } else if (key == "encoding") {
      if (value == "signs")
        file.encoding = CodeEncoding::signs;
      else if (value == "hex")
        file.encoding = CodeEncoding::hex;
      else
        throw DataError("codes file: unknown encoding " + value);
    } else if (key == "count") {
      count = std::stoul(value);
    }
  }
  if (!have_version) throw DataError("codes file: missing version");
  if (!std::getline(in, line) || line.rfind("# config=", 0) != 0)
    throw DataError("codes file: missing config line");
  file.config = nlohmann::json::parse(line.substr(9));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Codeword c = file.encoding == CodeEncoding::signs ? Codeword::from_sign_string(line)
                                                      : Codeword::from_hex(line, file.k);
    if (c.size() != file.k) throw DataError("codes file: code length does not match k");
    file.codes.push_back(std::move(c));
  }
  if (file.codes.size() != count) throw DataError("codes file: count does not match header");
  return file;
}

}  // namespace ssbc
