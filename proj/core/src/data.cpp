#include "ssbc/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ssbc/error.hpp"
#include "ssbc/rng.hpp"

namespace ssbc {

std::string_view to_string(Provenance p) { return p == Provenance::csv ? "csv" : "synthetic"; }

namespace {

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_missing_marker(std::string_view s) {
  return s.empty() || s == "?" || s == "NA" || s == "na" || s == "NaN" || s == "nan" || s == "NAN";
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

Dataset parse_csv(std::istream& in, const CsvOptions& options, std::string name) {
  std::vector<Index> drops = options.drop_columns;
  std::sort(drops.begin(), drops.end());

  std::vector<double> values;
  Index cols = -1;
  Index rows = 0;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = options.has_header;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    const auto fields = split_fields(line, options.delimiter);
    row.clear();
    bool missing = false;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      if (std::binary_search(drops.begin(), drops.end(), static_cast<Index>(f))) continue;
      const std::string_view cell = trim(fields[f]);
      const auto number = is_missing_marker(cell) ? std::nullopt : parse_number(cell);
      if (!number) {
        if (!options.drop_rows_with_missing)
          throw DataError("CSV line " + std::to_string(line_no) + ", column " + std::to_string(f) +
                          ": missing or non-numeric cell '" + std::string(cell) + "'");
        missing = true;
        break;
      }
      row.push_back(*number);
    }
    if (missing) continue;
    if (cols < 0) cols = static_cast<Index>(row.size());
    if (static_cast<Index>(row.size()) != cols)
      throw DataError("CSV line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                      " fields, got " + std::to_string(row.size()));
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  if (in.bad()) throw DataError("CSV read failure");
  if (rows == 0 || cols <= 0) throw DataError("CSV contains no usable rows");

  Dataset ds;
  ds.points = Eigen::Map<const PointMatrix>(values.data(), rows, cols);
  ds.name = std::move(name);
  ds.provenance = Provenance::csv;
  return ds;
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_csv(in, options, path.stem().string());
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const PointMatrix& points, char delimiter) {
  for (Index i = 0; i < points.rows(); ++i) {
    for (Index j = 0; j < points.cols(); ++j) {
      if (j) out << delimiter;
      out << format_double(points(i, j));
    }
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const PointMatrix& points, char delimiter) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  write_csv(out, points, delimiter);
  if (!out) throw DataError("write failure on " + path.string());
}

Dataset synth_uniform(Index n, Index d, Seed seed) {
  if (n < 1 || d < 1) throw ParameterError("synth_uniform: n and d must be >= 1");
  Rng rng(seed);
  Dataset ds;
  ds.points.resize(n, d);
  for (Index i = 0; i < n; ++i)
    for (Index t = 0; t < d; ++t) {
      const double width = 1.0 / static_cast<double>((t + 1) * (t + 1));
      ds.points(i, t) = rng.uniform(0.0, width);
    }
  ds.name = "uniform";
  ds.provenance = Provenance::synthetic;
  ds.seed = seed;
  return ds;
}

Split split(const Dataset& ds, const SplitSpec& spec) {
  const Index n = ds.size();
  if (spec.train_count < 0 || spec.test_count < 0 || spec.train_count + spec.test_count > n)
    throw ParameterError("split: train_count + test_count = " +
                         std::to_string(spec.train_count + spec.test_count) + " exceeds n = " +
                         std::to_string(n));
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  Rng rng(spec.seed);
  for (Index i = n - 1; i > 0; --i) {
    const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }

  auto take = [&](Index begin, Index count, std::vector<Index>& idx, const char* suffix) {
    idx.assign(perm.begin() + begin, perm.begin() + begin + count);
    Dataset part;
    part.points.resize(count, ds.dim());
    for (Index i = 0; i < count; ++i) part.points.row(i) = ds.points.row(idx[static_cast<std::size_t>(i)]);
    part.name = ds.name + suffix;
    part.provenance = ds.provenance;
    part.seed = ds.seed;
    return part;
  };

  Split out;
  out.train = take(0, spec.train_count, out.train_indices, "/train");
  out.test = take(spec.train_count, spec.test_count, out.test_indices, "/test");
  return out;
}

void zscore(PointMatrix& points) {
  if (points.rows() == 0) return;
  const double n = static_cast<double>(points.rows());
  for (Index j = 0; j < points.cols(); ++j) {
    auto col = points.col(j);
    const double mean = col.sum() / n;
    col.array() -= mean;
    const double sd = std::sqrt(col.squaredNorm() / n);
    if (sd > 0.0)
      col /= sd;
    else
      col.setZero();
  }
}

nlohmann::json dataset_metadata(const Dataset& ds) {
  nlohmann::json j = {{"name", ds.name},
                      {"n", ds.size()},
                      {"d", ds.dim()},
                      {"provenance", std::string(to_string(ds.provenance))}};
  j["seed"] = ds.seed ? nlohmann::json(*ds.seed) : nlohmann::json(nullptr);
  return j;
}

}  // namespace ssbc
