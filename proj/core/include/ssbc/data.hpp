#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssbc/types.hpp"

namespace ssbc {

enum class Provenance { csv, synthetic };

std::string_view to_string(Provenance p);

struct Dataset {
  PointMatrix points;
  std::string name;
  Provenance provenance = Provenance::csv;
  std::optional<Seed> seed;

  Index size() const { return points.rows(); }
  Index dim() const { return points.cols(); }
};

struct CsvOptions {
  char delimiter = ',';
  bool has_header = false;
  std::vector<Index> drop_columns;  // zero-based, applied before parsing
  // Drop rows with an empty, NA/NaN/?-marked or unparseable cell instead of
  // failing.
  bool drop_rows_with_missing = false;
};

/// Blank lines and lines starting with '#' are skipped (the CLI writes its
/// metadata as a leading '#' line). Throws DataError on I/O failure, ragged
/// rows, a bad cell without a drop policy, or an empty result.
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_csv(std::istream& in, const CsvOptions& options = {}, std::string name = "csv");

/// One row per point, values printed with the shortest representation that
/// round-trips exactly.
void write_csv(std::ostream& out, const PointMatrix& points, char delimiter = ',');
void write_csv(const std::filesystem::path& path, const PointMatrix& points, char delimiter = ',');

/// Entry (i, t) ~ Uniform[0, 1 / t^2] for t = 1..d, drawn row by row.
Dataset synth_uniform(Index n, Index d = 50, Seed seed = 0);

struct SplitSpec {
  Index train_count = 0;
  Index test_count = 0;
  Seed seed = 0;
};

struct Split {
  Dataset train;
  Dataset test;
  std::vector<Index> train_indices;
  std::vector<Index> test_indices;
};

/// Disjoint uniform random subsets: a seeded Fisher-Yates permutation, the
/// first train_count entries go to train, the next test_count to test.
Split split(const Dataset& ds, const SplitSpec& spec);

/// Per-column z-scoring; constant columns become zero.
void zscore(PointMatrix& points);

nlohmann::json dataset_metadata(const Dataset& ds);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace ssbc
