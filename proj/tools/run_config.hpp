#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssbc/data.hpp"
#include "ssbc/types.hpp"

namespace ssbc::cli {

enum class Method { ssbc_online, ssbc_streaming, lsh, exact_d, exact_r };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);  // throws ParameterError

struct SigmaMode {
  enum class Kind { nn30, all, nn30_div4, fixed } kind = Kind::nn30;
  double value = 0.0;  // only for fixed

  std::string to_string() const;
  static SigmaMode parse(std::string_view text);  // nn30 | all | nn30_div4 | fixed:<v>
};

/// Source of the point set: a CSV file or the synthetic uniform generator.
struct DataSource {
  std::optional<std::string> csv_path;
  CsvOptions csv;
  bool zscore = false;
  Index synth_n = 0;  // 0: train + test
  Index synth_d = 50;
  std::optional<Seed> synth_seed;  // default: run seed
};

/// Fully resolved configuration of one run; echoed into every output file.
struct RunConfig {
  Method method = Method::ssbc_streaming;
  Index k = 30;
  double epsilon = 0.5;
  SigmaMode sigma_mode;
  Seed seed = 0;
  DataSource data;
  Index train_count = 500;
  Index test_count = 2000;
  Index query_count = 0;              // 0: every test point is a query
  std::optional<int> hamming_radius;  // nullopt: sweep, headline at floor(k/4)
  bool encode_train = false;
  bool packed = false;
  Index exact_guard = 5000;
  std::string out_dir = ".";

  nlohmann::json to_json() const;
};

/// k values from "a:b:step" or a comma list.
std::vector<Index> parse_k_list(std::string_view text);

}  // namespace ssbc::cli
