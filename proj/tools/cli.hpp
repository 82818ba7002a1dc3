#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"
#include "ssbc/codeword.hpp"
#include "ssbc/data.hpp"
#include "ssbc/eval.hpp"

namespace ssbc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kNumericalError = 3 };

/// Entry point shared by the ssbc binary and the tests. args excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Train/test split, bandwidth and ground truth shared by every method of a
/// run or sweep.
struct PreparedData {
  Dataset dataset;
  Split split;
  double sigma = 0.0;
  PointMatrix queries;
  GroundTruth truth;
};

PreparedData prepare_data(const RunConfig& config);

struct Timings {
  double train_seconds = 0.0;
  double encode_seconds = 0.0;
  double eval_seconds = 0.0;
};

struct MethodResult {
  EvalReport report;
  std::vector<Codeword> test_codes;
  std::vector<Codeword> train_codes;  // only with encode_train
  Timings timings;
};

MethodResult run_method(const RunConfig& config, const PreparedData& data);

}  // namespace ssbc::cli
