#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "ssbc/affinity.hpp"
#include "ssbc/baselines.hpp"
#include "ssbc/encoder.hpp"
#include "ssbc/error.hpp"
#include "ssbc/report.hpp"
#include "ssbc/theory.hpp"

namespace ssbc::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string default_out_dir() {
  const char* env = std::getenv("SSBC_OUTPUT_DIR");
  return env && *env ? env : ".";
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << contents;
  if (!out) throw DataError("write failure on " + path.string());
}

Dataset load_dataset(const RunConfig& config, Index default_n) {
  Dataset ds;
  if (config.data.csv_path) {
    ds = load_csv(*config.data.csv_path, config.data.csv);
  } else {
    const Index n = config.data.synth_n ? config.data.synth_n : default_n;
    ds = synth_uniform(n, config.data.synth_d, config.data.synth_seed.value_or(config.seed));
  }
  if (config.data.zscore) zscore(ds.points);
  return ds;
}

double resolve_sigma(const SigmaMode& mode, const PointMatrix& reference) {
  switch (mode.kind) {
    case SigmaMode::Kind::nn30: return estimate_sigma_nn(reference, 30);
    case SigmaMode::Kind::all: return estimate_sigma_all(reference);
    case SigmaMode::Kind::nn30_div4: return estimate_sigma_nn(reference, 30) / 4.0;
    case SigmaMode::Kind::fixed: return mode.value;
  }
  return 0.0;
}

PointMatrix stack(const PointMatrix& top, const PointMatrix& bottom) {
  PointMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

nlohmann::json timings_json(const Timings& t) {
  return {{"train_seconds", t.train_seconds}, {"encode_seconds", t.encode_seconds}, {"eval_seconds", t.eval_seconds}};
}

std::string codes_text(const std::vector<Codeword>& codes, const std::string& method, Index k, bool packed,
                       const nlohmann::json& config) {
  std::ostringstream os;
  write_codes(os, codes, method, k, packed ? CodeEncoding::hex : CodeEncoding::signs, config);
  return os.str();
}

void print_summary(std::ostream& out, const EvalReport& r) {
  out << std::left << std::setw(16) << r.method << " k=" << std::setw(4) << r.k << " r=" << std::setw(3)
      << r.radius << " precision=" << format_double(r.precision) << " recall=" << format_double(r.recall)
      << " map=" << format_double(r.map) << '\n';
}

}  // namespace

PreparedData prepare_data(const RunConfig& config) {
  if (config.train_count < 1) throw ParameterError("--train must be >= 1");
  if (config.test_count < 1) throw ParameterError("--test must be >= 1");
  if (config.query_count < 0 || config.query_count > config.test_count)
    throw ParameterError("--queries must be in [0, test]");

  PreparedData data;
  data.dataset = load_dataset(config, config.train_count + config.test_count);
  data.split = split(data.dataset, {config.train_count, config.test_count, config.seed});
  data.sigma = resolve_sigma(config.sigma_mode, data.split.train.points);
  if (!(data.sigma > 0.0)) throw DataError("estimated sigma is zero (duplicate training points?)");

  const Index nq = config.query_count ? config.query_count : config.test_count;
  data.queries = data.split.test.points.topRows(nq);
  data.truth = ground_truth(data.queries, data.split.test.points, data.sigma, /*exclude_self=*/true,
                            config.sigma_mode.to_string());
  return data;
}

MethodResult run_method(const RunConfig& config, const PreparedData& data) {
  MethodResult result;
  const PointMatrix& train = data.split.train.points;
  const PointMatrix& test = data.split.test.points;
  const Index k = config.k;
  const std::string method(to_string(config.method));

  auto start = Clock::now();
  switch (config.method) {
    case Method::ssbc_streaming: {
      SsbcModel model = SsbcModel::train(TrainSet(train, data.sigma), {k, config.epsilon});
      result.timings.train_seconds = seconds_since(start);
      start = Clock::now();
      result.test_codes = model.encode_batch(test);
      if (config.encode_train)
        for (Index i = 0; i < train.rows(); ++i) result.train_codes.push_back(model.encode(train.row(i)));
      break;
    }
    case Method::ssbc_online: {
      std::vector<Codeword> online_train;
      SsbcModel model = SsbcModel::train(TrainSet(train, data.sigma), {k, config.epsilon},
                                         config.encode_train ? &online_train : nullptr);
      result.timings.train_seconds = seconds_since(start);
      start = Clock::now();
      result.train_codes = std::move(online_train);
      result.test_codes.reserve(static_cast<std::size_t>(test.rows()));
      for (Index i = 0; i < test.rows(); ++i) result.test_codes.push_back(model.process_online(test.row(i)));
      break;
    }
    case Method::lsh: {
      const LshModel model = LshModel::train(train.cols(), k, config.seed);
      result.timings.train_seconds = seconds_since(start);
      start = Clock::now();
      result.test_codes = model.encode_all(test);
      if (config.encode_train) result.train_codes = model.encode_all(train);
      break;
    }
    case Method::exact_d:
    case Method::exact_r: {
      const RoundingMode mode =
          config.method == Method::exact_d ? RoundingMode::deterministic : RoundingMode::randomized;
      ExactCodes exact =
          exact_codes(stack(train, test), k, data.sigma, mode, config.seed, {config.exact_guard});
      result.timings.train_seconds = seconds_since(start);
      start = Clock::now();
      const auto m = static_cast<std::ptrdiff_t>(train.rows());
      result.test_codes.assign(exact.codes.begin() + m, exact.codes.end());
      if (config.encode_train) result.train_codes.assign(exact.codes.begin(), exact.codes.begin() + m);
      break;
    }
  }
  result.timings.encode_seconds = seconds_since(start);

  start = Clock::now();
  const std::span<const Codeword> all(result.test_codes);
  const std::span<const Codeword> queries = all.first(static_cast<std::size_t>(data.truth.query_count));
  const int radius = config.hamming_radius.value_or(default_radius(k));
  if (radius < 0 || radius > k) throw ParameterError("--radius must be in [0, k]");
  result.report = evaluate_codes(method, queries, all, data.truth, radius, /*exclude_self=*/true);
  result.report.params["sigma"] = data.sigma;
  result.report.params["epsilon"] = config.epsilon;
  result.report.params["seed"] = config.seed;
  if (config.method == Method::ssbc_online || config.method == Method::ssbc_streaming)
    result.report.params["sketch_rows"] = SsbcParams{k, config.epsilon}.sketch_rows();
  result.timings.eval_seconds = seconds_since(start);
  return result;
}

namespace {

void add_data_options(CLI::App& cmd, RunConfig& config, std::string& delimiter, std::vector<Index>& drops,
                      std::optional<Seed>& synth_seed) {
  cmd.add_option("--data", config.data.csv_path, "CSV dataset (default: synthetic uniform)");
  cmd.add_option("--delimiter", delimiter, "CSV delimiter")->capture_default_str();
  cmd.add_flag("--header", config.data.csv.has_header, "CSV has a header line");
  cmd.add_option("--drop-columns", drops, "zero-based CSV columns to drop")->delimiter(',');
  cmd.add_flag("--drop-missing", config.data.csv.drop_rows_with_missing, "drop rows with missing cells");
  cmd.add_flag("--zscore", config.data.zscore, "z-score every column (off by default)");
  cmd.add_option("--synth-n", config.data.synth_n, "synthetic point count (default: train + test)");
  cmd.add_option("--synth-d", config.data.synth_d, "synthetic dimension")->capture_default_str();
  cmd.add_option("--synth-seed", synth_seed, "synthetic generator seed (default: --seed)");
}

void finish_data_options(RunConfig& config, const std::string& delimiter, const std::vector<Index>& drops,
                         const std::optional<Seed>& synth_seed) {
  if (delimiter.size() != 1) throw ParameterError("--delimiter must be one character");
  config.data.csv.delimiter = delimiter[0];
  config.data.csv.drop_columns = drops;
  config.data.synth_seed = synth_seed;
}

void add_run_options(CLI::App& cmd, RunConfig& config, std::string& sigma_mode, std::string& radius) {
  cmd.add_option("--epsilon", config.epsilon, "sketch accuracy, ell = ceil(k + k/eps)")->capture_default_str();
  cmd.add_option("--sigma-mode", sigma_mode, "nn30 | all | nn30_div4 | fixed:<v>")->capture_default_str();
  cmd.add_option("--seed", config.seed, "seed for split, LSH and Exact-R")->capture_default_str();
  cmd.add_option("--train", config.train_count, "training points")->capture_default_str();
  cmd.add_option("--test", config.test_count, "test (stream) points")->capture_default_str();
  cmd.add_option("--queries", config.query_count, "leading test points used as queries (0 = all)")
      ->capture_default_str();
  cmd.add_option("--radius", radius, "headline Hamming radius or 'sweep' (floor(k/4))")->capture_default_str();
  cmd.add_flag("--encode-train", config.encode_train, "also write codes of the training points");
  cmd.add_flag("--packed", config.packed, "hex-pack codes instead of +/- strings");
  cmd.add_option("--exact-guard", config.exact_guard, "max points for exact_d / exact_r")->capture_default_str();
  cmd.add_option("--out-dir", config.out_dir, "output directory (default: $SSBC_OUTPUT_DIR or .)");
}

void finish_run_options(RunConfig& config, const std::string& sigma_mode, const std::string& radius) {
  config.sigma_mode = SigmaMode::parse(sigma_mode);
  if (radius == "sweep") {
    config.hamming_radius.reset();
  } else {
    try {
      std::size_t used = 0;
      const int r = std::stoi(radius, &used);
      if (used != radius.size()) throw std::invalid_argument(radius);
      config.hamming_radius = r;
    } catch (const std::logic_error&) {
      throw ParameterError("--radius must be an integer or 'sweep'");
    }
  }
  SsbcParams{config.k, config.epsilon}.validate();
}

std::string codes_filename(const RunConfig& config, const char* which) {
  return std::string("codes_") + std::string(to_string(config.method)) + "_k" + std::to_string(config.k) +
         which + ".txt";
}

int cmd_synth(Index n, Index d, Seed seed, const std::string& out_path, std::ostream& out) {
  const Dataset ds = synth_uniform(n, d, seed);
  std::ostringstream os;
  nlohmann::json meta = dataset_metadata(ds);
  meta["format_version"] = kFormatVersion;
  meta["config"] = {{"command", "synth"}, {"n", n}, {"d", d}, {"seed", seed}};
  os << "# ssbc-dataset " << meta.dump() << '\n';
  write_csv(os, ds.points);
  write_file(out_path, os.str());
  out << "wrote " << n << " x " << d << " uniform points to " << out_path << '\n';
  return kOk;
}

void write_outputs(const fs::path& dir, const ReportDocument& doc, const nlohmann::json& timings) {
  std::ostringstream json;
  write_report_json(json, doc);
  write_file(dir / "report.json", json.str());
  std::ostringstream csv;
  write_report_csv(csv, doc);
  write_file(dir / "report.csv", csv.str());
  write_file(dir / "timings.json", timings.dump(2) + "\n");
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PreparedData data = prepare_data(config);
  const MethodResult result = run_method(config, data);
  const nlohmann::json config_json = config.to_json();
  const fs::path dir = config.out_dir;

  write_file(dir / codes_filename(config, ""),
             codes_text(result.test_codes, result.report.method, config.k, config.packed, config_json));
  if (config.encode_train)
    write_file(dir / codes_filename(config, "_train"),
               codes_text(result.train_codes, result.report.method, config.k, config.packed, config_json));

  ReportDocument doc;
  doc.config = config_json;
  doc.dataset = dataset_metadata(data.dataset);
  doc.dataset["sigma"] = data.sigma;
  doc.reports.push_back(result.report);
  write_outputs(dir, doc,
                {{"format_version", kFormatVersion},
                 {"runs", {{{"method", result.report.method}, {"k", config.k}, {"timings", timings_json(result.timings)}}}}});
  print_summary(out, result.report);
  err << "timings: train " << result.timings.train_seconds << " s, encode " << result.timings.encode_seconds
      << " s, eval " << result.timings.eval_seconds << " s\n";
  return kOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e)) return kUsage;
  if (dynamic_cast<const DataError*>(&e) || dynamic_cast<const DimensionError*>(&e)) return kDataError;
  if (dynamic_cast<const NumericalError*>(&e) || dynamic_cast<const GuardError*>(&e)) return kNumericalError;
  if (dynamic_cast<const fs::filesystem_error*>(&e)) return kDataError;
  return kNumericalError;
}

int cmd_sweep(RunConfig base, const std::vector<std::string>& method_names, const std::string& k_text,
              bool write_codes_files, std::ostream& out, std::ostream& err) {
  if (method_names.empty()) throw ParameterError("--methods needs at least one method");
  std::vector<Method> methods;
  for (const auto& name : method_names) methods.push_back(parse_method(name));
  const std::vector<Index> ks = parse_k_list(k_text);

  nlohmann::json config_json = base.to_json();
  config_json.erase("method");
  config_json.erase("k");
  config_json["methods"] = method_names;
  config_json["ks"] = ks;

  const PreparedData data = prepare_data(base);
  ReportDocument doc;
  doc.config = config_json;
  doc.dataset = dataset_metadata(data.dataset);
  doc.dataset["sigma"] = data.sigma;
  nlohmann::json runs = nlohmann::json::array();
  const fs::path dir = base.out_dir;

  int status = kOk;
  for (Method method : methods) {
    for (Index k : ks) {
      RunConfig config = base;
      config.method = method;
      config.k = k;
      try {
        SsbcParams{k, config.epsilon}.validate();
        MethodResult result = run_method(config, data);
        if (write_codes_files)
          write_file(dir / codes_filename(config, ""),
                     codes_text(result.test_codes, result.report.method, k, config.packed, config.to_json()));
        runs.push_back({{"method", result.report.method}, {"k", k}, {"timings", timings_json(result.timings)}});
        print_summary(out, result.report);
        doc.reports.push_back(std::move(result.report));
      } catch (const std::exception& e) {
        doc.error = std::string(to_string(method)) + " k=" + std::to_string(k) + ": " + e.what();
        err << "error: " << *doc.error << " (partial results kept)\n";
        status = exit_code_for(e);
        break;
      }
    }
    if (doc.error) break;
  }
  write_outputs(dir, doc, {{"format_version", kFormatVersion}, {"runs", runs}});
  return status;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string table_cells(double a, double b, double c) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << std::left << std::setw(14) << a << std::setw(14) << b << c;
  return os.str();
}

struct TheoryArgs {
  Index m = 100;
  Index ell = 20;
  Index seeds = 20;
  bool exhaustive = false;
  Index guard = 2000;
};

int cmd_theory_check(RunConfig config, const TheoryArgs& args, std::ostream& out) {
  if (args.seeds < 1) throw ParameterError("--seeds must be >= 1");
  if (!config.data.csv_path && config.data.synth_n == 0) config.data.synth_n = 500;
  const Dataset ds = load_dataset(config, config.data.synth_n);
  const Index n = ds.size();
  if (n > args.guard)
    throw GuardError("theory-check: n = " + std::to_string(n) + " exceeds the dense guard of " +
                     std::to_string(args.guard) + " points");
  const Index m = args.exhaustive ? n : args.m;
  const double sigma = resolve_sigma(config.sigma_mode, ds.points);

  SpectralCheckOptions options;
  options.max_points = args.guard;
  options.exhaustive = args.exhaustive;

  const ColumnNormStats norms = column_norm_diagnostic(ds.points, sigma, args.guard);
  nlohmann::json runs = nlohmann::json::array();
  std::vector<double> w2, hat, tilde;
  bool all_triangle = true;
  out << "seed      err_w2        err_hat       err_tilde\n";
  for (Index s = 0; s < args.seeds; ++s) {
    const Seed seed = config.seed + static_cast<Seed>(s);
    const SpectralCheck c = theory_spectral_check(ds.points, sigma, m, args.ell, seed, options);
    const bool triangle = c.err_tilde <= c.err_w2 + c.err_hat + 1e-9;
    all_triangle = all_triangle && triangle;
    w2.push_back(c.err_w2);
    hat.push_back(c.err_hat);
    tilde.push_back(c.err_tilde);
    runs.push_back({{"seed", seed},
                    {"err_w2", c.err_w2},
                    {"err_hat", c.err_hat},
                    {"err_tilde", c.err_tilde},
                    {"frob_w", c.frob_w},
                    {"sample_rank", c.sample_rank},
                    {"degenerate", c.degenerate},
                    {"triangle_ok", triangle}});
    out << std::left << std::setw(10) << seed << table_cells(c.err_w2, c.err_hat, c.err_tilde)
        << (c.degenerate ? "  (rank deficient)" : "") << '\n';
  }
  nlohmann::json config_json = {{"command", "theory-check"},
                                {"m", m},
                                {"ell", args.ell},
                                {"seeds", args.seeds},
                                {"seed", config.seed},
                                {"exhaustive", args.exhaustive},
                                {"sigma_mode", config.sigma_mode.to_string()},
                                {"guard", args.guard},
                                {"data", config.to_json()["data"]}};
  config_json["data"].erase("synthetic");
  if (!config.data.csv_path)
    config_json["data"]["synthetic"] = {{"generator", "uniform"},
                                        {"n", config.data.synth_n},
                                        {"d", config.data.synth_d},
                                        {"seed", config.data.synth_seed.value_or(config.seed)}};
  const nlohmann::json median_json = {{"err_w2", median(w2)}, {"err_hat", median(hat)}, {"err_tilde", median(tilde)}};
  const nlohmann::json doc = {{"format", "ssbc-theory"},
                              {"format_version", kFormatVersion},
                              {"config", config_json},
                              {"dataset", dataset_metadata(ds)},
                              {"sigma", sigma},
                              {"column_norms",
                               {{"cmax", norms.cmax},
                                {"cmin", norms.cmin},
                                {"ratio", norms.ratio},
                                {"mean", norms.frob_sq_over_n}}},
                              {"runs", runs},
                              {"median", median_json},
                              {"triangle_ok", all_triangle}};
  write_file(fs::path(config.out_dir) / "theory.json", doc.dump(2) + "\n");
  out << "median    " << table_cells(median(w2), median(hat), median(tilde)) << '\n';
  out << "column norms: cmin=" << format_double(norms.cmin) << " cmax=" << format_double(norms.cmax)
      << " ratio=" << format_double(norms.ratio) << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming spectral binary coding: train, encode and evaluate binary codes"};
  app.require_subcommand(1);

  // synth
  Index synth_n = 0, synth_d = 50;
  Seed synth_seed = 0;
  std::string synth_out;
  CLI::App* synth = app.add_subcommand("synth", "generate the synthetic uniform dataset as CSV");
  synth->add_option("--n", synth_n, "number of points")->required();
  synth->add_option("--d", synth_d, "dimension")->capture_default_str();
  synth->add_option("--seed", synth_seed, "generator seed")->capture_default_str();
  synth->add_option("--out", synth_out, "output CSV path")->required();

  // run
  RunConfig run_config;
  run_config.out_dir = default_out_dir();
  std::string run_method_name = "ssbc_streaming", run_sigma = "nn30", run_radius = "sweep", run_delim = ",";
  std::vector<Index> run_drops;
  std::optional<Seed> run_synth_seed;
  CLI::App* run = app.add_subcommand("run", "train one method, encode, evaluate and write reports");
  run->add_option("--method", run_method_name, "ssbc_online | ssbc_streaming | lsh | exact_d | exact_r")
      ->capture_default_str();
  run->add_option("--k", run_config.k, "code length")->capture_default_str();
  add_run_options(*run, run_config, run_sigma, run_radius);
  add_data_options(*run, run_config, run_delim, run_drops, run_synth_seed);

  // sweep
  RunConfig sweep_config;
  sweep_config.out_dir = default_out_dir();
  std::vector<std::string> sweep_methods;
  std::string sweep_ks = "20:50:5", sweep_sigma = "nn30", sweep_radius = "sweep", sweep_delim = ",";
  std::vector<Index> sweep_drops;
  std::optional<Seed> sweep_synth_seed;
  bool sweep_write_codes = false;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate several methods over a range of code lengths");
  sweep->add_option("--methods", sweep_methods, "comma-separated methods")->delimiter(',')->required();
  sweep->add_option("--ks", sweep_ks, "k range start:stop:step or comma list")->capture_default_str();
  sweep->add_flag("--write-codes", sweep_write_codes, "also write a codes file per (method, k)");
  add_run_options(*sweep, sweep_config, sweep_sigma, sweep_radius);
  add_data_options(*sweep, sweep_config, sweep_delim, sweep_drops, sweep_synth_seed);

  // theory-check
  RunConfig theory_config;
  theory_config.out_dir = default_out_dir();
  TheoryArgs theory_args;
  std::string theory_sigma = "nn30", theory_delim = ",";
  std::vector<Index> theory_drops;
  std::optional<Seed> theory_synth_seed;
  CLI::App* theory = app.add_subcommand("theory-check", "empirical spectral error and column-norm checks");
  theory->add_option("--m", theory_args.m, "sampled columns")->capture_default_str();
  theory->add_option("--ell", theory_args.ell, "sketch rows")->capture_default_str();
  theory->add_option("--seeds", theory_args.seeds, "number of sampling seeds")->capture_default_str();
  theory->add_option("--seed", theory_config.seed, "first sampling seed")->capture_default_str();
  theory->add_flag("--exhaustive", theory_args.exhaustive, "use every column exactly once (m = n)");
  theory->add_option("--sigma-mode", theory_sigma, "nn30 | all | nn30_div4 | fixed:<v>")->capture_default_str();
  theory->add_option("--guard", theory_args.guard, "max points for the dense checks")->capture_default_str();
  theory->add_option("--out-dir", theory_config.out_dir, "output directory (default: $SSBC_OUTPUT_DIR or .)");
  add_data_options(*theory, theory_config, theory_delim, theory_drops, theory_synth_seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (CLI::App* sub : app.get_subcommands()) {
      err << sub->help();
      return kUsage;
    }
    err << app.help();
    return kUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(synth_n, synth_d, synth_seed, synth_out, out);
    if (run->parsed()) {
      run_config.method = parse_method(run_method_name);
      finish_run_options(run_config, run_sigma, run_radius);
      finish_data_options(run_config, run_delim, run_drops, run_synth_seed);
      return cmd_run(run_config, out, err);
    }
    if (sweep->parsed()) {
      finish_run_options(sweep_config, sweep_sigma, sweep_radius);
      finish_data_options(sweep_config, sweep_delim, sweep_drops, sweep_synth_seed);
      return cmd_sweep(sweep_config, sweep_methods, sweep_ks, sweep_write_codes, out, err);
    }
    if (theory->parsed()) {
      theory_config.sigma_mode = SigmaMode::parse(theory_sigma);
      finish_data_options(theory_config, theory_delim, theory_drops, theory_synth_seed);
      return cmd_theory_check(theory_config, theory_args, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace ssbc::cli
