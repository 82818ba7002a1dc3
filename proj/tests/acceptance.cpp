// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gauge.hpp"
#include "oracles.hpp"
#include "ssbc/affinity.hpp"
#include "ssbc/baselines.hpp"
#include "ssbc/data.hpp"
#include "ssbc/encoder.hpp"
#include "ssbc/eval.hpp"
#include "ssbc/rng.hpp"
#include "ssbc/sketch.hpp"
#include "ssbc/theory.hpp"

using namespace ssbc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures_ <= 3) detail_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }
  Outcome outcome() const {
    if (failures_ == 0) return {true, notes_};
    std::ostringstream os;
    os << failures_ << " failure(s): " << detail_.str();
    if (!notes_.empty()) os << " | " << notes_;
    return {false, os.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
  std::string notes_;
};

std::string fmt(double x, const char* spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Largest |eigenvalue| of a symmetric matrix, by the Jacobi oracle.
double sym_norm2(const Matrix& m) {
  const auto e = oracle::jacobi_eig(m);
  return std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
}

Outcome fd_guarantee() {
  Checker c;
  double worst = 0.0;
  for (Seed seed = 0; seed < 10; ++seed) {
    Rng rng(1000 + seed);
    const Matrix a = gaussian_matrix(200, 50, rng);
    const double frob2 = a.squaredNorm();
    for (Index ell : {5, 10, 25}) {
      FdSketch sketch(ell, 50);
      for (Index i = 0; i < a.rows(); ++i) sketch.insert(a.row(i));
      const double bound = 2.0 * frob2 / static_cast<double>(ell);
      const Matrix b = sketch.buffer();
      const double err = sym_norm2(a.transpose() * a - b.transpose() * b);
      worst = std::max(worst, err / bound);
      c.expect(err <= bound, "seed " + std::to_string(seed) + " ell " + std::to_string(ell) + ": spectral error " +
                                 fmt(err) + " > " + fmt(bound));
      for (int t = 0; t < 100; ++t) {
        Vector x(50);
        for (Index i = 0; i < 50; ++i) x(i) = rng.normal();
        x.normalize();
        const double gap = (a * x).squaredNorm() - (b * x).squaredNorm();
        c.expect(gap >= -1e-9 && gap <= bound, "directional gap " + fmt(gap) + " outside [-1e-9, " + fmt(bound) + "]");
      }
    }
  }
  c.note("max error/bound " + fmt(worst));
  return c.outcome();
}

Outcome no_shrink_equivalence() {
  Checker c;
  const Dataset ds = synth_uniform(150, 50, 11);
  const double sigma = estimate_sigma_nn(ds.points, 30);
  const Index k = 8;
  const SsbcParams params{k, 0.025};
  c.expect(params.sketch_rows() >= 300, "ell " + std::to_string(params.sketch_rows()) + " < 2m");

  const auto eig = oracle::jacobi_eig(oracle::affinity(ds.points, sigma));
  double min_gap = INFINITY;
  for (Index j = 0; j < k; ++j) min_gap = std::min(min_gap, (eig.values(j) - eig.values(j + 1)) / eig.values(0));
  c.expect(min_gap > 1e-6, "eigengap " + fmt(min_gap) + " too small");

  SsbcModel model = SsbcModel::train(TrainSet(ds.points, sigma), params);
  const std::vector<Codeword> streaming = model.encode_batch(ds.points);
  c.expect(model.sketch().shrink_count() == 0, "sketch shrank");
  const ExactCodes exact = exact_codes(ds.points, k, sigma, RoundingMode::deterministic, 0);
  c.expect(hamming_matrix(streaming) == hamming_matrix(exact.codes), "Hamming distance matrices differ");
  c.expect(equal_up_to_column_flips(streaming, exact.codes), "codes differ beyond per-column flips");
  c.note("ell " + std::to_string(params.sketch_rows()) + ", relative eigengap " + fmt(min_gap));
  return c.outcome();
}

Outcome spectral_error_check() {
  Checker c;
  const Dataset ds = synth_uniform(500, 50, 21);
  const double sigma = estimate_sigma_nn(ds.points, 30);
  std::vector<double> tilde;
  for (Seed seed = 0; seed < 20; ++seed) {
    const SpectralCheck r = theory_spectral_check(ds.points, sigma, 100, 20, seed);
    tilde.push_back(r.err_tilde);
    c.expect(r.err_tilde <= r.err_w2 + r.err_hat + 1e-9, "triangle violated at seed " + std::to_string(seed));
  }
  std::sort(tilde.begin(), tilde.end());
  const double median = 0.5 * (tilde[9] + tilde[10]);
  c.expect(median <= 0.5, "median err_tilde " + fmt(median) + " > 0.5");

  SpectralCheckOptions exhaustive;
  exhaustive.exhaustive = true;
  const SpectralCheck e = theory_spectral_check(ds.points, sigma, 500, 501, 0, exhaustive);
  const double worst = std::max({e.err_w2, e.err_hat, e.err_tilde});
  c.expect(worst <= 1e-8, "exhaustive error " + fmt(worst) + " > 1e-8");
  c.expect(e.err_tilde <= e.err_w2 + e.err_hat + 1e-9, "triangle violated in the exhaustive case");
  c.note("median err_tilde " + fmt(median) + ", exhaustive max error " + fmt(worst));
  return c.outcome();
}

Outcome metric_oracles() {
  Checker c;
  Rng rng(31);
  double worst = 0.0;
  for (int instance = 0; instance < 5; ++instance) {
    const Index n = 100, k = 16;
    const Dataset ds = synth_uniform(n, 20, 40 + static_cast<Seed>(instance));
    const double sigma = estimate_sigma_nn(ds.points, 30);
    const GroundTruth truth = ground_truth(ds.points, ds.points, sigma, true);
    // Codes correlated with the data so the instance is not trivial.
    const LshModel lsh = LshModel::train(20, k, static_cast<Seed>(instance));
    PointMatrix centred = ds.points.rowwise() - ds.points.colwise().mean();
    const std::vector<Codeword> codes = lsh.encode_all(centred);
    oracle::Codes raw;
    for (const Codeword& cw : codes) {
      std::vector<int> s;
      for (Index j = 0; j < k; ++j) s.push_back(cw[j]);
      raw.push_back(s);
    }
    const oracle::Sets truth_sets = oracle::neighbours(ds.points, ds.points, sigma, true);
    c.expect(IndexSets(truth_sets.begin(), truth_sets.end()) == truth.similar, "ground truth differs");

    const EvalReport r = evaluate_codes("lsh", codes, codes, truth, default_radius(k), true);
    for (int radius = 0; radius <= k; ++radius) {
      const oracle::Sets returned = oracle::within_radius(raw, raw, radius, true);
      c.expect(IndexSets(returned.begin(), returned.end()) == retrieve_hamming(codes, codes, radius, true),
               "retrieved sets differ at radius " + std::to_string(radius));
      const auto [p, rec] = oracle::precision_recall(returned, truth_sets);
      const PrPoint& pt = r.pr_curve[static_cast<std::size_t>(radius)];
      // Exact rationals rounded once versus a sum of n doubles.
      worst = std::max({worst, std::abs(pt.precision - oracle::to_double(p)), std::abs(pt.recall - oracle::to_double(rec))});
      const auto counts = query_counts(IndexSets(returned.begin(), returned.end()), truth.similar);
      for (std::size_t q = 0; q < counts.size(); ++q) {
        const std::set<Index> t(truth_sets[q].begin(), truth_sets[q].end());
        Index hits = 0;
        for (Index x : returned[q]) hits += static_cast<Index>(t.count(x));
        c.expect(counts[q].hits == hits && counts[q].returned == static_cast<Index>(returned[q].size()) &&
                     counts[q].relevant == static_cast<Index>(t.size()),
                 "integer counts differ");
      }
    }
    const double map = oracle::to_double(oracle::mean_ap(raw, raw, truth_sets, true));
    worst = std::max(worst, std::abs(r.map - map));
  }
  c.expect(worst <= 1e-14, "max deviation from exact rationals " + fmt(worst));
  c.note("max deviation from exact rationals " + fmt(worst));
  return c.outcome();
}

Outcome ssbc_beats_lsh() {
  Checker c;
  const std::vector<Index> ks{20, 30, 40, 50};
  const int seeds = 5;
  std::vector<double> sp(ks.size()), lp(ks.size()), sm(ks.size()), lm(ks.size());
  for (int s = 0; s < seeds; ++s) {
    cli::RunConfig config;
    config.seed = static_cast<Seed>(s);
    config.train_count = 500;
    config.test_count = 2000;
    const cli::PreparedData data = cli::prepare_data(config);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      config.k = ks[i];
      config.method = cli::Method::ssbc_streaming;
      const EvalReport ssbc = cli::run_method(config, data).report;
      config.method = cli::Method::lsh;
      const EvalReport lsh = cli::run_method(config, data).report;
      sp[i] += ssbc.precision / seeds;
      sm[i] += ssbc.map / seeds;
      lp[i] += lsh.precision / seeds;
      lm[i] += lsh.map / seeds;
    }
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::string k = std::to_string(ks[i]);
    c.expect(sp[i] >= lp[i], "k=" + k + " precision " + fmt(sp[i]) + " < LSH " + fmt(lp[i]));
    c.expect(sm[i] >= lm[i], "k=" + k + " MAP " + fmt(sm[i]) + " < LSH " + fmt(lm[i]));
    c.note("k=" + k + " P " + fmt(sp[i], "%.3f") + "/" + fmt(lp[i], "%.3f") + " MAP " + fmt(sm[i], "%.3f") + "/" +
           fmt(lm[i], "%.3f"));
  }
  return c.outcome();
}

Outcome affinity_oracles() {
  Checker c;
  double worst = 0.0;
  for (Seed seed = 0; seed < 5; ++seed) {
    const Dataset ds = synth_uniform(100, 10, 50 + seed);
    const double sigma = estimate_sigma_nn(ds.points, 30);
    const double nn = oracle::sigma_nn(ds.points, 30), all = oracle::sigma_all(ds.points);
    worst = std::max({worst, std::abs(sigma - nn), std::abs(estimate_sigma_all(ds.points) - all)});
    const Matrix w = affinity_matrix(ds.points, sigma);
    worst = std::max(worst, (w - oracle::affinity(ds.points, sigma)).cwiseAbs().maxCoeff());
    const TrainSet train(ds.points.topRows(60), sigma);
    for (Index i = 60; i < 100; ++i) {
      const RowVector v = affinity_vector(ds.points.row(i), train);
      for (Index j = 0; j < 60; ++j)
        worst = std::max(worst, std::abs(v(j) - oracle::kernel(ds.points, i, ds.points, j, sigma)));
    }
    // Scaling by 2 is exact in binary floating point, so the coupling must hold bit for bit.
    c.expect(affinity_matrix(ds.points * 2.0, sigma * 4.0) == w, "scale coupling (c = 2) not exact");
    const double dev = (affinity_matrix(ds.points * 3.0, sigma * 9.0) - w).cwiseAbs().maxCoeff();
    c.expect(dev <= 1e-12, "scale coupling (c = 3) deviates by " + fmt(dev));
  }
  c.expect(worst <= 1e-12, "max deviation " + fmt(worst));
  c.note("max deviation " + fmt(worst));
  return c.outcome();
}

Outcome determinism() {
  Checker c;
  const fs::path root = fs::temp_directory_path() / "ssbc_acceptance_determinism";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"synth", {"synth", "--n", "500", "--d", "50", "--seed", "4", "--out", "OUT/data.csv"}},
      {"ssbc_online", {"run", "--method", "ssbc_online", "--k", "16", "--train", "200", "--test", "500", "--seed", "4",
                       "--encode-train", "--out-dir", "OUT"}},
      {"ssbc_streaming", {"run", "--method", "ssbc_streaming", "--k", "16", "--train", "200", "--test", "500",
                          "--seed", "4", "--encode-train", "--packed", "--out-dir", "OUT"}},
      {"lsh", {"run", "--method", "lsh", "--k", "16", "--train", "200", "--test", "500", "--seed", "4", "--out-dir",
               "OUT"}},
      {"exact_d", {"run", "--method", "exact_d", "--k", "16", "--train", "200", "--test", "500", "--seed", "4",
                   "--out-dir", "OUT"}},
      {"exact_r", {"run", "--method", "exact_r", "--k", "16", "--train", "200", "--test", "500", "--seed", "4",
                   "--out-dir", "OUT"}},
      {"sweep", {"sweep", "--methods", "ssbc_streaming,ssbc_online,lsh,exact_r", "--ks", "8:16:4", "--train", "150",
                 "--test", "300", "--seed", "4", "--write-codes", "--out-dir", "OUT"}},
      {"theory", {"theory-check", "--synth-n", "300", "--m", "60", "--ell", "12", "--seeds", "3", "--seed", "4",
                  "--out-dir", "OUT"}}};
  int files = 0;
  for (const auto& [name, args] : commands) {
    std::string stdout_text[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / name / std::to_string(run);
      fs::create_directories(dir);
      std::vector<std::string> resolved;
      for (std::string a : args) {
        if (const auto at = a.find("OUT"); at != std::string::npos) a.replace(at, 3, dir.string());
        resolved.push_back(a);
      }
      std::ostringstream out, err;
      const int code = cli::run_cli(resolved, out, err);
      c.expect(code == 0, name + " exited " + std::to_string(code) + ": " + err.str());
      std::string text = out.str();
      for (auto at = text.find(dir.string()); at != std::string::npos; at = text.find(dir.string()))
        text.replace(at, dir.string().size(), "OUT");
      stdout_text[run] = text;
    }
    c.expect(stdout_text[0] == stdout_text[1], name + " stdout differs");
    for (const auto& entry : fs::directory_iterator(root / name / "0")) {
      const std::string file = entry.path().filename().string();
      if (file == "timings.json") continue;  // wall-clock sidecar
      ++files;
      c.expect(slurp(entry.path()) == slurp(root / name / "1" / file), name + "/" + file + " differs");
    }
  }
  fs::remove_all(root);
  c.note(std::to_string(commands.size()) + " commands, " + std::to_string(files) + " files compared");
  return c.outcome();
}

Outcome column_norms() {
  Checker c;
  std::vector<std::pair<std::string, PointMatrix>> sets;
  sets.push_back({"uniform 500", synth_uniform(500, 50, 61).points});
  sets.push_back({"uniform 150", synth_uniform(150, 50, 11).points});
  Rng rng(62);
  PointMatrix clustered(300, 5);
  for (Index i = 0; i < 300; ++i)
    for (Index j = 0; j < 5; ++j) clustered(i, j) = static_cast<double>(i % 3) * 4.0 + 0.3 * rng.normal();
  sets.push_back({"clustered 300", clustered});
  sets.push_back({"identical 20", PointMatrix::Ones(20, 4)});
  sets.push_back({"fixture 200", load_csv(fs::path(SSBC_TEST_DATA_DIR) / "fixtures" / "uniform200.csv").points});
  for (const auto& [name, pts] : sets) {
    for (const char* mode : {"nn30", "all"}) {
      const double sigma = pts.rows() > 30 && std::string(mode) == "nn30" ? estimate_sigma_nn(pts, 30)
                                                                            : estimate_sigma_all(pts);
      if (!(sigma > 0) && std::string(mode) == "nn30") c.note(name + " sigma 0, used 1");
      const ColumnNormStats s = column_norm_diagnostic(pts, sigma > 0 ? sigma : 1.0);
      c.expect(s.cmin >= 1.0, name + " C_min " + fmt(s.cmin) + " < 1");
      if (std::string(mode) == "nn30") c.note(name + " ratio " + fmt(s.ratio));
    }
  }
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"frequent-directions-guarantee", 10, fd_guarantee},
      {"no-shrink-oracle-equivalence", 30, no_shrink_equivalence},
      {"spectral-error-check", 300, spectral_error_check},
      {"metric-oracles", 10, metric_oracles},
      {"ssbc-precision-and-map-vs-lsh", 600, ssbc_beats_lsh},
      {"affinity-and-sigma-oracles", 60, affinity_oracles},
      {"determinism", 300, determinism},
      {"column-norm-diagnostic", 60, column_norms},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].budget_seconds) {
      o.pass = false;
      o.detail += " | over time budget";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << " (" << fmt(seconds, "%.1f")
              << " s) " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
