#include "ssbc/eval.hpp"

#include <algorithm>
#include <string>

#include "ssbc/error.hpp"

namespace ssbc {

namespace {

void check_code_lengths(std::span<const Codeword> queries, std::span<const Codeword> base) {
  const Index k = !queries.empty() ? queries.front().size() : (!base.empty() ? base.front().size() : 0);
  for (const auto& c : queries)
    if (c.size() != k) detail::throw_dimension("codes", k, c.size());
  for (const auto& c : base)
    if (c.size() != k) detail::throw_dimension("codes", k, c.size());
}

void check_self_exclusion(Index query_count, Index base_count, bool exclude_self) {
  if (exclude_self && query_count > base_count)
    throw DimensionError("exclude_self requires queries to be a prefix of the base set");
}

}  // namespace

GroundTruth ground_truth(const PointMatrix& queries, const PointMatrix& base, double threshold,
                         bool exclude_self, std::string threshold_note) {
  if (queries.cols() != base.cols()) detail::throw_dimension("ground_truth", base.cols(), queries.cols());
  if (!queries.allFinite() || !base.allFinite()) throw DataError("ground_truth: non-finite input");
  if (!(threshold >= 0.0)) throw ParameterError("ground_truth: threshold must be >= 0");
  check_self_exclusion(queries.rows(), base.rows(), exclude_self);

  GroundTruth gt;
  gt.query_count = queries.rows();
  gt.base_count = base.rows();
  gt.threshold = threshold;
  gt.sigma = threshold;
  gt.threshold_note = std::move(threshold_note);
  gt.similar.resize(static_cast<std::size_t>(queries.rows()));
  for (Index q = 0; q < queries.rows(); ++q) {
    auto& set = gt.similar[static_cast<std::size_t>(q)];
    for (Index j = 0; j < base.rows(); ++j) {
      if (exclude_self && j == q) continue;
      if ((queries.row(q) - base.row(j)).norm() <= threshold) set.push_back(j);
    }
  }
  return gt;
}

IndexSets retrieve_hamming(std::span<const Codeword> queries, std::span<const Codeword> base,
                           int radius, bool exclude_self) {
  check_code_lengths(queries, base);
  check_self_exclusion(static_cast<Index>(queries.size()), static_cast<Index>(base.size()), exclude_self);
  const Index k = queries.empty() ? 0 : queries.front().size();
  if (radius < 0 || radius > k)
    throw ParameterError("retrieve_hamming: radius must be in [0, k], got " + std::to_string(radius));
  IndexSets out(queries.size());
  for (std::size_t q = 0; q < queries.size(); ++q)
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (exclude_self && j == q) continue;
      if (hamming_distance(queries[q], base[j]) <= radius) out[q].push_back(static_cast<Index>(j));
    }
  return out;
}

namespace {

// Counting sort by distance; stable, so ties stay in index order.
std::vector<Index> rank_one(std::span<const int> dist, Index k, Index skip) {
  std::vector<Index> bucket_start(static_cast<std::size_t>(k) + 2, 0);
  for (std::size_t j = 0; j < dist.size(); ++j)
    if (static_cast<Index>(j) != skip) ++bucket_start[static_cast<std::size_t>(dist[j]) + 1];
  for (std::size_t b = 1; b < bucket_start.size(); ++b) bucket_start[b] += bucket_start[b - 1];
  std::vector<Index> ranking(static_cast<std::size_t>(bucket_start.back()));
  for (std::size_t j = 0; j < dist.size(); ++j)
    if (static_cast<Index>(j) != skip)
      ranking[static_cast<std::size_t>(bucket_start[static_cast<std::size_t>(dist[j])]++)] =
          static_cast<Index>(j);
  return ranking;
}

std::vector<int> distances_to_base(const Codeword& query, std::span<const Codeword> base) {
  std::vector<int> dist(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) dist[j] = hamming_distance(query, base[j]);
  return dist;
}

}  // namespace

IndexSets rank_by_hamming(std::span<const Codeword> queries, std::span<const Codeword> base,
                          bool exclude_self) {
  check_code_lengths(queries, base);
  check_self_exclusion(static_cast<Index>(queries.size()), static_cast<Index>(base.size()), exclude_self);
  const Index k = queries.empty() ? 0 : queries.front().size();
  IndexSets out(queries.size());
  for (std::size_t q = 0; q < queries.size(); ++q)
    out[q] = rank_one(distances_to_base(queries[q], base), k,
                      exclude_self ? static_cast<Index>(q) : -1);
  return out;
}

std::vector<QueryCounts> query_counts(const IndexSets& returned, const IndexSets& truth) {
  if (returned.size() != truth.size())
    detail::throw_dimension("query_counts", static_cast<long>(truth.size()),
                            static_cast<long>(returned.size()));
  std::vector<QueryCounts> counts(returned.size());
  for (std::size_t q = 0; q < returned.size(); ++q) {
    const auto& r = returned[q];
    const auto& t = truth[q];
    Index hits = 0;
    auto it = t.begin();
    for (Index j : r) {
      it = std::lower_bound(it, t.end(), j);
      if (it != t.end() && *it == j) ++hits;
    }
    counts[q] = {hits, static_cast<Index>(r.size()), static_cast<Index>(t.size())};
  }
  return counts;
}

PrecisionRecall precision_recall(std::span<const QueryCounts> counts) {
  if (counts.empty()) return {};
  double precision = 0.0;
  double recall = 0.0;
  for (const auto& c : counts) {
    precision += c.returned == 0 ? 1.0 : static_cast<double>(c.hits) / static_cast<double>(c.returned);
    recall += c.relevant == 0 ? 1.0 : static_cast<double>(c.hits) / static_cast<double>(c.relevant);
  }
  const auto n = static_cast<double>(counts.size());
  return {precision / n, recall / n};
}

PrecisionRecall precision_recall(const IndexSets& returned, const IndexSets& truth) {
  return precision_recall(query_counts(returned, truth));
}

double average_precision(std::span<const Index> ranking, std::span<const Index> relevant_sorted) {
  if (relevant_sorted.empty()) return 0.0;
  double sum = 0.0;
  Index hits = 0;
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
    if (std::binary_search(relevant_sorted.begin(), relevant_sorted.end(), ranking[pos])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(pos + 1);
    }
  }
  return sum / static_cast<double>(relevant_sorted.size());
}

double mean_average_precision(const IndexSets& rankings, const IndexSets& truth) {
  if (rankings.size() != truth.size())
    detail::throw_dimension("mean_average_precision", static_cast<long>(truth.size()),
                            static_cast<long>(rankings.size()));
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t q = 0; q < rankings.size(); ++q) {
    if (truth[q].empty()) continue;
    sum += average_precision(rankings[q], truth[q]);
    ++used;
  }
  return used == 0 ? 1.0 : sum / static_cast<double>(used);
}

int default_radius(Index k) { return static_cast<int>(k / 4); }

EvalReport evaluate_codes(std::string method, std::span<const Codeword> queries,
                          std::span<const Codeword> base, const GroundTruth& truth, int radius,
                          bool exclude_self) {
  check_code_lengths(queries, base);
  check_self_exclusion(static_cast<Index>(queries.size()), static_cast<Index>(base.size()), exclude_self);
  if (static_cast<Index>(queries.size()) != truth.query_count ||
      static_cast<Index>(base.size()) != truth.base_count)
    throw DimensionError("evaluate_codes: code counts do not match the ground truth");
  const Index k = queries.empty() ? (base.empty() ? 0 : base.front().size()) : queries.front().size();
  if (radius < 0 || radius > k)
    throw ParameterError("evaluate_codes: radius must be in [0, k], got " + std::to_string(radius));

  const auto kk = static_cast<std::size_t>(k);
  // counts_by_radius[r][q]: what retrieve_hamming at radius r would give.
  std::vector<std::vector<QueryCounts>> counts_by_radius(kk + 1, std::vector<QueryCounts>(queries.size()));
  double ap_sum = 0.0;
  std::size_t ap_used = 0;

  std::vector<Index> total(kk + 1);
  std::vector<Index> rel(kk + 1);
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const auto& similar = truth.similar[q];
    const std::vector<int> dist = distances_to_base(queries[q], base);
    std::fill(total.begin(), total.end(), 0);
    std::fill(rel.begin(), rel.end(), 0);
    const Index skip = exclude_self ? static_cast<Index>(q) : -1;
    for (std::size_t j = 0; j < dist.size(); ++j)
      if (static_cast<Index>(j) != skip) ++total[static_cast<std::size_t>(dist[j])];
    for (Index j : similar) ++rel[static_cast<std::size_t>(dist[static_cast<std::size_t>(j)])];

    Index returned = 0;
    Index hits = 0;
    for (std::size_t r = 0; r <= kk; ++r) {
      returned += total[r];
      hits += rel[r];
      counts_by_radius[r][q] = {hits, returned, static_cast<Index>(similar.size())};
    }
    if (!similar.empty()) {
      ap_sum += average_precision(rank_one(dist, k, skip), similar);
      ++ap_used;
    }
  }

  EvalReport report;
  report.method = std::move(method);
  report.k = k;
  report.radius = radius;
  report.pr_curve.reserve(kk + 1);
  for (std::size_t r = 0; r <= kk; ++r) {
    const PrecisionRecall pr = precision_recall(counts_by_radius[r]);
    report.pr_curve.push_back({static_cast<int>(r), pr.precision, pr.recall});
  }
  report.precision = report.pr_curve[static_cast<std::size_t>(radius)].precision;
  report.recall = report.pr_curve[static_cast<std::size_t>(radius)].recall;
  report.map = ap_used == 0 ? 1.0 : ap_sum / static_cast<double>(ap_used);
  report.params = {{"threshold", truth.threshold},
                   {"sigma", truth.sigma},
                   {"threshold_note", truth.threshold_note},
                   {"queries", truth.query_count},
                   {"base", truth.base_count},
                   {"exclude_self", exclude_self}};
  return report;
}

}  // namespace ssbc
