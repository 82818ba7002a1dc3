#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssbc/codeword.hpp"
#include "ssbc/types.hpp"

namespace ssbc {

/// Per-query sets of base indices, each sorted ascending.
using IndexSets = std::vector<std::vector<Index>>;

struct GroundTruth {
  Index query_count = 0;
  Index base_count = 0;
  IndexSets similar;
  double sigma = 0.0;
  double threshold = 0.0;  // Euclidean radius defining "similar"
  std::string threshold_note;
};

/// Query q is similar to base j iff ||q - b_j|| <= threshold. With
/// exclude_self, query i and base i are the same point and i is never listed.
GroundTruth ground_truth(const PointMatrix& queries, const PointMatrix& base, double threshold,
                         bool exclude_self, std::string threshold_note = {});

/// Base indices within Hamming radius r of each query code.
IndexSets retrieve_hamming(std::span<const Codeword> queries, std::span<const Codeword> base,
                           int radius, bool exclude_self);

/// Base indices sorted by ascending Hamming distance, ties by index.
IndexSets rank_by_hamming(std::span<const Codeword> queries, std::span<const Codeword> base,
                          bool exclude_self);

struct QueryCounts {
  Index hits = 0;      // |returned & truth|
  Index returned = 0;  // |returned|
  Index relevant = 0;  // |truth|
};

std::vector<QueryCounts> query_counts(const IndexSets& returned, const IndexSets& truth);

struct PrecisionRecall {
  double precision = 1.0;
  double recall = 1.0;
};

/// Means over queries of hits/returned and hits/relevant. An empty retrieval
/// has precision 1 and an empty truth set has recall 1.
PrecisionRecall precision_recall(const IndexSets& returned, const IndexSets& truth);
PrecisionRecall precision_recall(std::span<const QueryCounts> counts);

/// Mean over relevant items of precision at the item's rank (1-based).
/// Returns 0 when nothing is relevant; such queries are skipped by MAP.
double average_precision(std::span<const Index> ranking, std::span<const Index> relevant_sorted);

/// Mean of average_precision over queries with nonempty truth; 1 if there
/// are none.
double mean_average_precision(const IndexSets& rankings, const IndexSets& truth);

struct PrPoint {
  int radius = 0;
  double precision = 1.0;
  double recall = 1.0;
};

struct EvalReport {
  std::string method;
  Index k = 0;
  int radius = 0;  // radius of the headline precision/recall
  double precision = 1.0;
  double recall = 1.0;
  double map = 1.0;
  std::vector<PrPoint> pr_curve;  // radius 0..k
  nlohmann::json params = nlohmann::json::object();
};

/// Default headline radius floor(k / 4).
int default_radius(Index k);

/// Precision, recall, the full radius sweep and MAP in one pass over the
/// Hamming distance histogram of each query. Agrees exactly with
/// retrieve_hamming + precision_recall and rank_by_hamming +
/// mean_average_precision.
EvalReport evaluate_codes(std::string method, std::span<const Codeword> queries,
                          std::span<const Codeword> base, const GroundTruth& truth, int radius,
                          bool exclude_self);

}  // namespace ssbc
