#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socent/baselines.hpp"
#include "socent/graph.hpp"

namespace socent {

/// Competition ranking ("1224"): tied nodes share the smallest rank and
/// the next distinct score skips by the tie-group size. `order` lists the
/// nodes best-first with ties broken by label; ranks are unaffected by
/// that secondary order.
struct RankedList {
  std::vector<std::uint32_t> rank;  // per node, 1-based
  std::vector<NodeId> order;        // best first
};

/// Ranks scores with exact-equality ties after rounding to 9 significant
/// digits (absorbs float noise). Respects the measure's orientation.
/// NaN scores are rejected. labels supplies the tie-breaking order and
/// must be positionally aligned with the scores.
RankedList rank_scores(const CentralityVector& scores,
                       std::span<const std::string> labels);
RankedList rank_scores(const CentralityVector& scores,
                       const WeightedGraph& g);

/// External importance values keyed by label, e.g. citation counts.
struct GroundTruth {
  std::vector<std::pair<std::string, double>> entries;
};

GroundTruth read_ground_truth(std::istream& in);
GroundTruth read_ground_truth_file(const std::string& path);

/// Ground truth joined against a graph. roster is ordered by descending
/// value (ties by label); entries whose label is absent from the graph
/// keep an empty node and are counted in missing.
struct JoinedTruth {
  struct Entry {
    std::string label;
    double value;
    std::optional<NodeId> node;
  };
  std::vector<Entry> roster;
  std::size_t missing = 0;
};

JoinedTruth join_ground_truth(const GroundTruth& gt,
                              std::span<const std::string> labels);
JoinedTruth join_ground_truth(const GroundTruth& gt, const WeightedGraph& g);

/// Non-fatal conditions met while evaluating; callers may surface them.
struct EvalWarnings {
  std::size_t dropped_missing = 0;  // top-k ground-truth actors not in graph
  std::size_t gt_boundary_ties = 0;   // tie group crossing the k boundary
  std::size_t pred_boundary_ties = 0;
};

/// Root-mean-square error between the measure's ranks of the top-k
/// ground-truth actors and the ideal ranks 1..k. Actors missing from the
/// graph are excluded and k reduced. Returns the unrounded value.
double rmse_topk(const JoinedTruth& gt, const RankedList& r, std::size_t k,
                 EvalWarnings* warnings = nullptr);

/// Jaccard overlap of the top-k ground-truth set and the measure's top-k
/// set; ties at the boundary are truncated by the deterministic order.
double jaccard_topk(const JoinedTruth& gt, const RankedList& r, std::size_t k,
                    EvalWarnings* warnings = nullptr);

/// Precision and recall of the measure's top-k against the top-k
/// ground-truth actors.
std::pair<double, double> precision_recall(const JoinedTruth& gt,
                                           const RankedList& r, std::size_t k,
                                           EvalWarnings* warnings = nullptr);

/// Spearman rank correlation between ground-truth ranks and measure ranks
/// over the nodes that have ground truth, with average-rank (fractional)
/// tie handling on both sides. Throws std::domain_error when either rank
/// vector has zero variance or fewer than two nodes are covered.
double spearman_rho(const JoinedTruth& gt, const RankedList& r);

/// One evaluation report row; the report CSV schema is
/// `measure,k,rmse,jaccard,precision,recall,spearman`.
struct ReportRow {
  std::string measure;
  std::size_t k;
  double rmse;
  double jaccard;
  double precision;
  double recall;
  double spearman;
};

void write_report(const std::vector<ReportRow>& rows, std::ostream& out);

}  // namespace socent
