#include "socent/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace socent {

namespace {

// Scores are compared after rounding to 9 significant digits so that
// last-ulp float noise cannot split a genuine tie.
double round_sig9(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", x);
  return std::strtod(buf, nullptr);
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim_view(s);
  if (s.empty()) return false;
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

// Top-k node set of the measure, boundary ties truncated by the
// deterministic order.
std::vector<NodeId> top_k_predicted(const RankedList& r, std::size_t k,
                                    EvalWarnings* warnings) {
  k = std::min(k, r.order.size());
  std::vector<NodeId> out(r.order.begin(), r.order.begin() + k);
  if (warnings && k > 0 && k < r.order.size() &&
      r.rank[r.order[k - 1]] == r.rank[r.order[k]]) {
    std::size_t group = 0;
    const auto boundary_rank = r.rank[r.order[k - 1]];
    for (NodeId v : r.order)
      if (r.rank[v] == boundary_rank) ++group;
    warnings->pred_boundary_ties = group;
  }
  return out;
}

// Top-k ground-truth nodes: the first k roster entries, dropping those
// missing from the graph (the window is not extended).
std::vector<NodeId> top_k_truth(const JoinedTruth& gt, std::size_t k,
                                EvalWarnings* warnings) {
  k = std::min(k, gt.roster.size());
  std::vector<NodeId> out;
  out.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    if (gt.roster[t].node)
      out.push_back(*gt.roster[t].node);
    else if (warnings)
      ++warnings->dropped_missing;
  }
  if (warnings && k > 0 && k < gt.roster.size() &&
      gt.roster[k - 1].value == gt.roster[k].value) {
    std::size_t group = 0;
    for (const auto& e : gt.roster)
      if (e.value == gt.roster[k - 1].value) ++group;
    warnings->gt_boundary_ties = group;
  }
  return out;
}

// Average-rank (fractional) positions for a sequence already sorted
// best-first, where tied entries compare equal under `same`.
template <typename T, typename Same>
std::vector<double> fractional_ranks(const std::vector<T>& sorted, Same same) {
  std::vector<double> out(sorted.size());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && same(sorted[j + 1], sorted[i])) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) out[t] = avg;
    i = j + 1;
  }
  return out;
}

}  // namespace

RankedList rank_scores(const CentralityVector& scores,
                       std::span<const std::string> labels) {
  const std::size_t n = scores.scores.size();
  if (n != labels.size())
    throw std::invalid_argument("score vector does not match label table");
  std::vector<double> eff(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(scores.scores[i]))
      throw std::invalid_argument("score of node '" + labels[i] +
                                  "' is NaN");
    eff[i] = round_sig9(scores.scores[i]);
  }
  const bool higher = scores.orientation == Orientation::HigherIsBetter;

  RankedList r;
  r.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.order[i] = static_cast<NodeId>(i);
  std::sort(r.order.begin(), r.order.end(), [&](NodeId a, NodeId b) {
    if (eff[a] != eff[b]) return higher ? eff[a] > eff[b] : eff[a] < eff[b];
    return labels[a] < labels[b];
  });
  r.rank.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    NodeId v = r.order[pos];
    if (pos > 0 && eff[v] == eff[r.order[pos - 1]])
      r.rank[v] = r.rank[r.order[pos - 1]];
    else
      r.rank[v] = static_cast<std::uint32_t>(pos + 1);
  }
  return r;
}

RankedList rank_scores(const CentralityVector& scores,
                       const WeightedGraph& g) {
  return rank_scores(scores, std::span<const std::string>(g.labels()));
}

GroundTruth read_ground_truth(std::istream& in) {
  GroundTruth gt;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw IngestError(line_no, "expected 'label,value'");
    double value;
    if (!parse_double(std::string_view(line).substr(comma + 1), value)) {
      if (line_no == 1) continue;  // header row
      throw IngestError(line_no, "bad ground-truth value");
    }
    std::string label(trim_view(std::string_view(line).substr(0, comma)));
    if (label.empty()) throw IngestError(line_no, "empty label");
    gt.entries.emplace_back(std::move(label), value);
  }
  return gt;
}

GroundTruth read_ground_truth_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_ground_truth(in);
}

JoinedTruth join_ground_truth(const GroundTruth& gt,
                              std::span<const std::string> labels) {
  std::unordered_map<std::string_view, NodeId> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    index.emplace(labels[i], static_cast<NodeId>(i));
  JoinedTruth jt;
  jt.roster.reserve(gt.entries.size());
  for (const auto& [label, value] : gt.entries) {
    JoinedTruth::Entry e;
    e.label = label;
    e.value = value;
    auto it = index.find(label);
    if (it != index.end())
      e.node = it->second;
    else
      ++jt.missing;
    jt.roster.push_back(std::move(e));
  }
  std::sort(jt.roster.begin(), jt.roster.end(),
            [](const auto& a, const auto& b) {
              if (a.value != b.value) return a.value > b.value;
              return a.label < b.label;
            });
  return jt;
}

JoinedTruth join_ground_truth(const GroundTruth& gt, const WeightedGraph& g) {
  return join_ground_truth(gt, std::span<const std::string>(g.labels()));
}

double rmse_topk(const JoinedTruth& gt, const RankedList& r, std::size_t k,
                 EvalWarnings* warnings) {
  k = std::min(k, gt.roster.size());
  double sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t idx = 0; idx < k; ++idx) {
    const auto& entry = gt.roster[idx];
    if (!entry.node) {
      if (warnings) ++warnings->dropped_missing;
      continue;  // excluded; k effectively reduced
    }
    ++counted;
    const double t = static_cast<double>(counted);
    const double measured = static_cast<double>(r.rank[*entry.node]);
    sum += (measured - t) * (measured - t);
  }
  if (counted == 0)
    throw std::domain_error("no top-k ground-truth actor is in the graph");
  return std::sqrt(sum / static_cast<double>(counted));
}

double jaccard_topk(const JoinedTruth& gt, const RankedList& r, std::size_t k,
                    EvalWarnings* warnings) {
  auto truth = top_k_truth(gt, k, warnings);
  auto pred = top_k_predicted(r, k, warnings);
  std::unordered_set<NodeId> ts(truth.begin(), truth.end());
  std::size_t inter = 0;
  for (NodeId v : pred) inter += ts.count(v);
  const std::size_t uni = ts.size() + pred.size() - inter;
  return uni == 0 ? 0.0
                  : static_cast<double>(inter) / static_cast<double>(uni);
}

std::pair<double, double> precision_recall(const JoinedTruth& gt,
                                           const RankedList& r, std::size_t k,
                                           EvalWarnings* warnings) {
  auto truth = top_k_truth(gt, k, warnings);
  auto pred = top_k_predicted(r, k, warnings);
  std::unordered_set<NodeId> ts(truth.begin(), truth.end());
  std::size_t inter = 0;
  for (NodeId v : pred) inter += ts.count(v);
  const double precision =
      pred.empty() ? 0.0
                   : static_cast<double>(inter) /
                         static_cast<double>(pred.size());
  const double recall =
      ts.empty() ? 0.0
                 : static_cast<double>(inter) / static_cast<double>(ts.size());
  return {precision, recall};
}

double spearman_rho(const JoinedTruth& gt, const RankedList& r) {
  // Nodes covered by ground truth, in roster (best-first) order.
  struct Obs {
    double value;
    NodeId node;
  };
  std::vector<Obs> obs;
  for (const auto& e : gt.roster)
    if (e.node) obs.push_back({e.value, *e.node});
  const std::size_t n = obs.size();
  if (n < 2)
    throw std::domain_error(
        "Spearman correlation needs at least two ground-truth nodes in the "
        "graph");

  auto gt_rank = fractional_ranks(
      obs, [](const Obs& a, const Obs& b) { return a.value == b.value; });

  std::vector<Obs> by_measure = obs;
  std::sort(by_measure.begin(), by_measure.end(),
            [&](const Obs& a, const Obs& b) {
              return r.rank[a.node] < r.rank[b.node];
            });
  auto m_rank_sorted =
      fractional_ranks(by_measure, [&](const Obs& a, const Obs& b) {
        return r.rank[a.node] == r.rank[b.node];
      });
  std::vector<double> m_rank(n);
  {
    std::unordered_map<NodeId, double> tmp;
    tmp.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      tmp[by_measure[i].node] = m_rank_sorted[i];
    for (std::size_t i = 0; i < n; ++i) m_rank[i] = tmp[obs[i].node];
  }

  double mean_g = 0.0, mean_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_g += gt_rank[i];
    mean_m += m_rank[i];
  }
  mean_g /= static_cast<double>(n);
  mean_m /= static_cast<double>(n);
  double cov = 0.0, var_g = 0.0, var_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dg = gt_rank[i] - mean_g;
    const double dm = m_rank[i] - mean_m;
    cov += dg * dm;
    var_g += dg * dg;
    var_m += dm * dm;
  }
  if (var_g == 0.0 || var_m == 0.0)
    throw std::domain_error(
        "Spearman correlation undefined: a rank vector has zero variance");
  return cov / std::sqrt(var_g * var_m);
}

void write_report(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << "measure,k,rmse,jaccard,precision,recall,spearman\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%s,%zu,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                  row.measure.c_str(), row.k, row.rmse, row.jaccard,
                  row.precision, row.recall, row.spearman);
    out << buf;
  }
}

}  // namespace socent
