#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace socent {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised when an input file cannot be parsed. Carries the 1-based line
/// number of the offending record.
class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Neighbor {
  NodeId node;
  double weight;
  EdgeId edge;  // canonical edge index shared by both directions
};

/// Immutable simple undirected edge-weighted graph.
///
/// Nodes carry dense ids in [0, n) assigned in first-seen order; a label
/// table maps external names to ids bijectively. Stored edge weights are
/// strictly positive (weight zero means "no edge"). Adjacency lists are
/// sorted by neighbor id. Edges also carry a canonical id in [0, m)
/// ordered by (min endpoint, max endpoint).
///
/// Instances are immutable after construction and safe for concurrent
/// reads.
class WeightedGraph {
 public:
  struct Edge {
    NodeId u, v;  // u < v
    double weight;
  };

  WeightedGraph() = default;

  NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  /// Neighbors of node i, sorted by neighbor id. Throws std::out_of_range
  /// for an invalid id.
  std::span<const Neighbor> neighbors(NodeId i) const;

  unsigned degree(NodeId i) const {
    return static_cast<unsigned>(neighbors(i).size());
  }

  /// Sum of incident edge weights (0 for isolated nodes).
  double strength(NodeId i) const;

  /// Weight of edge (i, j), or 0 when the edge does not exist.
  double weight(NodeId i, NodeId j) const;

  /// Canonical edge id of (i, j) if the edge exists.
  std::optional<EdgeId> edge_id(NodeId i, NodeId j) const;

  /// Edges in canonical order; the index of an entry is its EdgeId.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label(NodeId i) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  /// Copy of this graph with every edge weight replaced by 1.0.
  WeightedGraph with_unit_weights() const;

  bool operator==(const WeightedGraph& other) const;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_;  // n + 1
  std::vector<Neighbor> adjacency_;   // 2m, sorted per node
  std::vector<Edge> edges_;           // m, canonical order
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;

  void check_node(NodeId i) const;
};

/// Accumulates labeled edge records into a WeightedGraph.
///
/// Duplicate records for the same unordered node pair are coalesced by
/// summing their weights. Self-loops and zero-weight records are dropped
/// as edges but still intern their labels, so the nodes are retained.
/// Labels are whitespace-trimmed and case-sensitive.
class GraphBuilder {
 public:
  /// Registers a label (trimmed) and returns its dense id. Empty labels
  /// are rejected.
  NodeId intern(std::string_view label);

  /// Adds an undirected edge record. Negative weights are rejected.
  void add_edge(std::string_view a, std::string_view b, double w);
  void add_edge(NodeId a, NodeId b, double w);

  WeightedGraph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::unordered_map<std::uint64_t, double> weight_acc_;
};

/// One item of a membership file: a paper with its authors, or an email
/// with its sender and recipients. The member list is non-empty and
/// duplicate-free.
struct MembershipRecord {
  std::string item;
  std::string sender;                // empty outside email mode
  std::vector<std::string> members;  // authors, or recipients
};

struct EdgeRecord {
  std::string a, b;
  double weight = 1.0;
};

WeightedGraph build_from_edge_list(std::span<const EdgeRecord> records);

/// Collaboration projection: every pair of members of an item with
/// n >= 2 members gains weight 1/(n-1); pairs are summed across items.
/// Single-member items contribute an isolated node.
WeightedGraph project_coauthorship(std::span<const MembershipRecord> records);

/// Email projection: every sender-recipient pair of an email with n
/// recipients gains weight 1/n; summed across emails; undirected.
WeightedGraph project_email(std::span<const MembershipRecord> records);

/// Edge-list text format: one edge per line, `labelA labelB weight`,
/// tab- or space-separated; weight optional (default 1.0); lines starting
/// with `#` ignored. A record of the form `label label 0` declares an
/// isolated node (self-loops and zero weights never form edges).
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list_file(const std::string& path);

/// Writes a graph in the edge-list format such that re-ingesting yields an
/// identical graph: nodes are declared first in id order (as zero-weight
/// self-loop records), then edges follow in canonical order with
/// round-trip-exact weights.
void write_edge_list(const WeightedGraph& g, std::ostream& out);

/// Membership file, co-author mode: `itemId memberLabel`, one pair per
/// line. Records are grouped by item in first-seen order.
std::vector<MembershipRecord> read_coauthor_memberships(std::istream& in);
std::vector<MembershipRecord> read_coauthor_memberships_file(
    const std::string& path);

/// Membership file, email mode: `emailId sender recipient`, one triple per
/// line. All lines of an email must name the same sender.
std::vector<MembershipRecord> read_email_memberships(std::istream& in);
std::vector<MembershipRecord> read_email_memberships_file(
    const std::string& path);

}  // namespace socent
