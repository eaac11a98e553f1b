#include "socent/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace socent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_weight(std::string_view field, std::size_t line_no) {
  double w = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), w);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw IngestError(line_no, "bad weight '" + std::string(field) + "'");
  return w;
}

void format_weight(double w, std::ostream& out) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, w);
  out.write(buf, res.ptr - buf);
}

}  // namespace

IngestError::IngestError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

void WeightedGraph::check_node(NodeId i) const {
  if (i >= node_count())
    throw std::out_of_range("node id " + std::to_string(i) +
                            " out of range (n=" +
                            std::to_string(node_count()) + ")");
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeId i) const {
  check_node(i);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

double WeightedGraph::strength(NodeId i) const {
  double s = 0.0;
  for (const auto& nb : neighbors(i)) s += nb.weight;
  return s;
}

double WeightedGraph::weight(NodeId i, NodeId j) const {
  auto eid = edge_id(i, j);
  return eid ? edges_[*eid].weight : 0.0;
}

std::optional<EdgeId> WeightedGraph::edge_id(NodeId i, NodeId j) const {
  check_node(i);
  check_node(j);
  auto nbrs = neighbors(i);
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), j,
      [](const Neighbor& nb, NodeId id) { return nb.node < id; });
  if (it == nbrs.end() || it->node != j) return std::nullopt;
  return it->edge;
}

const std::string& WeightedGraph::label(NodeId i) const {
  check_node(i);
  return labels_[i];
}

std::optional<NodeId> WeightedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(trim(label)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeightedGraph WeightedGraph::with_unit_weights() const {
  WeightedGraph g = *this;
  for (auto& nb : g.adjacency_) nb.weight = 1.0;
  for (auto& e : g.edges_) e.weight = 1.0;
  return g;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
  if (labels_ != other.labels_ || offsets_ != other.offsets_ ||
      edges_.size() != other.edges_.size())
    return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u ||
        edges_[i].v != other.edges_[i].v ||
        edges_[i].weight != other.edges_[i].weight)
      return false;
  }
  return true;
}

NodeId GraphBuilder::intern(std::string_view label) {
  auto trimmed = trim(label);
  if (trimmed.empty()) throw std::invalid_argument("empty node label");
  std::string key(trimmed);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  NodeId id = static_cast<NodeId>(labels_.size());
  index_.emplace(std::move(key), id);
  labels_.emplace_back(trimmed);
  return id;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b,
                            double w) {
  NodeId ia = intern(a);
  NodeId ib = intern(b);
  add_edge(ia, ib, w);
}

void GraphBuilder::add_edge(NodeId a, NodeId b, double w) {
  if (a >= labels_.size() || b >= labels_.size())
    throw std::out_of_range("edge endpoint not interned");
  if (w < 0.0 || !std::isfinite(w))
    throw std::invalid_argument("edge weight must be finite and >= 0");
  if (a == b || w == 0.0) return;  // node retained, edge dropped
  weight_acc_[pair_key(a, b)] += w;
}

WeightedGraph GraphBuilder::build() && {
  WeightedGraph g;
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  const NodeId n = static_cast<NodeId>(g.labels_.size());

  g.edges_.reserve(weight_acc_.size());
  for (const auto& [key, w] : weight_acc_) {
    WeightedGraph::Edge e;
    e.u = static_cast<NodeId>(key >> 32);
    e.v = static_cast<NodeId>(key & 0xffffffffu);
    e.weight = w;
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const auto& a, const auto& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });

  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight, id};
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight, id};
  }
  for (NodeId i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + g.offsets_[i],
              g.adjacency_.begin() + g.offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) {
                return a.node < b.node;
              });
  }
  return g;
}

WeightedGraph build_from_edge_list(std::span<const EdgeRecord> records) {
  GraphBuilder b;
  std::size_t line = 0;
  for (const auto& rec : records) {
    ++line;
    try {
      b.add_edge(rec.a, rec.b, rec.weight);
    } catch (const std::exception& e) {
      throw IngestError(line, e.what());
    }
  }
  return std::move(b).build();
}

WeightedGraph project_coauthorship(std::span<const MembershipRecord> records) {
  GraphBuilder b;
  for (const auto& rec : records) {
    if (rec.members.empty())
      throw std::invalid_argument("membership item '" + rec.item +
                                  "' has no members");
    if (rec.members.size() == 1) {
      b.intern(rec.members.front());
      continue;
    }
    const double w = 1.0 / static_cast<double>(rec.members.size() - 1);
    std::vector<NodeId> ids;
    ids.reserve(rec.members.size());
    for (const auto& m : rec.members) ids.push_back(b.intern(m));
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        b.add_edge(ids[i], ids[j], w);
  }
  return std::move(b).build();
}

WeightedGraph project_email(std::span<const MembershipRecord> records) {
  GraphBuilder b;
  for (const auto& rec : records) {
    if (rec.sender.empty())
      throw std::invalid_argument("email '" + rec.item + "' has no sender");
    if (rec.members.empty())
      throw std::invalid_argument("email '" + rec.item +
                                  "' has no recipients");
    NodeId s = b.intern(rec.sender);
    const double w = 1.0 / static_cast<double>(rec.members.size());
    for (const auto& m : rec.members) b.add_edge(s, b.intern(m), w);
  }
  return std::move(b).build();
}

WeightedGraph read_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = split_fields(body);
    if (fields.size() < 2 || fields.size() > 3)
      throw IngestError(line_no, "expected 'labelA labelB [weight]', got " +
                                     std::to_string(fields.size()) +
                                     " field(s)");
    double w = fields.size() == 3 ? parse_weight(fields[2], line_no) : 1.0;
    try {
      b.add_edge(fields[0], fields[1], w);
    } catch (const std::exception& e) {
      throw IngestError(line_no, e.what());
    }
  }
  return std::move(b).build();
}

WeightedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
  for (NodeId i = 0; i < g.node_count(); ++i)
    out << g.label(i) << '\t' << g.label(i) << "\t0\n";
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << '\t' << g.label(e.v) << '\t';
    format_weight(e.weight, out);
    out << '\n';
  }
}

namespace {

std::vector<MembershipRecord> read_memberships(std::istream& in,
                                               bool email_mode) {
  std::vector<MembershipRecord> records;
  std::unordered_map<std::string, std::size_t> by_item;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = split_fields(body);
    const std::size_t expected = email_mode ? 3 : 2;
    if (fields.size() != expected)
      throw IngestError(line_no,
                        std::string("expected '") +
                            (email_mode ? "emailId sender recipient"
                                        : "itemId memberLabel") +
                            "', got " + std::to_string(fields.size()) +
                            " field(s)");
    std::string item(fields[0]);
    auto [it, inserted] = by_item.emplace(item, records.size());
    if (inserted) {
      records.push_back({item, {}, {}});
      if (email_mode) records.back().sender = std::string(fields[1]);
    }
    MembershipRecord& rec = records[it->second];
    if (email_mode && rec.sender != fields[1])
      throw IngestError(line_no, "email '" + item +
                                     "' names two senders ('" + rec.sender +
                                     "' and '" + std::string(fields[1]) +
                                     "')");
    std::string member(fields[email_mode ? 2 : 1]);
    if (std::find(rec.members.begin(), rec.members.end(), member) ==
        rec.members.end())
      rec.members.push_back(std::move(member));
  }
  return records;
}

}  // namespace

std::vector<MembershipRecord> read_coauthor_memberships(std::istream& in) {
  return read_memberships(in, false);
}

std::vector<MembershipRecord> read_coauthor_memberships_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_memberships(in, false);
}

std::vector<MembershipRecord> read_email_memberships(std::istream& in) {
  return read_memberships(in, true);
}

std::vector<MembershipRecord> read_email_memberships_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_memberships(in, true);
}

}  // namespace socent
