#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixcay {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Sign { positive, negative };

const char* to_string(Sign sign) noexcept;

/// Sorted, duplicate-free subset of the vertices 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t universe, std::vector<Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::vector<Vertex>(members)) {}

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  VertexSet complement() const;
  std::vector<bool> indicator() const;

  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

/// Simple digraph (no loops, no parallel arcs) with sorted adjacency kept in
/// both directions.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs,
          std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }
  bool has_arc(Vertex tail, Vertex head) const;

  /// All arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
  std::vector<std::string> labels_;
};

struct DegreeSummary {
  std::size_t delta_plus = 0;
  std::size_t delta_minus = 0;
  std::size_t delta = 0;
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> in_degree;
};

DegreeSummary degrees(const Digraph& x);

/// Tarjan's algorithm; components are returned with sorted members, in
/// order of their smallest vertex.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& x);
bool is_strongly_connected(const Digraph& x);

/// omega+(A) for Sign::positive, omega-(A) for Sign::negative, sorted.
std::vector<Arc> arc_boundary(const Digraph& x, const VertexSet& a, Sign sign);

struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> parent;  // parent[i] = vertex of x behind vertex i
};

InducedSubdigraph induced_subdigraph(const Digraph& x, const VertexSet& a);
Digraph reverse(const Digraph& x);
bool is_symmetric(const Digraph& x);

/// Graphviz digraph; byte-deterministic for a given graph.
std::string to_dot(const Digraph& x, std::string_view name = "X");

}  // namespace mixcay
