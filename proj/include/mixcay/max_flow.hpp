#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "mixcay/digraph.hpp"

namespace mixcay {

/// Dinic's algorithm on small integer capacities. Intended for the unit
/// capacity networks derived from digraphs, where contracted vertex groups
/// may produce parallel arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes);

  void add_arc(std::size_t from, std::size_t to, int capacity = 1);

  /// Max flow from s to t. Stops augmenting once the flow reaches `limit`,
  /// in which case the returned value is only a lower bound.
  int max_flow(std::size_t s, std::size_t t,
               int limit = std::numeric_limits<int>::max());

  /// Nodes reachable from s in the residual network after max_flow.
  std::vector<bool> source_side(std::size_t s) const;

  std::size_t node_count() const noexcept { return head_.size(); }

 private:
  struct Edge {
    std::size_t to;
    int capacity;
  };

  bool build_levels(std::size_t s, std::size_t t);
  int augment(std::size_t v, std::size_t t, int pushed);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

/// Unit-capacity network of x with every vertex of `sources` merged into one
/// source node and every vertex of `sinks` into one sink node. Returns the
/// max flow (bounded by `limit`) and, optionally, the source side of a
/// minimum cut expressed over the vertices of x.
struct ContractedFlow {
  int value = 0;
  std::vector<bool> source_side;
};

ContractedFlow contracted_max_flow(const Digraph& x,
                                   const std::vector<Vertex>& sources,
                                   const std::vector<Vertex>& sinks,
                                   int limit = std::numeric_limits<int>::max());

}  // namespace mixcay
