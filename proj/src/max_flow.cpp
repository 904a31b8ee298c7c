#include "mixcay/max_flow.hpp"

#include <algorithm>
#include <deque>

#include "mixcay/error.hpp"

namespace mixcay {

FlowNetwork::FlowNetwork(std::size_t nodes) : head_(nodes) {}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, int capacity) {
  head_[from].push_back(edges_.size());
  edges_.push_back({to, capacity});
  head_[to].push_back(edges_.size());
  edges_.push_back({from, 0});
}

bool FlowNetwork::build_levels(std::size_t s, std::size_t t) {
  level_.assign(head_.size(), -1);
  level_[s] = 0;
  std::deque<std::size_t> queue{s};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t id : head_[v]) {
      const Edge& e = edges_[id];
      if (e.capacity > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

int FlowNetwork::augment(std::size_t v, std::size_t t, int pushed) {
  if (v == t) return pushed;
  for (std::size_t& i = cursor_[v]; i < head_[v].size(); ++i) {
    const std::size_t id = head_[v][i];
    Edge& e = edges_[id];
    if (e.capacity <= 0 || level_[e.to] != level_[v] + 1) continue;
    const int got = augment(e.to, t, std::min(pushed, e.capacity));
    if (got > 0) {
      e.capacity -= got;
      edges_[id ^ 1].capacity += got;
      return got;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(std::size_t s, std::size_t t, int limit) {
  int flow = 0;
  while (flow < limit && build_levels(s, t)) {
    cursor_.assign(head_.size(), 0);
    while (flow < limit) {
      const int got = augment(s, t, limit - flow);
      if (got == 0) break;
      flow += got;
    }
  }
  return flow;
}

std::vector<bool> FlowNetwork::source_side(std::size_t s) const {
  std::vector<bool> seen(head_.size(), false);
  seen[s] = true;
  std::deque<std::size_t> queue{s};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t id : head_[v]) {
      const Edge& e = edges_[id];
      if (e.capacity > 0 && !seen[e.to]) {
        seen[e.to] = true;
        queue.push_back(e.to);
      }
    }
  }
  return seen;
}

ContractedFlow contracted_max_flow(const Digraph& x,
                                   const std::vector<Vertex>& sources,
                                   const std::vector<Vertex>& sinks, int limit) {
  const std::size_t n = x.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> node(n, kUnset);
  for (Vertex v : sources) node[v] = 0;
  for (Vertex v : sinks) {
    if (node[v] == 0) {
      throw Error(ErrorKind::invalid_input, "source and sink groups overlap");
    }
    node[v] = 1;
  }
  std::size_t next = 2;
  for (Vertex v = 0; v < n; ++v) {
    if (node[v] == kUnset) node[v] = next++;
  }
  FlowNetwork net(next);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : x.out(u)) {
      if (node[u] != node[v]) net.add_arc(node[u], node[v]);
    }
  }
  ContractedFlow out;
  out.value = net.max_flow(0, 1, limit);
  const auto side = net.source_side(0);
  out.source_side.resize(n);
  for (Vertex v = 0; v < n; ++v) out.source_side[v] = side[node[v]];
  return out;
}

}  // namespace mixcay
