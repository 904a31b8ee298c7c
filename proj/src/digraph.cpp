#include "mixcay/digraph.hpp"

#include <algorithm>
#include <limits>

#include "mixcay/error.hpp"

namespace mixcay {

const char* to_string(Sign sign) noexcept {
  return sign == Sign::positive ? "positive" : "negative";
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= universe_) {
    throw Error(ErrorKind::invalid_input,
                "vertex " + std::to_string(members_.back()) + " out of range");
  }
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  std::vector<Vertex> m;
  for (Vertex v = 0; v < universe; ++v) {
    if (mask >> v & 1U) m.push_back(v);
  }
  return VertexSet(universe, std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement() const {
  std::vector<Vertex> m;
  m.reserve(universe_ - members_.size());
  auto it = members_.begin();
  for (Vertex v = 0; v < universe_; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      m.push_back(v);
    }
  }
  return VertexSet(universe_, std::move(m));
}

std::vector<bool> VertexSet::indicator() const {
  std::vector<bool> in(universe_, false);
  for (Vertex v : members_) in[v] = true;
  return in;
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs,
                 std::vector<std::string> labels)
    : out_(vertex_count), in_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw Error(ErrorKind::invalid_input, "label count does not match vertex count");
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.tail >= vertex_count || a.head >= vertex_count) {
      throw Error(ErrorKind::invalid_input, "arc endpoint out of range");
    }
    if (a.tail == a.head) {
      throw Error(ErrorKind::invalid_input,
                  "self-loop at vertex " + std::to_string(a.tail));
    }
    if (i > 0 && arcs[i - 1] == a) {
      throw Error(ErrorKind::invalid_input,
                  "parallel arc " + std::to_string(a.tail) + "->" +
                      std::to_string(a.head));
    }
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
  arc_count_ = arcs.size();
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  const auto& o = out_[tail];
  return std::binary_search(o.begin(), o.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> all;
  all.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) all.push_back({u, v});
  }
  return all;
}

std::string Digraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

DegreeSummary degrees(const Digraph& x) {
  if (x.vertex_count() == 0) {
    throw Error(ErrorKind::invalid_input, "degrees of an empty digraph");
  }
  DegreeSummary d;
  d.delta_plus = d.delta_minus = std::numeric_limits<std::size_t>::max();
  d.out_degree.resize(x.vertex_count());
  d.in_degree.resize(x.vertex_count());
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    d.out_degree[v] = x.out_degree(v);
    d.in_degree[v] = x.in_degree(v);
    d.delta_plus = std::min(d.delta_plus, d.out_degree[v]);
    d.delta_minus = std::min(d.delta_minus, d.in_degree[v]);
  }
  d.delta = std::min(d.delta_plus, d.delta_minus);
  return d;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& x) {
  const std::size_t n = x.vertex_count();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto succ = x.out(f.v);
      if (f.next < succ.size()) {
        const Vertex w = succ[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

bool is_strongly_connected(const Digraph& x) {
  if (x.vertex_count() == 0) return false;
  return strongly_connected_components(x).size() == 1;
}

std::vector<Arc> arc_boundary(const Digraph& x, const VertexSet& a, Sign sign) {
  if (a.universe() != x.vertex_count()) {
    throw Error(ErrorKind::invalid_input, "vertex set universe mismatch");
  }
  if (a.empty() || a.size() == x.vertex_count()) {
    throw Error(ErrorKind::invalid_fragment,
                "arc boundary needs a proper nonempty vertex set");
  }
  const auto in = a.indicator();
  std::vector<Arc> cut;
  if (sign == Sign::positive) {
    for (Vertex u : a) {
      for (Vertex v : x.out(u)) {
        if (!in[v]) cut.push_back({u, v});
      }
    }
  } else {
    for (Vertex v : a) {
      for (Vertex u : x.in(v)) {
        if (!in[u]) cut.push_back({u, v});
      }
    }
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

InducedSubdigraph induced_subdigraph(const Digraph& x, const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::invalid_input, "induced subdigraph of empty set");
  std::vector<Vertex> local(x.vertex_count(), std::numeric_limits<Vertex>::max());
  InducedSubdigraph out;
  out.parent = a.members();
  for (std::size_t i = 0; i < out.parent.size(); ++i) {
    local[out.parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Arc> arcs;
  std::vector<std::string> labels;
  for (Vertex u : a) {
    for (Vertex v : x.out(u)) {
      if (local[v] != std::numeric_limits<Vertex>::max()) arcs.push_back({local[u], local[v]});
    }
    if (!x.labels().empty()) labels.push_back(x.labels()[u]);
  }
  out.graph = Digraph(a.size(), std::move(arcs), std::move(labels));
  return out;
}

Digraph reverse(const Digraph& x) {
  std::vector<Arc> arcs;
  arcs.reserve(x.arc_count());
  for (const Arc& a : x.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph(x.vertex_count(), std::move(arcs), x.labels());
}

bool is_symmetric(const Digraph& x) {
  for (Vertex u = 0; u < x.vertex_count(); ++u) {
    for (Vertex v : x.out(u)) {
      if (!x.has_arc(v, u)) return false;
    }
  }
  return true;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Digraph& x, std::string_view name) {
  std::string out = "digraph " + dot_quote(std::string(name)) + " {\n";
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=" + dot_quote(x.label(v)) + "];\n";
  }
  for (const Arc& a : x.arcs()) {
    out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mixcay
