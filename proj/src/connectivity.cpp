#include "mixcay/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "mixcay/error.hpp"
#include "mixcay/max_flow.hpp"

namespace mixcay {

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

namespace {

void require_strong(const Digraph& x) {
  if (x.vertex_count() < 2) {
    throw Error(ErrorKind::invalid_input, "arc connectivity needs at least two vertices");
  }
  if (!is_strongly_connected(x)) {
    throw Error(ErrorKind::not_strong, "digraph is not strongly connected");
  }
}

// |omega+(A)| for every subset A of V, indexed by bitmask. Filled in Gray
// code order so each step adjusts the previous value by one vertex.
struct SubsetTable {
  std::size_t n = 0;
  std::uint32_t full = 0;
  std::vector<std::uint16_t> positive;

  std::size_t value(std::uint32_t mask, Sign sign) const {
    return sign == Sign::positive ? positive[mask] : positive[full ^ mask];
  }
};

SubsetTable boundary_table(const Digraph& x, std::size_t cap) {
  const std::size_t n = x.vertex_count();
  if (n > cap || n > kHardSubsetLimit) {
    throw Error(ErrorKind::capacity,
                "exhaustive subset scan limited to " +
                    std::to_string(std::min(cap, kHardSubsetLimit)) +
                    " vertices, digraph has " + std::to_string(n));
  }
  std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
  for (const Arc& a : x.arcs()) {
    out_mask[a.tail] |= 1U << a.head;
    in_mask[a.head] |= 1U << a.tail;
  }
  SubsetTable t;
  t.n = n;
  t.full = n == 32 ? ~0U : (1U << n) - 1;
  t.positive.assign(std::size_t{1} << n, 0);
  std::uint32_t prev = 0;
  int value = 0;
  for (std::uint32_t i = 1; i < (std::uint32_t{1} << n); ++i) {
    const std::uint32_t gray = i ^ (i >> 1);
    const int v = std::countr_zero(i);
    if (gray >> v & 1U) {
      value += std::popcount(out_mask[v] & ~gray) - std::popcount(in_mask[v] & prev);
    } else {
      value += std::popcount(in_mask[v] & gray) - std::popcount(out_mask[v] & ~prev);
    }
    t.positive[gray] = static_cast<std::uint16_t>(value);
    prev = gray;
  }
  return t;
}

std::size_t table_lambda(const SubsetTable& t) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t m = 1; m < t.full; ++m) best = std::min<std::size_t>(best, t.positive[m]);
  return best;
}

std::vector<Arc> cut_of_mask(const Digraph& x, std::uint32_t mask) {
  std::vector<Arc> cut;
  for (Vertex u = 0; u < x.vertex_count(); ++u) {
    if (!(mask >> u & 1U)) continue;
    for (Vertex v : x.out(u)) {
      if (!(mask >> v & 1U)) cut.push_back({u, v});
    }
  }
  return cut;
}

std::vector<Arc> cut_of_side(const Digraph& x, const std::vector<bool>& side) {
  std::vector<Arc> cut;
  for (Vertex u = 0; u < x.vertex_count(); ++u) {
    if (!side[u]) continue;
    for (Vertex v : x.out(u)) {
      if (!side[v]) cut.push_back({u, v});
    }
  }
  return cut;
}

VertexSet side_to_set(const std::vector<bool>& side) {
  std::vector<Vertex> m;
  for (Vertex v = 0; v < side.size(); ++v) {
    if (side[v]) m.push_back(v);
  }
  return VertexSet(side.size(), std::move(m));
}

}  // namespace

CutResult arc_connectivity(const Digraph& x) {
  require_strong(x);
  const Vertex s = 0;
  int best = std::numeric_limits<int>::max();
  std::vector<bool> best_side;
  for (Vertex v = 1; v < x.vertex_count(); ++v) {
    for (int dir = 0; dir < 2; ++dir) {
      const Vertex from = dir == 0 ? s : v;
      const Vertex to = dir == 0 ? v : s;
      auto flow = contracted_max_flow(x, {from}, {to}, best);
      if (flow.value < best) {
        best = flow.value;
        best_side = std::move(flow.source_side);
      }
    }
  }
  return CutResult{static_cast<std::size_t>(best), cut_of_side(x, best_side)};
}

std::size_t arc_connectivity_bruteforce(const Digraph& x, std::size_t cap) {
  require_strong(x);
  return table_lambda(boundary_table(x, cap));
}

LayerSplit layer_split(const VertexSet& a, std::size_t layer_size) {
  LayerSplit s;
  for (Vertex v : a) {
    if (v < layer_size) {
      ++s.layer0;
    } else {
      ++s.layer1;
    }
  }
  return s;
}

std::optional<DegreeProfile> degree_profile(const Digraph& x, const VertexSet& a,
                                            std::size_t layer_size) {
  const auto in = a.indicator();
  std::optional<std::size_t> r[2], to_other[2], from_other[2];
  auto agree = [](std::optional<std::size_t>& slot, std::size_t value) {
    if (!slot) slot = value;
    return *slot == value;
  };
  for (Vertex v : a) {
    const int layer = v < layer_size ? 0 : 1;
    std::size_t same_out = 0, same_in = 0, cross_out = 0, cross_in = 0;
    for (Vertex w : x.out(v)) {
      if (!in[w]) continue;
      ((w < layer_size ? 0 : 1) == layer ? same_out : cross_out)++;
    }
    for (Vertex w : x.in(v)) {
      if (!in[w]) continue;
      ((w < layer_size ? 0 : 1) == layer ? same_in : cross_in)++;
    }
    if (same_out != same_in || !agree(r[layer], same_out) ||
        !agree(to_other[layer], cross_out) || !agree(from_other[layer], cross_in)) {
      return std::nullopt;
    }
  }
  DegreeProfile d;
  d.r0 = r[0].value_or(0);
  d.r1 = r[1].value_or(0);
  d.p = to_other[0] ? *to_other[0] : from_other[1].value_or(0);
  d.q = from_other[0] ? *from_other[0] : to_other[1].value_or(0);
  // Layer-1 vertices must see the same arc counts from the other side.
  if (from_other[1] && *from_other[1] != d.p) return std::nullopt;
  if (to_other[1] && *to_other[1] != d.q) return std::nullopt;
  return d;
}

AtomReport lambda_atoms(const Digraph& x, Sign sign,
                        std::optional<std::size_t> layer_size, std::size_t cap) {
  require_strong(x);
  const SubsetTable t = boundary_table(x, cap);
  const std::size_t lambda = table_lambda(t);

  int atom_size = 64, super_size = 64;
  for (std::uint32_t m = 1; m < t.full; ++m) {
    if (t.value(m, sign) != lambda) continue;
    const int k = std::popcount(m);
    atom_size = std::min(atom_size, k);
    if (k >= 2) super_size = std::min(super_size, k);
  }
  AtomReport report;
  report.sign = sign;
  report.lambda = lambda;
  for (std::uint32_t m = 1; m < t.full; ++m) {
    if (t.value(m, sign) != lambda) continue;
    const int k = std::popcount(m);
    ArcFragment f{VertexSet::from_mask(t.n, m), sign, lambda};
    if (k == atom_size) report.atoms.push_back(f);
    if (k == super_size) report.superatoms.push_back(std::move(f));
  }
  auto by_members = [](const ArcFragment& a, const ArcFragment& b) {
    return a.vertices < b.vertices;
  };
  std::sort(report.atoms.begin(), report.atoms.end(), by_members);
  std::sort(report.superatoms.begin(), report.superatoms.end(), by_members);

  if (layer_size) {
    for (const auto& a : report.atoms) {
      report.atom_layer_split.push_back(layer_split(a.vertices, *layer_size));
      report.induced_degree_profile.push_back(degree_profile(x, a.vertices, *layer_size));
    }
    for (const auto& a : report.superatoms) {
      report.superatom_layer_split.push_back(layer_split(a.vertices, *layer_size));
      report.superatom_degree_profile.push_back(
          degree_profile(x, a.vertices, *layer_size));
    }
  }
  return report;
}

bool is_vertex_arc_set(const Digraph& x, const std::vector<Arc>& cut) {
  if (cut.empty()) return false;
  const bool one_tail = std::all_of(cut.begin(), cut.end(), [&](const Arc& a) {
    return a.tail == cut.front().tail;
  });
  if (one_tail && cut.size() == x.out_degree(cut.front().tail)) return true;
  const bool one_head = std::all_of(cut.begin(), cut.end(), [&](const Arc& a) {
    return a.head == cut.front().head;
  });
  return one_head && cut.size() == x.in_degree(cut.front().head);
}

SuperLambdaResult is_super_lambda_exhaustive(const Digraph& x, std::size_t cap) {
  require_strong(x);
  const SubsetTable t = boundary_table(x, cap);
  const std::size_t lambda = table_lambda(t);
  std::optional<ArcFragment> best;
  for (std::uint32_t m = 1; m < t.full; ++m) {
    if (t.positive[m] != lambda) continue;
    if (is_vertex_arc_set(x, cut_of_mask(x, m))) continue;
    ArcFragment f{VertexSet::from_mask(t.n, m), Sign::positive, lambda};
    if (!best || f.vertices.size() < best->vertices.size() ||
        (f.vertices.size() == best->vertices.size() && f.vertices < best->vertices)) {
      best = std::move(f);
    }
  }
  return SuperLambdaResult{!best.has_value(), std::move(best)};
}

SuperLambdaResult is_super_lambda_flow(const Digraph& x) {
  const std::size_t lambda = arc_connectivity(x).lambda;
  const int limit = static_cast<int>(lambda) + 1;
  const std::size_t n = x.vertex_count();

  auto attempt = [&](std::vector<Vertex> sources,
                     std::vector<Vertex> sinks) -> std::optional<ArcFragment> {
    for (Vertex a : sources) {
      for (Vertex b : sinks) {
        if (a == b) return std::nullopt;
      }
    }
    auto flow = contracted_max_flow(x, sources, sinks, limit);
    if (static_cast<std::size_t>(flow.value) != lambda) return std::nullopt;
    return ArcFragment{side_to_set(flow.source_side), Sign::positive, lambda};
  };

  if (lambda == 1) {
    // A single cut arc (u,z) is a vertex arc set unless u keeps another
    // out-neighbour w inside and z keeps another in-neighbour y outside.
    for (const Arc& e : x.arcs()) {
      for (Vertex w : x.out(e.tail)) {
        if (w == e.head) continue;
        for (Vertex y : x.in(e.head)) {
          if (y == e.tail) continue;
          if (auto f = attempt({e.tail, w}, {e.head, y})) return {false, f};
        }
      }
    }
    return {true, std::nullopt};
  }

  // Two cut arcs with distinct tails and distinct heads.
  const auto arcs = x.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc& a = arcs[i];
      const Arc& b = arcs[j];
      if (a.tail == b.tail || a.head == b.head) continue;
      if (auto f = attempt({a.tail, b.tail}, {a.head, b.head})) return {false, f};
    }
  }
  // All cut arcs leave one vertex v while v keeps an out-neighbour inside.
  for (Vertex v = 0; v < n; ++v) {
    const auto out = x.out(v);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        for (Vertex w : out) {
          if (w == out[i] || w == out[j]) continue;
          if (auto f = attempt({v, w}, {out[i], out[j]})) return {false, f};
        }
      }
    }
  }
  // All cut arcs enter one vertex z while z keeps an in-neighbour outside.
  for (Vertex z = 0; z < n; ++z) {
    const auto in = x.in(z);
    for (std::size_t i = 0; i < in.size(); ++i) {
      for (std::size_t j = i + 1; j < in.size(); ++j) {
        for (Vertex u : in) {
          if (u == in[i] || u == in[j]) continue;
          if (auto f = attempt({in[i], in[j]}, {z, u})) return {false, f};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SuperLambdaResult is_super_lambda(const Digraph& x, std::size_t cap) {
  if (x.vertex_count() <= std::min(cap, kHardSubsetLimit)) {
    return is_super_lambda_exhaustive(x, cap);
  }
  return is_super_lambda_flow(x);
}

bool has_nontrivial_fragment_flow(const Digraph& x) {
  const std::size_t lambda = arc_connectivity(x).lambda;
  const int limit = static_cast<int>(lambda) + 1;
  const Vertex n = static_cast<Vertex>(x.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (Vertex d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          if (static_cast<std::size_t>(contracted_max_flow(x, {a, b}, {c, d}, limit).value) ==
              lambda) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

bool has_nontrivial_fragment_exhaustive(const Digraph& x, std::size_t cap) {
  require_strong(x);
  const SubsetTable t = boundary_table(x, cap);
  const std::size_t lambda = table_lambda(t);
  for (std::uint32_t m = 1; m < t.full; ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    if (k >= 2 && k + 2 <= t.n && t.positive[m] == lambda) return true;
  }
  return false;
}

std::vector<Arc> least_minimum_cut(const Digraph& x, std::size_t cap) {
  require_strong(x);
  const SubsetTable t = boundary_table(x, cap);
  const std::size_t lambda = table_lambda(t);
  std::optional<std::vector<Arc>> best;
  for (std::uint32_t m = 1; m < t.full; ++m) {
    if (t.positive[m] != lambda) continue;
    auto cut = cut_of_mask(x, m);
    if (!best || cut < *best) best = std::move(cut);
  }
  return best.value_or(std::vector<Arc>{});
}

// ---------------------------------------------------------------------------

namespace {

PropertyOutcome outcome(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
          ok ? std::string() : std::move(detail)};
}

std::string describe(const VertexSet& a) {
  std::string s = "{";
  for (Vertex v : a) {
    if (s.size() > 1) s += ',';
    s += std::to_string(v);
  }
  return s + "}";
}

}  // namespace

std::vector<PropertyOutcome> atom_structure_checks(const Digraph& x,
                                                   const AtomReport& report,
                                                   std::size_t layer_size,
                                                   std::size_t delta) {
  static const char* const kAtomChecks[] = {
      "atom_induces_strong_subdigraph", "atom_size_exceeds_delta",
      "atom_meets_each_layer_twice",    "atom_layers_balanced",
      "atoms_pairwise_disjoint",        "atoms_cover_vertices"};
  std::vector<PropertyOutcome> out;

  if (report.lambda >= delta) {
    for (const char* name : kAtomChecks) out.push_back({name, CheckStatus::not_applicable, {}});
    bool ok = true;
    std::string detail;
    for (const auto& s : report.superatoms) {
      if (s.vertices.size() < delta) {
        ok = false;
        detail = "superatom " + describe(s.vertices) + " smaller than delta";
        break;
      }
    }
    out.push_back(outcome("superatom_size_at_least_delta", ok, detail));
    return out;
  }

  bool strong = true, big = true, layered_twice = true, balanced = true;
  std::string d_strong, d_big, d_layers, d_balance;
  for (const auto& atom : report.atoms) {
    const auto& a = atom.vertices;
    if (!is_strongly_connected(induced_subdigraph(x, a).graph)) {
      strong = false;
      d_strong = describe(a);
    }
    if (a.size() < delta + 1) {
      big = false;
      d_big = describe(a) + " has " + std::to_string(a.size()) + " vertices";
    }
    const auto split = layer_split(a, layer_size);
    if (split.layer0 < 2 || split.layer1 < 2) {
      layered_twice = false;
      d_layers = describe(a);
    }
    if (split.layer0 != split.layer1) {
      balanced = false;
      d_balance = describe(a);
    }
  }
  out.push_back(outcome(kAtomChecks[0], strong, d_strong));
  out.push_back(outcome(kAtomChecks[1], big, d_big));
  out.push_back(outcome(kAtomChecks[2], layered_twice, d_layers));
  out.push_back(outcome(kAtomChecks[3], balanced, d_balance));

  std::vector<int> owner(x.vertex_count(), -1);
  bool disjoint = true;
  std::string d_disjoint;
  for (std::size_t i = 0; i < report.atoms.size(); ++i) {
    for (Vertex v : report.atoms[i].vertices) {
      if (owner[v] >= 0 && disjoint) {
        disjoint = false;
        d_disjoint = describe(report.atoms[static_cast<std::size_t>(owner[v])].vertices) +
                     " meets " + describe(report.atoms[i].vertices);
      }
      owner[v] = static_cast<int>(i);
    }
  }
  out.push_back(outcome(kAtomChecks[4], disjoint, d_disjoint));
  const bool covers = std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; });
  out.push_back(outcome(kAtomChecks[5], covers, "some vertex lies in no atom"));
  out.push_back({"superatom_size_at_least_delta", CheckStatus::not_applicable, {}});
  return out;
}

}  // namespace mixcay
