#pragma once

// Test-only reference computations. They deliberately avoid the library's
// algorithms (flows, Gray codes, set arithmetic helpers) and work on raw
// tables, bitmasks and arc lists so that agreement is evidence.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mixcay/group.hpp"
#include "mixcay/mixed_cayley.hpp"

namespace oracle {

using mixcay::Element;
using mixcay::Group;
using mixcay::MixedCayleyParams;
using ArcList = std::vector<std::pair<unsigned, unsigned>>;

// Arcs of MD(G, S0, S1, T0, T1) straight from the definition; vertex (g, i)
// is g + i*|G|.
inline ArcList mixed_arcs(const MixedCayleyParams& p) {
  const Group& g = p.group;
  const unsigned n = static_cast<unsigned>(g.order());
  std::set<std::pair<unsigned, unsigned>> arcs;
  for (unsigned x = 0; x < n; ++x) {
    for (Element s : p.s0.members()) arcs.insert({x, g.mul(s, x)});
    for (Element s : p.s1.members()) arcs.insert({x + n, g.mul(s, x) + n});
    for (Element t : p.t0.members()) arcs.insert({x, g.mul(t, x) + n});
    for (Element t : p.t1.members()) arcs.insert({g.mul(t, x) + n, x});
  }
  return {arcs.begin(), arcs.end()};
}

inline std::size_t out_boundary(const ArcList& arcs, std::uint64_t mask) {
  std::size_t c = 0;
  for (auto [u, v] : arcs)
    if ((mask >> u & 1) && !(mask >> v & 1)) ++c;
  return c;
}

inline ArcList out_boundary_arcs(const ArcList& arcs, std::uint64_t mask) {
  ArcList out;
  for (auto [u, v] : arcs)
    if ((mask >> u & 1) && !(mask >> v & 1)) out.push_back({u, v});
  return out;
}

inline std::size_t min_degree(unsigned nv, const ArcList& arcs) {
  std::vector<std::size_t> od(nv, 0), id(nv, 0);
  for (auto [u, v] : arcs) {
    ++od[u];
    ++id[v];
  }
  return std::min(*std::min_element(od.begin(), od.end()), *std::min_element(id.begin(), id.end()));
}

// Minimum over proper nonempty subsets; 0 means not strongly connected.
inline std::size_t lambda(unsigned nv, const ArcList& arcs) {
  std::size_t best = SIZE_MAX;
  const std::uint64_t full = (std::uint64_t{1} << nv) - 1;
  for (std::uint64_t m = 1; m < full; ++m) best = std::min(best, out_boundary(arcs, m));
  return best;
}

// Every minimum cut equals the out-arcs or in-arcs of one vertex.
inline bool super_lambda(unsigned nv, const ArcList& arcs) {
  const std::size_t lam = lambda(nv, arcs);
  std::vector<ArcList> vertex_sets;
  for (unsigned v = 0; v < nv; ++v) {
    ArcList out, in;
    for (auto a : arcs) {
      if (a.first == v) out.push_back(a);
      if (a.second == v) in.push_back(a);
    }
    vertex_sets.push_back(out);
    vertex_sets.push_back(in);
  }
  const std::uint64_t full = (std::uint64_t{1} << nv) - 1;
  for (std::uint64_t m = 1; m < full; ++m) {
    ArcList cut = out_boundary_arcs(arcs, m);
    if (cut.size() != lam) continue;
    if (std::find(vertex_sets.begin(), vertex_sets.end(), cut) == vertex_sets.end()) return false;
  }
  return true;
}

inline bool strongly_connected(unsigned nv, const ArcList& arcs) {
  return nv >= 2 ? lambda(nv, arcs) > 0 : true;
}

// Subsets of the group closed under the product (finite, so subgroups).
inline std::vector<std::vector<Element>> subgroups_by_subsets(const Group& g) {
  const unsigned n = static_cast<unsigned>(g.order());
  std::vector<std::vector<Element>> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); m += 2) {  // identity present
    bool closed = true;
    for (unsigned a = 0; a < n && closed; ++a)
      for (unsigned b = 0; b < n && closed; ++b)
        if ((m >> a & 1) && (m >> b & 1) && !(m >> g.mul(a, b) & 1)) closed = false;
    if (!closed) continue;
    std::vector<Element> h;
    for (unsigned a = 0; a < n; ++a)
      if (m >> a & 1) h.push_back(a);
    out.push_back(h);
  }
  return out;
}

inline bool in(const std::vector<Element>& h, Element x) {
  return std::find(h.begin(), h.end(), x) != h.end();
}

// Closure of a set under the product, starting from the identity.
inline std::vector<Element> closure(const Group& g, std::vector<Element> gens) {
  std::vector<Element> h{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (Element s : gens) {
        const Element y = g.mul(s, h[i]);
        if (!in(h, y)) {
          h.push_back(y);
          grew = true;
        }
      }
  }
  std::sort(h.begin(), h.end());
  return h;
}

inline bool subset(const std::vector<Element>& a, const std::vector<Element>& h) {
  return std::all_of(a.begin(), a.end(), [&](Element x) { return in(h, x); });
}

// Clauses written out with explicit products.
inline bool conj_contains(const Group& g, Element t, const std::vector<Element>& h,
                          const std::vector<Element>& a) {
  // a ⊆ t H t^-1  <=>  t^-1 a t ∈ H for all a
  for (Element x : a)
    if (!in(h, g.mul(g.mul(g.inv(t), x), t))) return false;
  return true;
}

inline bool cosets_disjoint(const Group& g, Element a, Element b, const std::vector<Element>& h) {
  // aH ∩ bH = ∅  <=>  a^-1 b ∉ H
  return !in(h, g.mul(g.inv(a), b));
}

// Condition 2 of the max-lambda test, clause by clause.
inline bool max_lambda_condition2(const MixedCayleyParams& p, const std::vector<Element>& h,
                                  Element t0, Element t0p) {
  const Group& g = p.group;
  if (t0 == t0p || !in(p.t0.members(), t0) || !in(p.t0.members(), t0p)) return false;
  if (!subset(closure(g, p.s0.members()), h)) return false;
  if (!conj_contains(g, t0, h, closure(g, p.s1.members()))) return false;
  for (Element t1 : p.t1.members())
    if (!in(h, g.mul(g.inv(t1), t0))) return false;
  if (!cosets_disjoint(g, t0p, t0, h)) return false;
  for (Element t : p.t0.members())
    if (t != t0p && !in(h, g.mul(g.inv(t0), t))) return false;
  return true;
}

}  // namespace oracle
