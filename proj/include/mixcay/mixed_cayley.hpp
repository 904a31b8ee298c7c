#pragma once

#include <cstddef>
#include <vector>

#include "mixcay/digraph.hpp"
#include "mixcay/group.hpp"

namespace mixcay {

/// The data (G, S0, S1, T0, T1) of a mixed Cayley digraph. The identity may
/// not occur in S0 or S1; T0 and T1 are unrestricted.
struct MixedCayleyParams {
  Group group;
  ElementSet s0;
  ElementSet s1;
  ElementSet t0;
  ElementSet t1;

  /// Throws Error(invalid_input) when an S set contains the identity or a
  /// set was built for a different group order.
  void validate() const;
};

MixedCayleyParams make_params(Group group, std::vector<Element> s0,
                              std::vector<Element> s1, std::vector<Element> t0,
                              std::vector<Element> t1);

struct LayeredVertex {
  Element element = 0;
  int layer = 0;
  friend bool operator==(const LayeredVertex&, const LayeredVertex&) = default;
};

// Fixed encoding: (g, i) <-> g + i*|G|.
inline Vertex vertex_of(std::size_t group_order, Element g, int layer) {
  return static_cast<Vertex>(g + static_cast<std::size_t>(layer) * group_order);
}
inline LayeredVertex layered(std::size_t group_order, Vertex v) {
  return {static_cast<Element>(v % group_order), static_cast<int>(v / group_order)};
}

/// Cay(G, S): arcs g -> s*g.
Digraph build_cayley(const Group& g, const ElementSet& s);

/// BD(G, T0, T1) on G x {0,1}: arcs (g,0) -> (t0*g,1) and (t1*g,1) -> (g,0).
Digraph build_bicayley(const Group& g, const ElementSet& t0, const ElementSet& t1);

/// MD(G, S0, S1, T0, T1), with vertex labels `g.i`.
Digraph build_mixed(const MixedCayleyParams& p);

/// Minimum degree predicted by the degree formulas of the construction.
std::size_t mixed_min_degree(const MixedCayleyParams& p);

/// The parameters of the reverse digraph: MD(G, S0^-1, S1^-1, T1, T0).
MixedCayleyParams reversed_params(const MixedCayleyParams& p);

/// R(a): (g, i) -> (g*a, i), as an image table over flat vertex indices.
std::vector<Vertex> right_translation(const MixedCayleyParams& p, Element a);

/// True when the permutation maps the arc set of x onto itself.
bool is_automorphism(const Digraph& x, const std::vector<Vertex>& perm);

}  // namespace mixcay
