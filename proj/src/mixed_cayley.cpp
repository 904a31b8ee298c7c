#include "mixcay/mixed_cayley.hpp"

#include <algorithm>

#include "mixcay/error.hpp"

namespace mixcay {

void MixedCayleyParams::validate() const {
  for (const ElementSet* s : {&s0, &s1, &t0, &t1}) {
    if (s->group_order() != group.order() && !(s->empty())) {
      throw Error(ErrorKind::invalid_input, "element set built for a different group");
    }
  }
  if (s0.contains(kIdentity) || s1.contains(kIdentity)) {
    throw Error(ErrorKind::invalid_input,
                "connection sets S0 and S1 may not contain the identity");
  }
}

MixedCayleyParams make_params(Group group, std::vector<Element> s0,
                              std::vector<Element> s1, std::vector<Element> t0,
                              std::vector<Element> t1) {
  const std::size_t n = group.order();
  MixedCayleyParams p{std::move(group), ElementSet(n, std::move(s0)),
                      ElementSet(n, std::move(s1)), ElementSet(n, std::move(t0)),
                      ElementSet(n, std::move(t1))};
  p.validate();
  return p;
}

Digraph build_cayley(const Group& g, const ElementSet& s) {
  if (s.contains(kIdentity)) {
    throw Error(ErrorKind::invalid_input, "connection set contains the identity");
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.order() * s.size());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element e : s) arcs.push_back({x, g.mul(e, x)});
  }
  return Digraph(g.order(), std::move(arcs));
}

namespace {

void append_bicayley_arcs(const Group& g, const ElementSet& t0,
                          const ElementSet& t1, std::vector<Arc>& arcs) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    for (Element t : t0) arcs.push_back({vertex_of(n, x, 0), vertex_of(n, g.mul(t, x), 1)});
    for (Element t : t1) arcs.push_back({vertex_of(n, g.mul(t, x), 1), vertex_of(n, x, 0)});
  }
}

std::vector<std::string> layered_labels(const Group& g) {
  std::vector<std::string> labels;
  labels.reserve(2 * g.order());
  for (int layer = 0; layer < 2; ++layer) {
    for (Element x = 0; x < g.order(); ++x) {
      labels.push_back(std::to_string(x) + "." + std::to_string(layer));
    }
  }
  return labels;
}

}  // namespace

Digraph build_bicayley(const Group& g, const ElementSet& t0, const ElementSet& t1) {
  std::vector<Arc> arcs;
  append_bicayley_arcs(g, t0, t1, arcs);
  return Digraph(2 * g.order(), std::move(arcs), layered_labels(g));
}

Digraph build_mixed(const MixedCayleyParams& p) {
  p.validate();
  const Group& g = p.group;
  const std::size_t n = g.order();
  std::vector<Arc> arcs;
  arcs.reserve(n * (p.s0.size() + p.s1.size() + p.t0.size() + p.t1.size()));
  for (int layer = 0; layer < 2; ++layer) {
    const ElementSet& s = layer == 0 ? p.s0 : p.s1;
    for (Element x = 0; x < n; ++x) {
      for (Element e : s) {
        arcs.push_back({vertex_of(n, x, layer), vertex_of(n, g.mul(e, x), layer)});
      }
    }
  }
  append_bicayley_arcs(g, p.t0, p.t1, arcs);
  return Digraph(2 * n, std::move(arcs), layered_labels(g));
}

std::size_t mixed_min_degree(const MixedCayleyParams& p) {
  return std::min({p.t0.size() + p.s0.size(), p.t1.size() + p.s0.size(),
                   p.t1.size() + p.s1.size(), p.t0.size() + p.s1.size()});
}

MixedCayleyParams reversed_params(const MixedCayleyParams& p) {
  return MixedCayleyParams{p.group, set_inverse(p.group, p.s0),
                           set_inverse(p.group, p.s1), p.t1, p.t0};
}

std::vector<Vertex> right_translation(const MixedCayleyParams& p, Element a) {
  const Group& g = p.group;
  if (!g.contains(a)) throw Error(ErrorKind::invalid_input, "element out of range");
  const std::size_t n = g.order();
  std::vector<Vertex> image(2 * n);
  for (int layer = 0; layer < 2; ++layer) {
    for (Element x = 0; x < n; ++x) {
      image[vertex_of(n, x, layer)] = vertex_of(n, g.mul(x, a), layer);
    }
  }
  return image;
}

bool is_automorphism(const Digraph& x, const std::vector<Vertex>& perm) {
  if (perm.size() != x.vertex_count()) return false;
  std::vector<bool> hit(perm.size(), false);
  for (Vertex v : perm) {
    if (v >= perm.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (const Arc& a : x.arcs()) {
    if (!x.has_arc(perm[a.tail], perm[a.head])) return false;
  }
  // Injective on a finite arc set, so mapping into E means onto E.
  return true;
}

}  // namespace mixcay
