#include <gtest/gtest.h>

#include <random>

#include "mixcay/digraph.hpp"
#include "mixcay/error.hpp"

using namespace mixcay;

namespace {

Digraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Digraph(n, arcs);
}

Digraph complete(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

}  // namespace

TEST(Digraph, RejectsLoopsAndParallelArcs) {
  EXPECT_THROW(Digraph(2, {{0, 0}}), Error);
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(Digraph(2, {{0, 2}}), Error);
}

TEST(Digraph, AdjacencyConsistent) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const Digraph x = random_digraph(7, 0.3, rng);
    std::size_t total = 0;
    for (Vertex u = 0; u < 7; ++u) {
      for (Vertex v : x.out(u)) {
        const auto in = x.in(v);
        EXPECT_NE(std::find(in.begin(), in.end(), u), in.end());
        ++total;
      }
    }
    EXPECT_EQ(total, x.arc_count());
    EXPECT_EQ(x.arcs().size(), x.arc_count());
    const auto all = x.arcs();
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Digraph, Degrees) {
  const DegreeSummary c = degrees(cycle(4));
  EXPECT_EQ(c.delta_plus, 1u);
  EXPECT_EQ(c.delta_minus, 1u);
  EXPECT_EQ(c.delta, 1u);
  const DegreeSummary k = degrees(complete(4));
  EXPECT_EQ(k.delta, 3u);
  EXPECT_THROW(degrees(Digraph(0, {})), Error);
}

TEST(Digraph, StrongConnectivity) {
  EXPECT_TRUE(is_strongly_connected(cycle(5)));
  EXPECT_TRUE(is_strongly_connected(Digraph(1, {})));
  EXPECT_FALSE(is_strongly_connected(Digraph(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}})));
  const auto comps = strongly_connected_components(Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}}));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{2}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{3}));
}

TEST(Digraph, SccMatchesReachability) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const Digraph x = random_digraph(8, 0.18, rng);
    // Reachability by repeated relaxation.
    std::vector<std::vector<bool>> r(8, std::vector<bool>(8, false));
    for (Vertex v = 0; v < 8; ++v) r[v][v] = true;
    for (int it = 0; it < 8; ++it)
      for (const Arc& a : x.arcs())
        for (Vertex s = 0; s < 8; ++s)
          if (r[s][a.tail]) r[s][a.head] = true;
    const auto comps = strongly_connected_components(x);
    std::vector<int> comp_of(8, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v)
        EXPECT_EQ(comp_of[u] == comp_of[v], r[u][v] && r[v][u]);
  }
}

TEST(Digraph, ArcBoundary) {
  const Digraph c = cycle(6);
  for (Vertex v = 0; v < 6; ++v)
    EXPECT_EQ(arc_boundary(c, VertexSet(6, {v}), Sign::positive).size(), 1u);
  EXPECT_THROW(arc_boundary(c, VertexSet(6, {0, 1, 2, 3, 4, 5}), Sign::positive), Error);
  EXPECT_THROW(arc_boundary(c, VertexSet(6, std::vector<Vertex>{}), Sign::negative), Error);
}

TEST(Digraph, BoundaryDuality) {
  std::mt19937_64 rng(3);
  // Exhaustive on small graphs: omega-(A) == omega+(V \ A).
  for (int rep = 0; rep < 10; ++rep) {
    const Digraph x = random_digraph(6, 0.4, rng);
    for (std::uint64_t m = 1; m + 1 < (1u << 6); ++m) {
      const VertexSet a = VertexSet::from_mask(6, m);
      EXPECT_EQ(arc_boundary(x, a, Sign::negative), arc_boundary(x, a.complement(), Sign::positive));
    }
  }
  // Sampled on larger ones.
  for (int rep = 0; rep < 50; ++rep) {
    const Digraph x = random_digraph(14, 0.25, rng);
    const std::uint64_t m = 1 + rng() % ((1u << 14) - 2);
    const VertexSet a = VertexSet::from_mask(14, m);
    EXPECT_EQ(arc_boundary(x, a, Sign::negative), arc_boundary(x, a.complement(), Sign::positive));
  }
}

TEST(Digraph, InducedReverseSymmetric) {
  const Digraph two(3, {{0, 1}, {1, 0}, {1, 2}});
  const auto ind = induced_subdigraph(two, VertexSet(3, {0, 1}));
  EXPECT_EQ(ind.graph.vertex_count(), 2u);
  EXPECT_EQ(ind.graph.arc_count(), 2u);
  EXPECT_EQ(ind.parent, (std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_symmetric(cycle(3)));
  EXPECT_TRUE(is_symmetric(complete(3)));
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const Digraph x = random_digraph(7, 0.3, rng);
    EXPECT_EQ(reverse(reverse(x)), x);
  }
}

TEST(Digraph, DotIsDeterministic) {
  const Digraph x(3, {{0, 1}, {1, 2}, {2, 0}}, {"a", "b", "c"});
  const std::string dot = to_dot(x, "T");
  EXPECT_EQ(dot, to_dot(x, "T"));
  EXPECT_EQ(dot,
            "digraph \"T\" {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  2 [label=\"c\"];\n"
            "  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
}
