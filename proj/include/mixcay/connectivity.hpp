#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/digraph.hpp"

namespace mixcay {

inline constexpr std::size_t kDefaultAtomCap = 20;
inline constexpr std::size_t kHardSubsetLimit = 26;

struct CutResult {
  std::size_t lambda = 0;
  std::vector<Arc> witness_cut;
};

/// Arc connectivity by unit-capacity max flow, minimised over s->v and v->s
/// for the fixed source s = 0 and every v != s. Throws Error(not_strong) on
/// input that is not strongly connected.
CutResult arc_connectivity(const Digraph& x);

/// Exact lambda by scanning every proper nonempty subset. Independent of the
/// flow code; throws Error(capacity) above `cap` vertices.
std::size_t arc_connectivity_bruteforce(const Digraph& x,
                                        std::size_t cap = kDefaultAtomCap);

struct ArcFragment {
  VertexSet vertices;
  Sign sign = Sign::positive;
  std::size_t boundary_size = 0;
  friend bool operator==(const ArcFragment&, const ArcFragment&) = default;
};

struct LayerSplit {
  std::size_t layer0 = 0;
  std::size_t layer1 = 0;
  friend bool operator==(const LayerSplit&, const LayerSplit&) = default;
};

/// Degrees of the subdigraph induced by a fragment A of a mixed Cayley
/// digraph: X[A ∩ X_i] is r_i-regular, every vertex of A ∩ X_0 sends p arcs
/// into A ∩ X_1 and receives q arcs from it.
struct DegreeProfile {
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

struct AtomReport {
  Sign sign = Sign::positive;
  std::size_t lambda = 0;
  std::vector<ArcFragment> atoms;
  // Empty when no fragment has two or more vertices.
  std::vector<ArcFragment> superatoms;
  // Filled only when a layer size was supplied.
  std::vector<LayerSplit> atom_layer_split;
  std::vector<std::optional<DegreeProfile>> induced_degree_profile;
  std::vector<LayerSplit> superatom_layer_split;
  std::vector<std::optional<DegreeProfile>> superatom_degree_profile;
};

/// Every fragment of minimum cardinality for `sign`, plus superatoms.
/// `layer_size` is |G| for digraphs built by build_mixed.
AtomReport lambda_atoms(const Digraph& x, Sign sign,
                        std::optional<std::size_t> layer_size = std::nullopt,
                        std::size_t cap = kDefaultAtomCap);

LayerSplit layer_split(const VertexSet& a, std::size_t layer_size);
std::optional<DegreeProfile> degree_profile(const Digraph& x, const VertexSet& a,
                                            std::size_t layer_size);

/// True when `cut` is exactly the out-arc set or the in-arc set of a vertex.
bool is_vertex_arc_set(const Digraph& x, const std::vector<Arc>& cut);

struct SuperLambdaResult {
  bool super_lambda = true;
  // A fragment whose minimum cut is not a vertex in/out arc set.
  std::optional<ArcFragment> witness;
};

/// Exhaustive route: every minimum cut is inspected. Throws Error(capacity)
/// above `cap` vertices.
SuperLambdaResult is_super_lambda_exhaustive(const Digraph& x,
                                             std::size_t cap = kDefaultAtomCap);

/// Flow route: looks for a minimum cut forced to contain arc certificates
/// that no vertex in/out arc set can contain.
SuperLambdaResult is_super_lambda_flow(const Digraph& x);

/// Exhaustive when |V| <= cap, flow route otherwise.
SuperLambdaResult is_super_lambda(const Digraph& x,
                                  std::size_t cap = kDefaultAtomCap);

/// A fragment A with |A| >= 2 and |V \ A| >= 2. The flow route contracts
/// every ordered pair of disjoint 2-vertex groups.
bool has_nontrivial_fragment_flow(const Digraph& x);
bool has_nontrivial_fragment_exhaustive(const Digraph& x,
                                        std::size_t cap = kDefaultAtomCap);

/// Lexicographically least arc list among all minimum cuts.
std::vector<Arc> least_minimum_cut(const Digraph& x,
                                   std::size_t cap = kDefaultAtomCap);

enum class CheckStatus { pass, fail, not_applicable };
const char* to_string(CheckStatus status) noexcept;

struct PropertyOutcome {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;
};

/// Structural facts about atoms of a mixed Cayley digraph. With lambda <
/// delta the atom lemmas are evaluated; with lambda == delta only the
/// superatom size bound applies.
std::vector<PropertyOutcome> atom_structure_checks(const Digraph& x,
                                                   const AtomReport& report,
                                                   std::size_t layer_size,
                                                   std::size_t delta);

}  // namespace mixcay
