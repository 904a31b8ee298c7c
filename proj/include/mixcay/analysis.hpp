#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/classification.hpp"
#include "mixcay/connectivity.hpp"
#include "mixcay/mixed_cayley.hpp"

namespace mixcay {

struct ConnectivityReport {
  std::size_t lambda = 0;
  std::size_t delta_plus = 0;
  std::size_t delta_minus = 0;
  std::size_t delta = 0;
  bool is_max_lambda = false;
  bool is_super_lambda = false;
  std::vector<Arc> witness_cut;
  std::optional<ArcFragment> nontrivial_cut_witness;
};

/// Direct computation only (flow, subsets); no group theory. Throws
/// Error(not_strong) when x is not strongly connected.
ConnectivityReport analyze_connectivity(const Digraph& x,
                                        std::size_t atom_cap = kDefaultAtomCap);

struct InstanceAnalysis {
  ConnectivityReport connectivity;
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  // Absent when the digraph exceeds the atom cap; see atoms_skipped.
  std::optional<AtomReport> positive;
  std::optional<AtomReport> negative;
  std::string atoms_skipped;
  std::vector<PropertyOutcome> positive_checks;
  std::vector<PropertyOutcome> negative_checks;
  std::optional<GammaOutcome> gamma_positive;
  std::optional<GammaOutcome> gamma_negative;
  // detect_exceptional plus class_G / class_L read off the superatoms.
  std::vector<FamilyLabel> family_labels;
};

InstanceAnalysis analyze_instance(const MixedCayleyParams& p,
                                  std::size_t atom_cap = kDefaultAtomCap);

/// Superatoms proper: the nontrivial fragments of least cardinality over
/// both signs. The per-sign lists in AtomReport minimise within one sign
/// only.
std::vector<ArcFragment> combined_superatoms(const AtomReport& positive,
                                             const AtomReport& negative);

/// True when some (combined) superatom lies inside one layer.
bool has_one_layer_superatom(const AtomReport& positive, const AtomReport& negative,
                             std::size_t layer_size);

}  // namespace mixcay
