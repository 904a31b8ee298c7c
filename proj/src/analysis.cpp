#include "mixcay/analysis.hpp"

#include <algorithm>
#include <cstdint>

#include "mixcay/error.hpp"

namespace mixcay {

ConnectivityReport analyze_connectivity(const Digraph& x, std::size_t atom_cap) {
  ConnectivityReport r;
  const CutResult cut = arc_connectivity(x);
  const DegreeSummary d = degrees(x);
  r.lambda = cut.lambda;
  r.delta_plus = d.delta_plus;
  r.delta_minus = d.delta_minus;
  r.delta = d.delta;
  r.is_max_lambda = r.lambda == r.delta;
  r.witness_cut = x.vertex_count() <= atom_cap ? least_minimum_cut(x, atom_cap) : cut.witness_cut;
  const SuperLambdaResult s = is_super_lambda(x, atom_cap);
  r.is_super_lambda = r.is_max_lambda && s.super_lambda;
  r.nontrivial_cut_witness = s.witness;
  return r;
}

std::vector<ArcFragment> combined_superatoms(const AtomReport& positive,
                                             const AtomReport& negative) {
  std::size_t best = SIZE_MAX;
  for (const AtomReport* rep : {&positive, &negative})
    if (!rep->superatoms.empty()) best = std::min(best, rep->superatoms.front().vertices.size());
  std::vector<ArcFragment> out;
  for (const AtomReport* rep : {&positive, &negative})
    for (const auto& sa : rep->superatoms)
      if (sa.vertices.size() == best) out.push_back(sa);
  return out;
}

bool has_one_layer_superatom(const AtomReport& positive, const AtomReport& negative,
                             std::size_t layer_size) {
  for (const auto& sa : combined_superatoms(positive, negative)) {
    const LayerSplit s = layer_split(sa.vertices, layer_size);
    if (s.layer0 == 0 || s.layer1 == 0) return true;
  }
  return false;
}

InstanceAnalysis analyze_instance(const MixedCayleyParams& p, std::size_t atom_cap) {
  p.validate();
  const Digraph x = build_mixed(p);
  const std::size_t n = p.group.order();
  InstanceAnalysis a;
  a.vertex_count = x.vertex_count();
  a.arc_count = x.arc_count();
  a.connectivity = analyze_connectivity(x, atom_cap);
  a.family_labels = detect_exceptional(p);

  if (x.vertex_count() > atom_cap) {
    a.atoms_skipped = "vertex count " + std::to_string(x.vertex_count()) +
                      " exceeds atom cap " + std::to_string(atom_cap);
    return a;
  }
  const std::size_t delta = a.connectivity.delta;
  a.positive = lambda_atoms(x, Sign::positive, n, atom_cap);
  a.negative = lambda_atoms(x, Sign::negative, n, atom_cap);
  a.positive_checks = atom_structure_checks(x, *a.positive, n, delta);
  a.negative_checks = atom_structure_checks(x, *a.negative, n, delta);
  if (a.connectivity.lambda < delta) {
    a.gamma_positive = gamma_label(p, *a.positive, delta);
    a.gamma_negative = gamma_label(p, *a.negative, delta);
  } else if (!a.connectivity.is_super_lambda) {
    a.family_labels.push_back(has_one_layer_superatom(*a.positive, *a.negative, n)
                                  ? FamilyLabel::class_G
                                  : FamilyLabel::class_L);
  }
  return a;
}

}  // namespace mixcay
