#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/connectivity.hpp"
#include "mixcay/group.hpp"
#include "mixcay/mixed_cayley.hpp"

namespace mixcay {

struct NamedElement {
  std::string role;  // "s0", "t0'", "t1''", ...
  Element value = 0;
  friend bool operator==(const NamedElement&, const NamedElement&) = default;
};

struct ConditionWitness {
  Subgroup h;
  std::vector<NamedElement> elements;

  std::optional<Element> get(const std::string& role) const;
  friend bool operator==(const ConditionWitness&, const ConditionWitness&) = default;
};

/// Group-theoretic test for lambda < delta over the four subgroup
/// conditions (1..4).
struct MaxLambdaVerdict {
  bool not_max_lambda = false;
  std::optional<int> condition;
  std::optional<ConditionWitness> witness;
};

/// `delta` is the minimum degree of MD(p) (see mixed_min_degree). Searches
/// proper subgroups H with |H| < delta in canonical order: condition number,
/// then (|H|, elements of H), then the designated elements in lexicographic
/// order. Throws Error(capacity) when |G| exceeds `cap`.
MaxLambdaVerdict check_not_max_lambda(const MixedCayleyParams& p, std::size_t delta,
                                      std::size_t cap = kDefaultGroupCap);

/// Evaluates one max-lambda condition for a fixed subgroup and element
/// assignment. Used to re-check witnesses.
bool max_lambda_condition_holds(const MixedCayleyParams& p, std::size_t delta,
                                int condition, const ConditionWitness& w);

enum class FamilyLabel { directed_cycle, symmetric_cycle, family_F, class_G, class_L };
const char* to_string(FamilyLabel label) noexcept;

/// directed_cycle, symmetric_cycle and family_F, recomputed from the
/// parameters (sorted, duplicate-free).
std::vector<FamilyLabel> detect_exceptional(const MixedCayleyParams& p);

/// Condition (1) or (2) of the one-layer superatom characterisation.
struct ClassGWitness {
  int condition = 0;
  Subgroup h;                // S_i ∪ {1}
  std::string singleton_t;   // "t0" or "t1": the T set of size one
};
std::optional<ClassGWitness> check_class_G(const MixedCayleyParams& p);

/// How the size clauses of conditions (3)..(16) treat H = {1}. `literal`
/// demands a non-trivial H; that misses non-super-lambda digraphs whose
/// atoms meet each layer in a single vertex (delta = 1, or delta = 2 with
/// |H| = delta/2), e.g. MD(Z2, {}, {}, {0}, {0,1}).
enum class SubgroupReading { admit_trivial, literal };

struct SatisfiedCondition {
  int condition = 0;
  ConditionWitness witness;
};

struct SuperLambdaVerdict {
  bool applicable = false;
  std::string reason;  // why not applicable
  bool not_super_lambda = false;
  std::optional<int> condition;  // lowest satisfied
  std::optional<ConditionWitness> witness;
  std::vector<SatisfiedCondition> satisfied;  // first witness of every satisfied condition
  std::vector<FamilyLabel> family_labels;
  std::vector<std::string> class_names;  // names of the atom classes of `condition`
  std::vector<std::string> notes;
};

/// Sixteen-condition test for "max-lambda but not super-lambda". The caller
/// guarantees that MD(p) is max-lambda; directed cycles, symmetric cycles
/// and family F yield applicable = false.
SuperLambdaVerdict check_not_super_lambda(
    const MixedCayleyParams& p, std::size_t delta,
    SubgroupReading reading = SubgroupReading::admit_trivial,
    std::size_t cap = kDefaultGroupCap);

bool super_lambda_condition_holds(
    const MixedCayleyParams& p, std::size_t delta, int condition,
    const ConditionWitness& w,
    SubgroupReading reading = SubgroupReading::admit_trivial);

std::vector<std::string> super_lambda_class_names(int condition);

// ---------------------------------------------------------------------------
// Atom-shape taxonomy for lambda < delta.

struct GammaLabel {
  int class_id = 0;  // 1..4
  Sign sign = Sign::positive;  // positive atoms: 1..4, negative atoms: 1'..4'

  std::string name() const;
  friend bool operator==(const GammaLabel&, const GammaLabel&) = default;
};

/// 1 ≡ 1', 3 ≡ 3', 2 ≡ 4', 4 ≡ 2'.
GammaLabel gamma_equivalent(const GammaLabel& label);

struct DeficitVector {
  long s0 = 0;  // |S0| - r0
  long t0 = 0;  // |T0| - p
  long s1 = 0;  // |S1| - r1
  long t1 = 0;  // |T1| - q
  friend bool operator==(const DeficitVector&, const DeficitVector&) = default;
};

struct GammaOutcome {
  std::optional<GammaLabel> label;
  std::optional<DeficitVector> deficits;
  std::string violation;  // non-empty when the atom data fits no class
};

/// Maps the atom degree profile to a class; empty outcome when lambda >=
/// delta.
GammaOutcome gamma_label(const MixedCayleyParams& p, const AtomReport& atoms,
                         std::size_t delta);

}  // namespace mixcay
