#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/mixed_cayley.hpp"
#include "mixcay/report.hpp"

namespace mixcay {

struct InstanceSpaceSpec {
  std::vector<std::string> groups;  // Zn, Dn, Sn, products
  std::size_t s_max = 2;
  std::size_t t_min = 1;
  std::size_t t_max = 2;
  bool require_strong = true;
  // A group whose candidate count exceeds the limit is sampled (without
  // replacement, seeded) down to the limit; smaller groups are enumerated.
  std::optional<std::size_t> sample_limit;
  std::uint64_t seed = 0;
  std::size_t atom_cap = kDefaultAtomCap;
  std::size_t group_cap = kDefaultGroupCap;
  // Listed instances are checked after the enumerated ones.
  std::vector<MixedCayleyParams> instances;
  unsigned threads = 0;  // 0: hardware concurrency
};

InstanceSpaceSpec space_from_json(const Json& j);
Json space_to_json(const InstanceSpaceSpec& s);

/// Candidates of one group in enumeration order: (S0, S1, T0, T1) bitmasks
/// ranked lexicographically, S sets avoiding the identity. Applies the
/// sampling rule of `spec`.
std::vector<MixedCayleyParams> enumerate_group(const Group& g, const InstanceSpaceSpec& spec);

/// Number of candidates of one group before sampling.
std::size_t candidate_count(std::size_t group_order, const InstanceSpaceSpec& spec);

struct PredicateTally {
  std::size_t checked = 0;
  std::size_t agreements = 0;
};

struct Mismatch {
  std::string predicate;
  Json params;
  std::string direct;
  std::string theorem;
};

struct Finding {
  std::string kind;
  Json params;
  std::string detail;
};

struct SkipRecord {
  Json params;
  std::string reason;
};

struct CrosscheckResult {
  std::size_t instances_total = 0;
  std::size_t instances_strong = 0;
  std::size_t instances_not_strong = 0;
  std::size_t max_lambda_instances = 0;
  std::size_t not_max_lambda_instances = 0;
  std::size_t excluded_by_hypotheses = 0;

  // Keyed by predicate name; agreements + mismatches of that name == checked.
  std::map<std::string, PredicateTally> tallies;
  std::map<std::string, std::size_t> max_lambda_conditions;
  std::map<std::string, std::size_t> super_lambda_conditions;
  std::map<std::string, std::size_t> gamma_labels;
  std::size_t literal_reading_disagreements = 0;

  std::vector<Mismatch> mismatches;
  std::vector<Finding> findings;
  std::vector<SkipRecord> skips;

  std::size_t mismatch_count(const std::string& predicate) const;
  std::size_t agreements(const std::string& predicate) const;
  std::size_t checked(const std::string& predicate) const;
  bool ok() const { return mismatches.empty(); }
};

// Predicate names used in tallies and mismatches.
namespace predicate {
inline constexpr const char* lambda_oracle = "lambda_flow_vs_subsets";
inline constexpr const char* degree_formula = "degree_formula";
inline constexpr const char* right_translation = "right_translation_automorphism";
inline constexpr const char* max_lambda = "max_lambda_theorem";
inline constexpr const char* max_lambda_witness = "max_lambda_witness";
inline constexpr const char* atom_lemmas = "atom_lemmas";
inline constexpr const char* gamma_total = "gamma_total";
inline constexpr const char* gamma_pairing = "gamma_pairing";
inline constexpr const char* super_routes = "super_lambda_routes";
inline constexpr const char* super_lambda = "super_lambda_theorem";
inline constexpr const char* super_lambda_witness = "super_lambda_witness";
inline constexpr const char* class_g = "class_G_one_layer_superatom";
inline constexpr const char* superatom_size = "superatom_size_at_least_delta";
inline constexpr const char* superatom_disjoint = "superatoms_pairwise_disjoint";
}  // namespace predicate

/// Checks one instance and folds it into `result`.
void crosscheck_instance(const MixedCayleyParams& p, const InstanceSpaceSpec& spec,
                         CrosscheckResult& result);

CrosscheckResult run_crosscheck(const InstanceSpaceSpec& spec);

/// Byte-deterministic for a given spec.
Json crosscheck_document(const InstanceSpaceSpec& spec, const CrosscheckResult& r);

}  // namespace mixcay
