#pragma once

#include <string>

#include <json.hpp>

#include "mixcay/analysis.hpp"
#include "mixcay/classification.hpp"
#include "mixcay/mixed_cayley.hpp"

namespace mixcay {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json params_to_json(const MixedCayleyParams& p);
/// Accepts {"group": "Z4", "s0": [2], ...} or, for arbitrary groups,
/// {"table": [[...], ...]}; missing sets are empty. Throws Error(parse).
MixedCayleyParams params_from_json(const Json& j);

Json fragment_to_json(const ArcFragment& f);
Json atom_report_to_json(const AtomReport& r);
Json witness_to_json(const ConditionWitness& w);
Json max_lambda_to_json(const MaxLambdaVerdict& v);
Json super_lambda_to_json(const SuperLambdaVerdict& v);

Json analysis_document(const MixedCayleyParams& p, const InstanceAnalysis& a);
Json classification_document(const MixedCayleyParams& p, std::size_t delta,
                             const MaxLambdaVerdict& max_lambda,
                             const SuperLambdaVerdict& super_lambda);

/// Params plus the explicit vertex and arc lists.
/// Full classify flow: strong connectivity, the max-lambda test, then the
/// super-lambda test when the digraph is max-lambda. Throws
/// Error(not_strong).
Json classify_document(const MixedCayleyParams& p,
                       SubgroupReading reading = SubgroupReading::admit_trivial);

Json graph_document(const MixedCayleyParams& p, const Digraph& x);
Digraph graph_from_json(const Json& j);

}  // namespace mixcay
