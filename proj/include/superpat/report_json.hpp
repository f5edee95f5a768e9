#pragma once

#include "json.hpp"

#include "superpat/constructions.hpp"
#include "superpat/containment.hpp"
#include "superpat/perm.hpp"
#include "superpat/verify.hpp"
#include "superpat/zigzag.hpp"

namespace superpat {

using nlohmann::json;

// Structured report encodings. Keys hold only reproducible content; wall
// times and other run-dependent diagnostics are kept out so documents can
// be compared byte for byte across runs and worker counts (the CLI emits
// those separately under a "runtime" section).

json to_json(const Permutation& p);
json to_json(const Word& w);
json to_json(const IndexSet& ix);
json to_json(const Witness& w);
json to_json(const WordWitness& w);
json to_json(const ScoreReport& report);
json to_json(const ConstructionResult& result);
json to_json(const BoundsReport& report);
json to_json(const VerificationReport& report, bool include_witnesses = true);
json to_json(const SearchResult& result);
json to_json(const IdentityReport& report);
json to_json(const EmbeddingReport& report, CyclicSemantics gate);

/// Serialization with a stable key order and no whitespace variation.
std::string canonical_dump(const json& doc);

}  // namespace superpat
