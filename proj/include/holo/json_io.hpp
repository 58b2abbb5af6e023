#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "holo/holomorph.hpp"
#include "holo/oracle.hpp"
#include "holo/perfect.hpp"

namespace holo {

// Key order is part of the output contract: identical inputs must serialize
// byte for byte, so every builder uses ordered maps and fixed field order.
using Json = nlohmann::ordered_json;

// {order, mul | mul_hash, labels}. The row-major table is embedded up to
// mul_cap elements; above that only its hash is carried.
Json cayley_json(const CayleyGroup& g, std::size_t mul_cap = 64);

// {order, generators: [image arrays], strategy}.
Json aut_group_json(const AutGroup& a);

// One classified regular subgroup. gamma appears as explicit per-element
// automorphism image arrays up to gamma_cap elements; inner-valued gammas
// additionally carry gamma_inner_of, one canonical conjugator per element,
// at any order. gamma_hash always identifies the map. The iso witness also
// serves as the permutation conjugating the translations onto the subgroup,
// so it appears under both roles.
Json regular_record_json(const RegularRecord& rec, std::size_t gamma_cap = 256);

// {n, factors: [{order, inn_order, members_hash, perfect}], center_order}.
Json krs_json(const KrsDecomposition& krs);

// {count, all_in_H, t_group_type?, decomposition, records}; records carry
// their factor subset next to the classification fields.
Json perfect_enumeration_json(const PerfectJEnumeration& e,
                              const std::optional<TGroupResult>& t,
                              std::size_t gamma_cap = 256);

// {oracle: true, budget_used, count, records}. The caller classifies hits.
Json oracle_enumeration_json(const OracleEnumeration& e,
                             const std::vector<RegularRecord>& classified,
                             std::size_t gamma_cap = 256);

// Canonical dump: two-space indent, trailing newline.
std::string dump_json(const Json& j);

// The same data as an indented key/value report; arrays of scalars print
// inline, nested structures indent. No information beyond the JSON.
std::string render_text(const Json& j);

}  // namespace holo
