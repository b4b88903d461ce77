#pragma once

/**
 * @file json_io.hpp
 * @brief JSON renderings of the library's report types.
 *
 * All output is deterministic: nlohmann::json orders keys, scalars use their
 * canonical spelling, and nothing time- or address-dependent is embedded.
 */

#include "jordangh/oracle.hpp"

#include <json.hpp>

namespace jordangh {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kBasisOrderId = "row-major-ij";
inline constexpr const char* kPackingId = "f,g,h:column-major";

/// {"(i,j)": "coeff", ...}, nonzero coordinates only.
nlohmann::json element_json(const Element& e);

/// {"image_of(i,j)": element-json, ...}, one entry per basis element.
nlohmann::json map_json(const LinearMap& m);

/// {"f": map-json, "g": map-json, "h": map-json}.
nlohmann::json triple_json(const DerivationTriple& t);

/// Unpacks a packed triple-vector and renders it as a triple.
nlohmann::json packed_triple_json(const AlgebraPtr& a, const std::vector<Scalar>& packed);

/// {algebra, field, mode, dim, basis: [triple-json, ...]}.
nlohmann::json space_json(const SolutionSpace& s);

/// {relation, dim_a, dim_b, witness?}.
nlohmann::json comparison_json(const ComparisonReport& r, const AlgebraPtr& a);

/// {passed, trials, skipped, seed, witness?}; swap-identity reports also carry
/// the qualifying counters and the inconclusive flag.
nlohmann::json check_report_json(const CheckReport& r, bool swap_counters = false);

/// The envelope every CLI report embeds: version, basis-ordering and
/// packing-layout identifiers, field, seed.
nlohmann::json meta_json(const ScalarDomain& domain, std::uint64_t seed);

}  // namespace jordangh
