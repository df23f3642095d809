#pragma once

// Machine-readable report documents and fixed-width text tables.

#include "partact/decomposition.hpp"
#include "partact/structure.hpp"
#include "partact/xverify.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace partact {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::uint64_t fnv1a64(std::string_view data);
/// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string instance_digest(const PartialAction& pa);

Json document(const std::string& command, Json options, const std::optional<std::string>& digest, Json payload);

Json validation_json(const PartialAction& pa, const ValidationReport& report);
/// `relabel` maps summand point indices back to original indices.
Json certificate_json(const DecompositionCertificate& cert, const std::vector<Point>* relabel = nullptr);
Json refutation_json(const DecompositionRefutation& ref);
Json stratification_json(const Stratification& s, const StratificationCheck& check);
Json structure_json(const StructureReport& r);
Json fixed_point_json(const FixedPointReport& r);
Json globalization_json(const GlobalizedAction& g, const EnvelopingCheck& check);
Json verification_json(const VerificationReport& r);

std::string validation_text(const PartialAction& pa, const ValidationReport& report);
std::string certificate_text(const DecompositionCertificate& cert, const std::vector<Point>* relabel = nullptr);
std::string refutation_text(const DecompositionRefutation& ref);
std::string stratification_text(const Stratification& s, const StratificationCheck& check);
std::string structure_text(const StructureReport& r);
std::string fixed_point_text(const FixedPointReport& r);
std::string globalization_text(const GlobalizedAction& g, const EnvelopingCheck& check);
std::string verification_text(const VerificationReport& r);

}  // namespace partact
