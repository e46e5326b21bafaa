#pragma once

#include <span>

#include "json.hpp"

#include "flagbott/bott.hpp"
#include "flagbott/cohomology.hpp"
#include "flagbott/lr.hpp"
#include "flagbott/vanishing.hpp"

namespace flagbott {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "flagbott/1";

/// Parts array with trailing zeros dropped (the declared length travels
/// separately).
Json parts_json(std::span<const int> parts);

/// {"partition":[...],"mult":n} term array of a decomposition.
Json terms_json(const SchurDecomposition& dec);

Json space_json(const Space& space);

/// {"entries":[{"p","q","terms","dim"}...]} body; terms omitted in dims-only
/// mode. Dimensions are numbers when they fit 64 bits, decimal strings
/// otherwise.
Json table_entries_json(const CohomologyTable& table, bool dims_only);

Json certificate_json(const Certificate& cert, const std::string& bundle_text);

Json big_int_json(const BigInt& value);

}  // namespace flagbott
