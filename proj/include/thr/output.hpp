#pragma once

#include "thr/engine.hpp"
#include "thr/reference.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace thr {

using Json = nlohmann::ordered_json;

enum class PolyFormat { Plain, Latex };

/// Descending powers: "t^3 - 6t^2 + 12t - 8" or "t^{3} - 6t^{2} + 12t - 8".
std::string format_polynomial(const IntPolynomial& p, PolyFormat format);

/// Reads either format back. Throws std::invalid_argument on malformed text.
IntPolynomial parse_polynomial(const std::string& text);

Json bigint_array(const std::vector<BigInt>& values);
std::vector<BigInt> bigint_array_values(const Json& array);

/// Document with the canonical key order
/// n, k, l, family, k_eff, coefficients, regions, samples, verdict, runtime_ms.
/// Big integers are decimal strings; coefficients ascend.
Json chi_document(const CharPolyResult& result, std::optional<Verdict> verdict, long runtime_ms);

/// Serialization with every runtime_ms member removed, for byte comparisons.
std::string canonical_dump(const Json& doc);

}  // namespace thr
