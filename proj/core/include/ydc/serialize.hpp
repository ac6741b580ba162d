#pragma once

#include <json.hpp>

#include "ydc/difficulty.hpp"

namespace ydc {

/// Steps encode as [["partition text", "lambda text", k], ...].
nlohmann::json steps_to_json(const ValidSequence& seq);
ValidSequence steps_from_json(const nlohmann::json& j);

/// CLI certificate document: {"schema":1, "target":..., "delta":..., "steps":...}.
nlohmann::json certificate_to_json(const DifficultyResult& result);

/// Parses a certificate document and re-verifies it against its declared
/// target and delta (VerificationError on mismatch).
DifficultyResult certificate_from_json(const nlohmann::json& j);

}  // namespace ydc
