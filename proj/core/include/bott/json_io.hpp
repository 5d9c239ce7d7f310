#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bott/bundle.hpp"
#include "bott/char_classes.hpp"
#include "bott/classify.hpp"
#include "bott/ring.hpp"

namespace bott {

using Json = nlohmann::json;

/// {"stages":[{"fiber_dim":N,"summands":[[...],...]}, ...]}. Integers may be
/// JSON numbers or decimal strings. Syntax errors throw ValidationError with
/// where() = "byte N"; shape errors name the JSON path.
TowerSpec parse_tower(std::string_view text);
TowerSpec read_tower(const std::filesystem::path& file);

/// {"base_dims":[...],"exponents":[[...],...]}
LineBundleSum parse_bundle(std::string_view text);
LineBundleSum read_bundle(const std::filesystem::path& file);

Json to_json(const TowerSpec& tower);
Json to_json(const LineBundleSum& bundle);
Json to_json(const IntegerMatrix& m);
/// [{"exponents":[...],"coeff":"..."}, ...] in graded-lex order.
Json to_json(const CohomologyClass& u);
Json to_json(const CharClassReport& report);
Json to_json(const ProductResult& result);
Json to_json(const ClassificationVerdict& verdict);
Json to_json(const ZeroColumnResult& result);

/// Reads a serialized class back into `ring`.
CohomologyClass class_from_json(const BottRing& ring, const Json& j);

/// Basis, relations and graded ranks.
Json ring_summary(const BottRing& ring);

/// Canonical text form used for all output.
std::string dump(const Json& j);

} // namespace bott
