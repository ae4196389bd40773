#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "dsc/compression.hpp"
#include "dsc/dimensions.hpp"
#include "dsc/lowerbound.hpp"
#include "dsc/min_compression.hpp"

namespace dsc {

/// CSV with header `m,k_of_m,samples_checked,valid`, one row per report in
/// ascending m. Throws std::invalid_argument on an empty list.
std::string report_table(std::span<const SchemeReport> reports);

nlohmann::ordered_json to_json(const Sample& s);
nlohmann::ordered_json to_json(const SchemeReport& report);
/// `verified` records a fresh verify_witness replay against `cls`.
nlohmann::ordered_json to_json(const ShatterWitness& witness, const ConceptClass& cls);
nlohmann::ordered_json to_json(const DimensionResult& result, const ConceptClass& cls, ShatterKind kind);
nlohmann::ordered_json to_json(const PipelineReport& report);
nlohmann::ordered_json to_json(const MinCompressionResult& result);

/// dump(2) plus a trailing newline.
std::string render(const nlohmann::ordered_json& j);

}  // namespace dsc
