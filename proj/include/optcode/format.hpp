#pragma once

// Number formatting and JSON views of the library's result types.

#include <string>

#include <json.hpp>

#include "optcode/assign.hpp"
#include "optcode/codebook.hpp"
#include "optcode/corpus.hpp"
#include "optcode/maxent.hpp"
#include "optcode/randtype.hpp"

namespace optcode::format {

// Shortest decimal that parses back to the same double.
std::string shortest(double value);

inline constexpr const char* kCodeTableSchema = "optcode.codetable/1";
inline constexpr const char* kFitSchema = "optcode.fit/1";
inline constexpr const char* kAnalysisSchema = "optcode.analysis/1";
inline constexpr const char* kSimulationSchema = "optcode.simulation/1";
inline constexpr const char* kOracleSchema = "optcode.oracle/1";

nlohmann::ordered_json to_json(const codebook::CodeTable& table);
nlohmann::ordered_json to_json(const maxent::FitResult& fit);
nlohmann::ordered_json to_json(const corpus::AbbreviationResult& result);
nlohmann::ordered_json to_json(const corpus::RecodingResult& result, bool include_code);
nlohmann::ordered_json to_json(const corpus::ModelComparison& models);
nlohmann::ordered_json to_json(const corpus::AnalysisReport& report);
nlohmann::ordered_json to_json(const randtype::OptimalityReport& report);
nlohmann::ordered_json to_json(const assign::RankedDistribution& dist);
nlohmann::ordered_json to_json(const assign::Assignment& asg);

}  // namespace optcode::format
