#include "optcode/format.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace optcode::format {

using nlohmann::ordered_json;

std::string shortest(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

ordered_json to_json(const codebook::CodeTable& table) {
  ordered_json entries = ordered_json::array();
  for (std::size_t k = 0; k < table.size(); ++k) {
    entries.push_back({{"rank", k + 1}, {"code", table.codes()[k]}});
  }
  return {{"schema", kCodeTableSchema},
          {"alphabet", table.alphabet().symbols()},
          {"class", codebook::to_string(codebook::classify(table))},
          {"entries", std::move(entries)}};
}

ordered_json to_json(const maxent::FitResult& fit) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : fit.params) params[name] = value;
  return {{"schema", kFitSchema},
          {"family", maxent::to_string(fit.family)},
          {"params", std::move(params)},
          {"log_likelihood", fit.log_likelihood},
          {"n", fit.n},
          {"support", {{"min_rank", 1}, {"max_rank", nullptr}, {"max_observed_rank", fit.max_rank}}},
          {"at_boundary", fit.at_boundary}};
}

ordered_json to_json(const corpus::AbbreviationResult& result) {
  return {{"tau", result.tau},
          {"n_c", result.concordant},
          {"n_d", result.discordant},
          {"z_score", result.z_score},
          {"note", result.note}};
}

ordered_json to_json(const corpus::RecodingResult& result, bool include_code) {
  ordered_json j = {{"L_actual", result.l_actual},
                    {"L_optimal", result.l_optimal},
                    {"efficiency_ratio", result.efficiency_ratio()},
                    {"alphabet", result.code.alphabet().symbols()},
                    {"same_alphabet", result.same_alphabet}};
  if (include_code) {
    ordered_json codes = ordered_json::array();
    for (const auto& c : result.code.codes()) codes.push_back(c);
    j["codes"] = std::move(codes);
  }
  return j;
}

ordered_json to_json(const corpus::ModelComparison& models) {
  ordered_json fits = ordered_json::array();
  for (const auto& f : models.fits) fits.push_back(to_json(f));
  return {{"low_support", models.low_support}, {"fits", std::move(fits)}};
}

ordered_json to_json(const corpus::AnalysisReport& report) {
  ordered_json j = {{"schema", kAnalysisSchema},
                    {"types", report.types},
                    {"tokens", report.tokens},
                    {"abbreviation", to_json(report.abbreviation)}};
  j["recoding"] = report.recoding ? to_json(*report.recoding, false) : ordered_json(nullptr);
  j["models"] = report.models ? to_json(*report.models) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const randtype::OptimalityReport& report) {
  return {{"i_max", report.i_max},
          {"equal_length_equal_probability", report.equal_length_equal_probability},
          {"probability_nonincreasing", report.probability_nonincreasing},
          {"satisfies_optimal_assignment", report.satisfies_optimal_assignment},
          {"uses_all_strings_of_each_length", report.uses_all_strings_of_each_length},
          {"mean_code_length", report.mean_code_length},
          {"passed", report.passed()},
          {"failures", report.failures}};
}

ordered_json to_json(const assign::RankedDistribution& dist) {
  return ordered_json(std::vector<double>(dist.probs().begin(), dist.probs().end()));
}

ordered_json to_json(const assign::Assignment& asg) { return ordered_json(asg.magnitudes); }

}  // namespace optcode::format
