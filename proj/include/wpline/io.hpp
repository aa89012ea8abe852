#pragma once

#include <json.hpp>

#include <string>

#include "wpline/exchange.hpp"
#include "wpline/pathalg.hpp"
#include "wpline/qp.hpp"
#include "wpline/survey.hpp"

namespace wpline {

inline constexpr const char* kToolVersion = "wpline 0.1.0";

// metadata block embedded in every report: version, order, caps, parameters
nlohmann::json report_metadata(int cap);

nlohmann::json algebra_to_json(const AlgebraPresentation& a);
AlgebraPresentation algebra_from_json(const nlohmann::json& j);

nlohmann::json qp_to_json(const GradedQP& p);
GradedQP qp_from_json(const nlohmann::json& j);

nlohmann::json survey_to_json(const Weights& w, const SurveyResult& r, int cap);

nlohmann::json exchange_to_json(const ExchangeResult& r, int cap);
std::string exchange_to_dot(const ExchangeResult& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace wpline
