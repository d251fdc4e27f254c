#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "collabind/boost.hpp"
#include "collabind/categories.hpp"
#include "collabind/indicators.hpp"
#include "collabind/ric.hpp"
#include "json.hpp"

namespace collabind::report {

// CSV emitters round to two decimals; JSON emitters carry full precision.
// Undefined values are empty CSV cells and JSON nulls.

void year_series_csv(std::ostream& out, const YearSeries& series);
nlohmann::ordered_json year_series_json(const YearSeries& series);

void impact_csv(std::ostream& out, const ImpactSummary& summary);
nlohmann::ordered_json impact_json(const ImpactSummary& summary);

void first_author_csv(std::ostream& out, const FirstAuthorShare& share);
nlohmann::ordered_json first_author_json(const FirstAuthorShare& share);

void ric_csv(std::ostream& out, const std::vector<RicPoint>& points);
nlohmann::ordered_json ric_json(const std::vector<RicPoint>& points);

void categories_csv(std::ostream& out, const std::vector<CategoryCount>& top);
nlohmann::ordered_json categories_json(const std::vector<CategoryCount>& top);

void breadth_csv(std::ostream& out, const std::map<int, std::size_t>& breadth);
nlohmann::ordered_json breadth_json(const std::map<int, std::size_t>& breadth);

nlohmann::ordered_json boost_json(const BoostReport& report, const std::string& focal,
                                  const std::string& partner);
void boost_csv(std::ostream& out, const BoostReport& report);

// Field escaping for CSV cells containing ',', '"' or newlines.
std::string csv_escape(const std::string& cell);

}  // namespace collabind::report
