#include "collabind/report.hpp"

#include <cmath>

#include "collabind/strings.hpp"

namespace collabind::report {
namespace {

using nlohmann::ordered_json;

std::string cell(const std::optional<double>& v) {
  return v ? text::format_fixed(*v, 2) : std::string();
}

ordered_json value(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

void write_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << csv_escape(c);
    first = false;
  }
  out << '\n';
}

ordered_json year_row_json(const YearRow& r) {
  return {{"total", r.total},
          {"indigenous", r.indigenous},
          {"indigenous_pct", value(r.indigenous_pct)},
          {"icp", r.icp},
          {"icp_pct", value(r.icp_pct)},
          {"bilateral", r.bilateral},
          {"bilateral_share_of_icp_pct", value(r.bilateral_share_of_icp_pct)}};
}

ordered_json impact_row_json(const ImpactRow& r) {
  return {{"paper_count", r.paper_count},
          {"cited_count", r.cited_count},
          {"citation_sum", r.citation_sum},
          {"cited_pct", value(r.cited_pct)},
          {"cpp", value(r.cpp)}};
}

}  // namespace

std::string csv_escape(const std::string& c) {
  if (c.find_first_of(",\"\n\r") == std::string::npos) return c;
  std::string out = "\"";
  for (char ch : c) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void year_series_csv(std::ostream& out, const YearSeries& series) {
  write_row(out, {"year", "total", "indigenous", "indigenous_pct", "icp", "icp_pct", "bilateral",
                  "bilateral_share_of_icp_pct"});
  auto emit = [&](const std::string& label, const YearRow& r) {
    write_row(out, {label, std::to_string(r.total), std::to_string(r.indigenous),
                    cell(r.indigenous_pct), std::to_string(r.icp), cell(r.icp_pct),
                    std::to_string(r.bilateral), cell(r.bilateral_share_of_icp_pct)});
  };
  for (const auto& r : series.rows()) emit(std::to_string(r.year), r);
  emit("Total", series.totals());
  auto g = series.cagr();
  write_row(out, {"CAGR", cell(g.total), cell(g.indigenous), "", cell(g.icp), "", cell(g.bilateral),
                  ""});
}

ordered_json year_series_json(const YearSeries& series) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : series.rows()) {
    ordered_json j{{"year", r.year}};
    j.update(year_row_json(r));
    rows.push_back(std::move(j));
  }
  auto g = series.cagr();
  return {{"rows", rows},
          {"totals", year_row_json(series.totals())},
          {"cagr_pct",
           {{"total", value(g.total)},
            {"indigenous", value(g.indigenous)},
            {"icp", value(g.icp)},
            {"bilateral", value(g.bilateral)}}}};
}

void impact_csv(std::ostream& out, const ImpactSummary& s) {
  write_row(out, {"metric", "TP", "NonICP", "ICP", "Bilateral"});
  const ImpactRow* rows[] = {&s.tp, &s.non_icp, &s.icp, &s.bilateral};
  auto count_row = [&](const char* name, std::uint64_t ImpactRow::*field) {
    write_row(out, {name, std::to_string(rows[0]->*field), std::to_string(rows[1]->*field),
                    std::to_string(rows[2]->*field), std::to_string(rows[3]->*field)});
  };
  auto pct_row = [&](const char* name, std::optional<double> ImpactRow::*field) {
    write_row(out, {name, cell(rows[0]->*field), cell(rows[1]->*field), cell(rows[2]->*field),
                    cell(rows[3]->*field)});
  };
  count_row("papers", &ImpactRow::paper_count);
  pct_row("cited_pct", &ImpactRow::cited_pct);
  pct_row("cpp", &ImpactRow::cpp);
  count_row("cited_count", &ImpactRow::cited_count);
  count_row("citation_sum", &ImpactRow::citation_sum);
}

ordered_json impact_json(const ImpactSummary& s) {
  return {{"TP", impact_row_json(s.tp)},
          {"NonICP", impact_row_json(s.non_icp)},
          {"ICP", impact_row_json(s.icp)},
          {"Bilateral", impact_row_json(s.bilateral)}};
}

void first_author_csv(std::ostream& out, const FirstAuthorShare& share) {
  write_row(out, {"year", "resolved", "focal_first", "unresolved", "focal_first_pct"});
  for (const auto& r : share.rows)
    write_row(out, {std::to_string(r.year), std::to_string(r.resolved),
                    std::to_string(r.focal_first), std::to_string(r.unresolved), cell(r.pct)});
}

ordered_json first_author_json(const FirstAuthorShare& share) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : share.rows)
    rows.push_back({{"year", r.year},
                    {"resolved", r.resolved},
                    {"focal_first", r.focal_first},
                    {"unresolved", r.unresolved},
                    {"focal_first_pct", value(r.pct)}});
  return {{"rows", rows}, {"unresolved_total", share.unresolved_total}};
}

void ric_csv(std::ostream& out, const std::vector<RicPoint>& points) {
  write_row(out, {"year", "partner", "ric", "flag"});
  for (const auto& p : points) {
    std::string v;
    if (p.ric.value) v = std::isinf(*p.ric.value) ? "inf" : text::format_fixed(*p.ric.value, 2);
    // Year 0 marks a value computed from a whole (external) table.
    write_row(out, {p.year == 0 ? "all" : std::to_string(p.year), p.partner, v,
                    std::string(to_string(p.ric.flag))});
  }
}

ordered_json ric_json(const std::vector<RicPoint>& points) {
  ordered_json rows = ordered_json::array();
  for (const auto& p : points)
    rows.push_back({{"year", p.year},
                    {"partner", p.partner},
                    {"ric", value(p.ric.value)},
                    {"flag", std::string(to_string(p.ric.flag))}});
  return rows;
}

void categories_csv(std::ostream& out, const std::vector<CategoryCount>& top) {
  write_row(out, {"rank", "category", "papers"});
  for (std::size_t i = 0; i < top.size(); ++i)
    write_row(out, {std::to_string(i + 1), top[i].first, std::to_string(top[i].second)});
}

ordered_json categories_json(const std::vector<CategoryCount>& top) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < top.size(); ++i)
    rows.push_back({{"rank", i + 1}, {"category", top[i].first}, {"papers", top[i].second}});
  return rows;
}

void breadth_csv(std::ostream& out, const std::map<int, std::size_t>& breadth) {
  write_row(out, {"year", "distinct_categories"});
  for (const auto& [year, n] : breadth) write_row(out, {std::to_string(year), std::to_string(n)});
}

ordered_json breadth_json(const std::map<int, std::size_t>& breadth) {
  ordered_json rows = ordered_json::array();
  for (const auto& [year, n] : breadth) rows.push_back({{"year", year}, {"distinct_categories", n}});
  return rows;
}

ordered_json boost_json(const BoostReport& r, const std::string& focal,
                        const std::string& partner) {
  const auto& in = r.inputs;
  ordered_json undefined = ordered_json::object();
  if (!r.gamma_c) undefined["gamma_c"] = r.gamma_undefined_reason;
  if (!r.delta_c) undefined["delta_c"] = r.delta_undefined_reason;
  auto display = [](const std::optional<double>& v) -> ordered_json {
    if (!v) return nullptr;
    return text::round_half_up(*v, 2);
  };
  return {
      {"focal", focal},
      {"partner", partner},
      {"citedness_mode", std::string(to_string(r.mode))},
      {"inputs",
       {{"t_ip", in.t_ip},
        {"t_ipus", in.t_ipus},
        {"t_ic", in.t_ic},
        {"t_icus", in.t_icus},
        {"t_ip_cited", in.t_ip_cited},
        {"t_ipus_cited_combined", in.t_ipus_cited_combined}}},
      {"beta_p_pct", r.beta_p_pct},
      {"beta_c_pct", r.beta_c_pct},
      {"gamma_c", value(r.gamma_c)},
      {"beta_rc_pct", r.beta_rc_pct},
      {"delta_c", value(r.delta_c)},
      {"undefined", undefined},
      {"display",
       {{"beta_p_pct", display(r.beta_p_pct)},
        {"beta_c_pct", display(r.beta_c_pct)},
        {"gamma_c", display(r.gamma_c)},
        {"beta_rc_pct", display(r.beta_rc_pct)},
        {"delta_c", display(r.delta_c)}}},
      {"labels",
       {{"dependence_productivity", std::string(to_string(r.dependence_productivity))},
        {"dependence_impact", std::string(to_string(r.dependence_impact))},
        {"rewarding", std::string(to_string(r.rewarding))},
        {"citedness_note", std::string(to_string(r.note))}}},
  };
}

void boost_csv(std::ostream& out, const BoostReport& r) {
  write_row(out, {"indicator", "value", "label"});
  write_row(out, {"beta_p_pct", cell(r.beta_p_pct), std::string(to_string(r.dependence_productivity))});
  write_row(out, {"beta_c_pct", cell(r.beta_c_pct), std::string(to_string(r.dependence_impact))});
  write_row(out, {"gamma_c", cell(r.gamma_c), std::string(to_string(r.rewarding))});
  write_row(out, {"beta_rc_pct", cell(r.beta_rc_pct), std::string(to_string(r.note))});
  write_row(out, {"delta_c", cell(r.delta_c), ""});
}

}  // namespace collabind::report
