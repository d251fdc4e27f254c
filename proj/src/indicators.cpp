#include "collabind/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "collabind/error.hpp"

namespace collabind {
namespace {

std::optional<double> percent(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return std::nullopt;
  return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

std::optional<double> column_cagr(std::uint64_t first, std::uint64_t last, int periods) {
  if (first == 0 || periods < 1) return std::nullopt;
  return cagr(static_cast<double>(first), static_cast<double>(last), periods);
}

}  // namespace

YearRow make_year_row(const YearCounts& c) {
  YearRow row;
  row.year = c.year;
  row.total = c.total;
  row.indigenous = c.indigenous;
  row.icp = c.icp;
  row.bilateral = c.bilateral;
  row.indigenous_pct = percent(c.indigenous, c.total);
  row.icp_pct = percent(c.icp, c.total);
  row.bilateral_share_of_icp_pct = percent(c.bilateral, c.icp);
  return row;
}

YearSeries YearSeries::from_counts(std::vector<YearCounts> counts) {
  std::sort(counts.begin(), counts.end(),
            [](const YearCounts& a, const YearCounts& b) { return a.year < b.year; });
  YearSeries series;
  YearCounts totals;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto& c = counts[i];
    if (i > 0 && counts[i - 1].year == c.year)
      throw Error(ErrorKind::InvalidArgument, "year " + std::to_string(c.year) + " repeated");
    if (c.indigenous + c.icp != c.total || c.bilateral > c.icp)
      throw Error(ErrorKind::InvalidArgument,
                  "inconsistent counts for year " + std::to_string(c.year));
    series.rows_.push_back(make_year_row(c));
    totals.total += c.total;
    totals.indigenous += c.indigenous;
    totals.icp += c.icp;
    totals.bilateral += c.bilateral;
  }
  series.totals_ = make_year_row(totals);
  return series;
}

SeriesCagr YearSeries::cagr() const {
  SeriesCagr out;
  if (rows_.size() < 2) return out;
  const auto& a = rows_.front();
  const auto& b = rows_.back();
  const int periods = b.year - a.year;
  out.total = column_cagr(a.total, b.total, periods);
  out.indigenous = column_cagr(a.indigenous, b.indigenous, periods);
  out.icp = column_cagr(a.icp, b.icp, periods);
  out.bilateral = column_cagr(a.bilateral, b.bilateral, periods);
  return out;
}

YearSeries year_series(const Corpus& corpus, std::string_view focal, std::string_view partner) {
  std::map<int, YearCounts> by_year;
  for (const auto& r : corpus) {
    auto& c = by_year[r.year];
    c.year = r.year;
    ++c.total;
    auto label = classify(r, focal, partner);
    if (label == ClassificationLabel::Indigenous) {
      ++c.indigenous;
    } else {
      ++c.icp;
      if (label == ClassificationLabel::BilateralPartner) ++c.bilateral;
    }
  }
  std::vector<YearCounts> counts;
  counts.reserve(by_year.size());
  for (const auto& [year, c] : by_year) counts.push_back(c);
  return YearSeries::from_counts(std::move(counts));
}

double cagr(double first, double last, int periods) {
  if (periods < 1) throw Error(ErrorKind::NonPositivePeriods, "CAGR needs at least one period");
  if (first == 0.0) throw Error(ErrorKind::ZeroBase, "CAGR base count is zero");
  if (first < 0.0 || last < 0.0)
    throw Error(ErrorKind::InvalidArgument, "CAGR needs non-negative counts");
  return 100.0 * (std::pow(last / first, 1.0 / periods) - 1.0);
}

ImpactRow ImpactRow::from_totals(std::uint64_t papers, std::uint64_t cited,
                                 std::uint64_t citations) {
  if (cited > papers) throw Error(ErrorKind::InvalidArgument, "cited count exceeds paper count");
  ImpactRow row;
  row.paper_count = papers;
  row.cited_count = cited;
  row.citation_sum = citations;
  row.cited_pct = percent(cited, papers);
  if (papers > 0) row.cpp = static_cast<double>(citations) / static_cast<double>(papers);
  return row;
}

ImpactSummary impact_summary(const Corpus& corpus, std::string_view focal,
                             std::string_view partner) {
  struct Acc {
    std::uint64_t papers = 0, cited = 0, citations = 0;
    void add(std::uint64_t tc) {
      ++papers;
      cited += tc > 0 ? 1 : 0;
      citations += tc;
    }
    ImpactRow row() const { return ImpactRow::from_totals(papers, cited, citations); }
  };
  Acc tp, non_icp, icp, bilateral;
  for (const auto& r : corpus) {
    auto label = classify(r, focal, partner);
    tp.add(r.times_cited);
    if (label == ClassificationLabel::Indigenous) {
      non_icp.add(r.times_cited);
    } else {
      icp.add(r.times_cited);
      if (label == ClassificationLabel::BilateralPartner) bilateral.add(r.times_cited);
    }
  }
  return {tp.row(), non_icp.row(), icp.row(), bilateral.row()};
}

FirstAuthorShare first_author_share(const Corpus& corpus, std::string_view focal,
                                    std::string_view partner) {
  std::map<int, FirstAuthorRow> by_year;
  FirstAuthorShare out;
  for (const auto& r : corpus) {
    if (classify(r, focal, partner) != ClassificationLabel::BilateralPartner) continue;
    auto& row = by_year[r.year];
    row.year = r.year;
    if (!r.first_author_country) {
      ++row.unresolved;
      ++out.unresolved_total;
      continue;
    }
    ++row.resolved;
    if (*r.first_author_country == focal) ++row.focal_first;
  }
  for (auto& [year, row] : by_year) {
    row.pct = percent(row.focal_first, row.resolved);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace collabind
