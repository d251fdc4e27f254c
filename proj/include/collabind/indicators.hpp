#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "collabind/record.hpp"

namespace collabind {

struct YearCounts {
  int year = 0;
  std::uint64_t total = 0;
  std::uint64_t indigenous = 0;
  std::uint64_t icp = 0;
  std::uint64_t bilateral = 0;
};

// Counts plus unrounded percentages for one year (or the totals row).
struct YearRow {
  int year = 0;  // 0 on the totals row
  std::uint64_t total = 0;
  std::uint64_t indigenous = 0;
  std::uint64_t icp = 0;
  std::uint64_t bilateral = 0;
  std::optional<double> indigenous_pct;
  std::optional<double> icp_pct;
  std::optional<double> bilateral_share_of_icp_pct;  // null when icp == 0
};

struct SeriesCagr {
  std::optional<double> total;
  std::optional<double> indigenous;
  std::optional<double> icp;
  std::optional<double> bilateral;
};

// Year-wise class shares. Rows are sorted by year.
class YearSeries {
 public:
  // Throws Error(InvalidArgument) if any row violates
  // indigenous + icp == total or bilateral <= icp, or years repeat.
  static YearSeries from_counts(std::vector<YearCounts> counts);

  const std::vector<YearRow>& rows() const { return rows_; }
  const YearRow& totals() const { return totals_; }
  // CAGR of each column between the first and last row; null where the first
  // count is zero or fewer than two rows exist.
  SeriesCagr cagr() const;

 private:
  std::vector<YearRow> rows_;
  YearRow totals_;
};

YearRow make_year_row(const YearCounts& counts);

YearSeries year_series(const Corpus& corpus, std::string_view focal, std::string_view partner);

// 100 * ((last / first)^(1 / periods) - 1). Throws ZeroBase when first == 0
// and NonPositivePeriods when periods < 1.
double cagr(double first, double last, int periods);

struct ImpactRow {
  std::uint64_t paper_count = 0;
  std::uint64_t cited_count = 0;  // times_cited >= 1
  std::uint64_t citation_sum = 0;
  std::optional<double> cited_pct;
  std::optional<double> cpp;

  static ImpactRow from_totals(std::uint64_t papers, std::uint64_t cited, std::uint64_t citations);
};

struct ImpactSummary {
  ImpactRow tp;
  ImpactRow non_icp;
  ImpactRow icp;
  ImpactRow bilateral;
};

ImpactSummary impact_summary(const Corpus& corpus, std::string_view focal,
                             std::string_view partner);

struct FirstAuthorRow {
  int year = 0;
  std::uint64_t resolved = 0;
  std::uint64_t focal_first = 0;
  std::uint64_t unresolved = 0;
  std::optional<double> pct;  // null when nothing resolved
};

struct FirstAuthorShare {
  std::vector<FirstAuthorRow> rows;  // years with at least one bilateral record
  std::uint64_t unresolved_total = 0;
};

FirstAuthorShare first_author_share(const Corpus& corpus, std::string_view focal,
                                    std::string_view partner);

}  // namespace collabind
