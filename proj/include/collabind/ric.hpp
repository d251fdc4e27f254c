#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "collabind/record.hpp"

namespace collabind {

// Symmetric paper counts between the countries of a fixed system. The
// diagonal is always zero.
class PairwiseCollabTable {
 public:
  explicit PairwiseCollabTable(std::vector<std::string> countries);

  const std::vector<std::string>& countries() const { return countries_; }
  bool contains(std::string_view country) const;

  // Adds one paper: +1 for every unordered in-system pair it covers.
  void add_paper(const std::set<std::string>& paper_countries);
  void add_pair(std::string_view x, std::string_view y, std::uint64_t count);
  // Throws InvalidArgument when the country systems differ.
  void merge(const PairwiseCollabTable& other);

  std::uint64_t count(std::string_view x, std::string_view y) const;
  // C_x = sum over y of C[x][y]
  std::uint64_t row_total(std::string_view x) const;
  // T = sum over unordered pairs
  std::uint64_t total() const;

  bool operator==(const PairwiseCollabTable&) const = default;

 private:
  std::size_t index_of(std::string_view country) const;

  std::vector<std::string> countries_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::uint64_t> counts_;  // row-major n x n
};

PairwiseCollabTable pairwise_table(const Corpus& corpus, const std::vector<std::string>& countries,
                                   std::optional<YearRange> window = std::nullopt);

// External pair-count file: `x,y,count` per line (unordered pair), '#'
// comments. Countries are ordered by first appearance.
PairwiseCollabTable read_pair_table(std::istream& in);

enum class RicFlag { Ok, NoCollaborations, ExclusivePartner };

std::string_view to_string(RicFlag flag);

struct RicValue {
  // Null for NoCollaborations; +infinity for ExclusivePartner.
  std::optional<double> value;
  RicFlag flag = RicFlag::Ok;
};

// C_xy (T - C_x) / (C_x (C_y - C_xy)). Requires x != y, both in the table.
RicValue ric(const PairwiseCollabTable& table, std::string_view x, std::string_view y);

enum class RicMode { Yearly, Cumulative };

struct RicPoint {
  int year = 0;
  std::string partner;
  RicValue ric;
};

// RIC(focal, p) per partner and year. The country system is `system` when
// non-empty, otherwise {focal} plus partners. Points are ordered by year,
// then by partner order.
std::vector<RicPoint> ric_series(const Corpus& corpus, std::string_view focal,
                                 const std::vector<std::string>& partners, YearRange years,
                                 RicMode mode, const std::vector<std::string>& system = {});

}  // namespace collabind
