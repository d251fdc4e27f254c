#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collabind/record.hpp"

namespace collabind {

inline constexpr std::size_t kDefaultCategoryUniverse = 252;

struct CategoryStats {
  std::map<int, std::size_t> distinct_per_year;
  std::map<std::string, std::uint64_t> paper_counts;
  std::size_t universe_size = kDefaultCategoryUniverse;
  std::set<std::string> outside_universe;  // only filled when a universe list is given
  std::uint64_t bilateral_papers = 0;
};

// Category analytics over the bilateral set. `years` adds zero rows for
// years without bilateral records; `universe` replaces the default size and
// reports categories not in it.
CategoryStats category_stats(const Corpus& corpus, std::string_view focal,
                             std::string_view partner,
                             std::optional<YearRange> years = std::nullopt,
                             const std::set<std::string>* universe = nullptr);

// Distinct bilateral categories per year. Every year present in the corpus
// (or in `years`) gets a row.
std::map<int, std::size_t> category_breadth(const Corpus& corpus, std::string_view focal,
                                            std::string_view partner,
                                            std::optional<YearRange> years = std::nullopt);

using CategoryCount = std::pair<std::string, std::uint64_t>;

// Count descending, then name ascending. Throws InvalidArgument when k < 1.
std::vector<CategoryCount> top_categories(const std::map<std::string, std::uint64_t>& counts,
                                          std::size_t k);
std::vector<CategoryCount> top_categories(const Corpus& corpus, std::string_view focal,
                                          std::string_view partner, std::size_t k);

// Splits a WC value on ';' and trims each entry.
std::vector<std::string> split_categories(std::string_view wc);

}  // namespace collabind
