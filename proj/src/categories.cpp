#include "collabind/categories.hpp"

#include <algorithm>

#include "collabind/error.hpp"
#include "collabind/strings.hpp"

namespace collabind {

std::vector<std::string> split_categories(std::string_view wc) {
  std::vector<std::string> out;
  for (const auto& part : text::split(wc, ';')) {
    auto c = text::trim(part);
    if (!c.empty()) out.emplace_back(c);
  }
  return out;
}

CategoryStats category_stats(const Corpus& corpus, std::string_view focal,
                             std::string_view partner, std::optional<YearRange> years,
                             const std::set<std::string>* universe) {
  CategoryStats stats;
  if (universe) stats.universe_size = universe->size();

  std::map<int, std::set<std::string>> seen;
  for (const auto& r : corpus) {
    if (years && !years->contains(r.year)) continue;
    seen[r.year];
    if (classify(r, focal, partner) != ClassificationLabel::BilateralPartner) continue;
    ++stats.bilateral_papers;
    for (const auto& c : r.categories) {
      ++stats.paper_counts[c];
      seen[r.year].insert(c);
      if (universe && !universe->contains(c)) stats.outside_universe.insert(c);
    }
  }
  if (years)
    for (int y = years->from; y <= years->to; ++y) seen[y];
  for (const auto& [year, cats] : seen) stats.distinct_per_year[year] = cats.size();
  return stats;
}

std::map<int, std::size_t> category_breadth(const Corpus& corpus, std::string_view focal,
                                            std::string_view partner,
                                            std::optional<YearRange> years) {
  return category_stats(corpus, focal, partner, years).distinct_per_year;
}

std::vector<CategoryCount> top_categories(const std::map<std::string, std::uint64_t>& counts,
                                          std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "top-k needs k >= 1");
  std::vector<CategoryCount> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::vector<CategoryCount> top_categories(const Corpus& corpus, std::string_view focal,
                                          std::string_view partner, std::size_t k) {
  return top_categories(category_stats(corpus, focal, partner).paper_counts, k);
}

}  // namespace collabind
