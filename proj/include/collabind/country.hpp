#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace collabind {

// Maps raw trailing affiliation segments onto canonical country tokens.
// Lookup is case-insensitive after trimming whitespace and trailing periods.
class CountryNormalizer {
 public:
  // Normalizer seeded with the built-in WoS alias table.
  CountryNormalizer();

  static CountryNormalizer empty();

  // Reads `raw=canonical` lines (`#` starts a comment) and layers them over
  // the current table.
  void load_aliases(std::istream& in);
  void load_aliases_file(const std::filesystem::path& path);

  void add_alias(std::string_view raw, std::string_view canonical);

  // Canonical token for `raw`; unknown tokens come back trimmed but otherwise
  // verbatim.
  std::string normalize(std::string_view raw) const;

  bool is_known(std::string_view raw) const;

  std::size_t size() const { return aliases_.size(); }

 private:
  struct EmptyTag {};
  explicit CountryNormalizer(EmptyTag) {}

  std::map<std::string, std::string, std::less<>> aliases_;
};

// Trims whitespace and trailing periods.
std::string clean_country_segment(std::string_view raw);

}  // namespace collabind
