#include "collabind/country.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <utility>

#include "collabind/error.hpp"
#include "collabind/strings.hpp"

namespace collabind {
namespace {

// WoS address spellings. Canonical names are the WoS forms except where the
// WoS form is an abbreviation. UK constituent countries stay distinct.
constexpr std::pair<const char*, const char*> kDefaultAliases[] = {
    {"USA", "USA"},
    {"United States", "USA"},
    {"United States of America", "USA"},
    {"Peoples R China", "China"},
    {"People's Republic of China", "China"},
    {"China", "China"},
    {"U Arab Emirates", "United Arab Emirates"},
    {"United Arab Emirates", "United Arab Emirates"},
    {"Fed Rep Ger", "Germany"},
    {"Germany", "Germany"},
    {"England", "England"},
    {"Scotland", "Scotland"},
    {"Wales", "Wales"},
    {"North Ireland", "North Ireland"},
    {"Northern Ireland", "North Ireland"},
    {"South Korea", "South Korea"},
    {"Korea", "South Korea"},
    {"Rep of Korea", "South Korea"},
    {"Republic of Korea", "South Korea"},
    {"North Korea", "North Korea"},
    {"Dem People's Rep Korea", "North Korea"},
    {"Russia", "Russia"},
    {"Russian Federation", "Russia"},
    {"Taiwan", "Taiwan"},
    {"India", "India"},
    {"Japan", "Japan"},
    {"France", "France"},
    {"Australia", "Australia"},
    {"Italy", "Italy"},
    {"Canada", "Canada"},
    {"Saudi Arabia", "Saudi Arabia"},
    {"Israel", "Israel"},
    {"Malaysia", "Malaysia"},
    {"South Africa", "South Africa"},
    {"Brazil", "Brazil"},
    {"Netherlands", "Netherlands"},
    {"Sweden", "Sweden"},
    {"Switzerland", "Switzerland"},
    {"Belgium", "Belgium"},
    {"Denmark", "Denmark"},
    {"Spain", "Spain"},
    {"Poland", "Poland"},
    {"Austria", "Austria"},
    {"Finland", "Finland"},
    {"Norway", "Norway"},
    {"Ireland", "Ireland"},
    {"Portugal", "Portugal"},
    {"Greece", "Greece"},
    {"Turkey", "Turkey"},
    {"Turkiye", "Turkey"},
    {"Iran", "Iran"},
    {"Egypt", "Egypt"},
    {"Pakistan", "Pakistan"},
    {"Bangladesh", "Bangladesh"},
    {"Nepal", "Nepal"},
    {"Sri Lanka", "Sri Lanka"},
    {"Singapore", "Singapore"},
    {"Thailand", "Thailand"},
    {"Vietnam", "Vietnam"},
    {"Indonesia", "Indonesia"},
    {"Philippines", "Philippines"},
    {"New Zealand", "New Zealand"},
    {"Mexico", "Mexico"},
    {"Argentina", "Argentina"},
    {"Chile", "Chile"},
    {"Czech Republic", "Czech Republic"},
    {"Czechia", "Czech Republic"},
    {"Hungary", "Hungary"},
    {"Ukraine", "Ukraine"},
    {"Qatar", "Qatar"},
    {"Oman", "Oman"},
    {"Kuwait", "Kuwait"},
    {"Ethiopia", "Ethiopia"},
    {"Nigeria", "Nigeria"},
    {"Kenya", "Kenya"},
};

std::string key_of(std::string_view raw) { return text::to_lower(clean_country_segment(raw)); }

}  // namespace

std::string clean_country_segment(std::string_view raw) {
  auto s = text::trim(raw);
  while (!s.empty() && (s.back() == '.' || std::isspace(static_cast<unsigned char>(s.back()))))
    s.remove_suffix(1);
  return std::string(text::trim(s));
}

CountryNormalizer::CountryNormalizer() {
  for (const auto& [raw, canonical] : kDefaultAliases) add_alias(raw, canonical);
}

CountryNormalizer CountryNormalizer::empty() { return CountryNormalizer(EmptyTag{}); }

void CountryNormalizer::add_alias(std::string_view raw, std::string_view canonical) {
  auto key = key_of(raw);
  auto value = clean_country_segment(canonical);
  if (key.empty() || value.empty())
    throw Error(ErrorKind::InvalidArgument, "empty alias entry");
  aliases_[std::move(key)] = std::move(value);
}

void CountryNormalizer::load_aliases(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    std::string_view body = text::trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidArgument,
                  "alias map line " + std::to_string(line_no) + ": expected raw=canonical");
    add_alias(body.substr(0, eq), body.substr(eq + 1));
  }
}

void CountryNormalizer::load_aliases_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open alias map " + path.string());
  load_aliases(in);
}

std::string CountryNormalizer::normalize(std::string_view raw) const {
  auto cleaned = clean_country_segment(raw);
  auto it = aliases_.find(text::to_lower(cleaned));
  return it == aliases_.end() ? cleaned : it->second;
}

bool CountryNormalizer::is_known(std::string_view raw) const {
  return aliases_.contains(key_of(raw));
}

}  // namespace collabind
