#include "collabind/ingest.hpp"

#include <charconv>

#include "collabind/categories.hpp"
#include "collabind/strings.hpp"

namespace collabind {
namespace {

struct Address {
  std::vector<std::string> authors;  // bracketed author list, may be empty
  std::string body;
};

// "[A; B] Univ X, City, Country" -> authors {A, B}, body "Univ X, City, Country".
Address split_address(std::string_view piece) {
  Address a;
  auto s = text::trim(piece);
  if (!s.empty() && s.front() == '[') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '[') ++depth;
      if (s[i] == ']' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close != std::string_view::npos) {
      for (auto& name : text::split(s.substr(1, close - 1), ';')) {
        auto n = text::trim(name);
        if (!n.empty()) a.authors.emplace_back(n);
      }
      s = text::trim(s.substr(close + 1));
    }
  }
  a.body = std::string(s);
  return a;
}

std::vector<Address> split_addresses(const std::vector<std::string>& c1_values) {
  std::vector<Address> out;
  for (const auto& value : c1_values) {
    for (const auto& piece : text::split_outside_brackets(value, ';')) {
      auto addr = split_address(piece);
      if (!addr.body.empty() || !addr.authors.empty()) out.push_back(std::move(addr));
    }
  }
  return out;
}

std::pair<std::string, std::string> surname_given(std::string_view name) {
  auto comma = name.find(',');
  if (comma == std::string_view::npos) return {text::to_lower(text::trim(name)), ""};
  return {text::to_lower(text::trim(name.substr(0, comma))),
          text::to_lower(text::trim(name.substr(comma + 1)))};
}

// Bracket entries use full names ("Singh, Vivek Kumar"); AU uses the short
// form ("Singh, VK"). Surname plus first initial is the common denominator.
bool same_author(std::string_view bracket_name, std::string_view full, std::string_view short_form) {
  if (!full.empty() && text::iequals(text::trim(bracket_name), text::trim(full))) return true;
  auto [bs, bg] = surname_given(bracket_name);
  for (auto candidate : {full, short_form}) {
    if (candidate.empty()) continue;
    auto [cs, cg] = surname_given(candidate);
    if (bs.empty() || bs != cs) continue;
    if (bg.empty() || cg.empty() || bg.front() == cg.front()) return true;
  }
  return false;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  s = text::trim(s);
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string joined(const std::vector<std::string>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i];
  }
  return out;
}

DocType resolve_doc_type(const RawRecordBlock& block) {
  bool review = false;
  for (const auto& part : text::split(joined(block.values("DT"), "; "), ';')) {
    auto t = parse_doc_type(part);
    if (t == DocType::Article) return DocType::Article;
    review = review || t == DocType::Review;
  }
  return review ? DocType::Review : DocType::Other;
}

}  // namespace

std::string normalize_doi(std::string_view raw) { return text::to_lower(text::trim(raw)); }

std::optional<std::string> address_country_segment(std::string_view address) {
  auto comma = address.rfind(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto seg = clean_country_segment(address.substr(comma + 1));
  if (seg.empty()) return std::nullopt;
  // US addresses end "City, ST 02139 USA".
  auto space = seg.find_last_of(" \t");
  if (space != std::string::npos && text::iequals(std::string_view(seg).substr(space + 1), "USA"))
    return std::string("USA");
  return seg;
}

CountryExtraction extract_countries(const std::vector<std::string>& c1_values,
                                    const CountryNormalizer& normalizer) {
  CountryExtraction out;
  for (const auto& addr : split_addresses(c1_values)) {
    auto seg = address_country_segment(addr.body);
    if (!seg) {
      ++out.addresses_without_country;
      continue;
    }
    auto country = normalizer.normalize(*seg);
    if (!normalizer.is_known(*seg)) out.unmapped.insert(country);
    out.per_address.push_back(country);
    out.countries.insert(std::move(country));
  }
  return out;
}

FirstAuthorResolution resolve_first_author_country(const RawRecordBlock& block,
                                                   const CountryNormalizer& normalizer) {
  const std::string full = block.first("AF");
  const std::string short_form = block.first("AU");
  std::optional<std::string> first_usable;
  for (const auto& addr : split_addresses(block.values("C1"))) {
    auto seg = address_country_segment(addr.body);
    if (!seg) continue;
    if (!first_usable) first_usable = normalizer.normalize(*seg);
    if (full.empty() && short_form.empty()) break;
    for (const auto& name : addr.authors)
      if (same_author(name, full, short_form)) return {normalizer.normalize(*seg), false};
  }
  return {first_usable, first_usable.has_value()};
}

PublicationRecord to_record(const RawRecordBlock& block, const CountryNormalizer& normalizer,
                            DedupStats* stats) {
  PublicationRecord r;
  if (auto doi = normalize_doi(block.first("DI")); !doi.empty()) r.doi = std::move(doi);

  if (auto py = parse_count(block.first("PY")); py && *py > 0 && *py < 10000)
    r.year = static_cast<int>(*py);

  r.doc_type = resolve_doc_type(block);
  r.language = std::string(text::trim(block.first("LA")));

  auto extraction = extract_countries(block.values("C1"), normalizer);
  r.countries = std::move(extraction.countries);

  for (const auto& wc : block.values("WC"))
    for (auto& cat : split_categories(wc)) r.categories.insert(std::move(cat));

  auto z9 = parse_count(block.first("Z9"));
  r.times_cited = z9.value_or(0);

  auto first_author = resolve_first_author_country(block, normalizer);
  r.first_author_country = first_author.country;

  if (stats) {
    if (!z9) ++stats->citation_warnings;
    if (first_author.fallback) ++stats->first_author_fallbacks;
    stats->addresses_without_country += extraction.addresses_without_country;
    stats->unmapped_countries.insert(extraction.unmapped.begin(), extraction.unmapped.end());
  }
  return r;
}

CorpusBuilder::CorpusBuilder(IngestFilters filters, CountryNormalizer normalizer)
    : filters_(std::move(filters)), normalizer_(std::move(normalizer)) {
  if (!filters_.focal.empty()) focal_ = normalizer_.normalize(filters_.focal);
}

void CorpusBuilder::reject(RejectReason reason) {
  ++stats_.rejected_count;
  ++stats_.rejects[reason];
}

bool CorpusBuilder::add(const RawRecordBlock& block) {
  ++stats_.input_count;
  DedupStats local;
  auto record = to_record(block, normalizer_, &local);

  if (!filters_.doc_types.contains(record.doc_type)) {
    reject(RejectReason::DocType);
    return false;
  }
  if (!filters_.language.empty() && !text::iequals(record.language, filters_.language)) {
    reject(RejectReason::Language);
    return false;
  }
  if (record.year == 0) {
    reject(RejectReason::YearMissing);
    return false;
  }
  if (filters_.year_window && !filters_.year_window->contains(record.year)) {
    reject(RejectReason::YearOutOfWindow);
    return false;
  }
  if (record.countries.empty()) {
    reject(RejectReason::NoCountry);
    return false;
  }
  if (!focal_.empty() && !record.countries.contains(focal_)) {
    reject(RejectReason::FocalAbsent);
    return false;
  }
  if (record.doi) {
    if (!seen_dois_.insert(*record.doi).second) {
      ++stats_.duplicate_count;
      return false;
    }
  } else {
    ++stats_.no_doi_count;
  }

  stats_.citation_warnings += local.citation_warnings;
  stats_.first_author_fallbacks += local.first_author_fallbacks;
  stats_.addresses_without_country += local.addresses_without_country;
  stats_.unmapped_countries.merge(local.unmapped_countries);
  records_.push_back(std::move(record));
  return true;
}

Corpus CorpusBuilder::finish() && { return Corpus(std::move(records_), std::move(stats_)); }

Corpus build_corpus(const std::vector<RawRecordBlock>& blocks, const IngestFilters& filters,
                    const CountryNormalizer& normalizer) {
  CorpusBuilder builder(filters, normalizer);
  for (const auto& block : blocks) builder.add(block);
  return std::move(builder).finish();
}

}  // namespace collabind
