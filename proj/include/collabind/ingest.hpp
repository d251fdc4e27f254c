#pragma once

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "collabind/country.hpp"
#include "collabind/record.hpp"
#include "collabind/wos_parser.hpp"

namespace collabind {

struct CountryExtraction {
  std::vector<std::string> per_address;  // country of each usable address, in order
  std::set<std::string> countries;
  std::size_t addresses_without_country = 0;
  std::set<std::string> unmapped;
};

// Country tokens from C1 address values. Each value may hold several
// addresses separated by ';' and each address may carry a "[authors]" prefix.
CountryExtraction extract_countries(const std::vector<std::string>& c1_values,
                                    const CountryNormalizer& normalizer);

// Country segment of one address ("MA 02139 USA" style suffixes collapse to
// "USA"); nullopt when the address has no comma.
std::optional<std::string> address_country_segment(std::string_view address);

struct IngestFilters {
  std::set<DocType> doc_types{DocType::Article, DocType::Review};
  std::string language = "English";        // empty: any language
  std::optional<YearRange> year_window = YearRange{1990, 2020};
  std::string focal = "India";             // empty: no focal requirement
};

// Country whose C1 address lists the first author. Falls back to the first
// address when no bracket mentions the first author.
struct FirstAuthorResolution {
  std::optional<std::string> country;
  bool fallback = false;
};
FirstAuthorResolution resolve_first_author_country(const RawRecordBlock& block,
                                                   const CountryNormalizer& normalizer);

// Incremental corpus construction: filters, then DOI dedup (first seen wins).
class CorpusBuilder {
 public:
  CorpusBuilder(IngestFilters filters, CountryNormalizer normalizer);

  // Returns true when the block was admitted as a new record.
  bool add(const RawRecordBlock& block);

  Corpus finish() &&;

  const DedupStats& stats() const { return stats_; }

 private:
  void reject(RejectReason reason);

  IngestFilters filters_;
  CountryNormalizer normalizer_;
  std::string focal_;
  std::vector<PublicationRecord> records_;
  std::unordered_set<std::string> seen_dois_;
  DedupStats stats_;
};

// Record view of one block without any filtering. `stats` receives warning
// counters when non-null.
PublicationRecord to_record(const RawRecordBlock& block, const CountryNormalizer& normalizer,
                            DedupStats* stats = nullptr);

Corpus build_corpus(const std::vector<RawRecordBlock>& blocks, const IngestFilters& filters,
                    const CountryNormalizer& normalizer = CountryNormalizer{});

std::string normalize_doi(std::string_view raw);

}  // namespace collabind
