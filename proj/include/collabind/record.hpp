#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace collabind {

enum class DocType { Article, Review, Other };

std::string_view to_string(DocType type);
// "Article", "Review" (case-insensitive); anything else is Other.
DocType parse_doc_type(std::string_view value);

// One normalized bibliographic record.
struct PublicationRecord {
  std::optional<std::string> doi;  // lowercase, trimmed
  int year = 0;
  DocType doc_type = DocType::Other;
  std::string language;
  std::set<std::string> countries;
  std::set<std::string> categories;
  std::uint64_t times_cited = 0;
  std::optional<std::string> first_author_country;

  bool operator==(const PublicationRecord&) const = default;
};

enum class RejectReason {
  DocType,
  Language,
  YearMissing,
  YearOutOfWindow,
  NoCountry,
  FocalAbsent,
};

std::string_view to_string(RejectReason reason);

// Provenance counts collected while a corpus is built.
struct DedupStats {
  std::uint64_t input_count = 0;
  std::uint64_t duplicate_count = 0;
  std::uint64_t no_doi_count = 0;  // admitted records without a DOI
  std::uint64_t rejected_count = 0;
  std::map<RejectReason, std::uint64_t> rejects;
  std::uint64_t citation_warnings = 0;  // Z9 missing or non-numeric
  std::uint64_t addresses_without_country = 0;
  std::uint64_t first_author_fallbacks = 0;
  std::set<std::string> unmapped_countries;

  bool operator==(const DedupStats&) const = default;
};

// Deduplicated, immutable record collection. Construction validates that
// every record has at least one country and that non-empty DOIs are unique.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::vector<PublicationRecord> records, DedupStats stats);

  const std::vector<PublicationRecord>& records() const { return records_; }
  const DedupStats& dedup_stats() const { return stats_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  bool operator==(const Corpus&) const = default;

 private:
  std::vector<PublicationRecord> records_;
  DedupStats stats_;
};

enum class ClassificationLabel { Indigenous, BilateralPartner, OtherInternational };

std::string_view to_string(ClassificationLabel label);
std::optional<ClassificationLabel> parse_label(std::string_view value);

// Indigenous iff countries == {focal}; BilateralPartner iff partner is
// present; OtherInternational otherwise. Throws Error(FocalAbsent) when the
// focal country is missing.
ClassificationLabel classify(const PublicationRecord& record, std::string_view focal,
                             std::string_view partner);

inline bool is_international(ClassificationLabel label) {
  return label != ClassificationLabel::Indigenous;
}

// Inclusive year range.
struct YearRange {
  int from = 0;
  int to = 0;

  bool contains(int year) const { return year >= from && year <= to; }
  bool valid() const { return from <= to; }
};

}  // namespace collabind
