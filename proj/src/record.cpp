#include "collabind/record.hpp"

#include <unordered_set>

#include "collabind/error.hpp"
#include "collabind/strings.hpp"

namespace collabind {

std::string_view to_string(DocType type) {
  switch (type) {
    case DocType::Article: return "Article";
    case DocType::Review: return "Review";
    case DocType::Other: return "Other";
  }
  return "Other";
}

DocType parse_doc_type(std::string_view value) {
  auto v = text::trim(value);
  if (text::iequals(v, "Article")) return DocType::Article;
  if (text::iequals(v, "Review")) return DocType::Review;
  return DocType::Other;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::DocType: return "doc_type";
    case RejectReason::Language: return "language";
    case RejectReason::YearMissing: return "year_missing";
    case RejectReason::YearOutOfWindow: return "year_out_of_window";
    case RejectReason::NoCountry: return "no_country";
    case RejectReason::FocalAbsent: return "focal_absent";
  }
  return "unknown";
}

Corpus::Corpus(std::vector<PublicationRecord> records, DedupStats stats)
    : records_(std::move(records)), stats_(std::move(stats)) {
  std::unordered_set<std::string> dois;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (r.countries.empty())
      throw Error(ErrorKind::InvalidCorpus, "record " + std::to_string(i) + " has no country");
    if (r.doi && !r.doi->empty() && !dois.insert(*r.doi).second)
      throw Error(ErrorKind::InvalidCorpus, "duplicate DOI " + *r.doi);
  }
}

std::string_view to_string(ClassificationLabel label) {
  switch (label) {
    case ClassificationLabel::Indigenous: return "Indigenous";
    case ClassificationLabel::BilateralPartner: return "BilateralPartner";
    case ClassificationLabel::OtherInternational: return "OtherInternational";
  }
  return "Indigenous";
}

std::optional<ClassificationLabel> parse_label(std::string_view value) {
  for (auto label : {ClassificationLabel::Indigenous, ClassificationLabel::BilateralPartner,
                     ClassificationLabel::OtherInternational}) {
    if (value == to_string(label)) return label;
  }
  return std::nullopt;
}

ClassificationLabel classify(const PublicationRecord& record, std::string_view focal,
                             std::string_view partner) {
  const auto& c = record.countries;
  if (c.find(std::string(focal)) == c.end())
    throw Error(ErrorKind::FocalAbsent, "record lacks focal country " + std::string(focal));
  if (c.size() == 1) return ClassificationLabel::Indigenous;
  if (c.find(std::string(partner)) != c.end()) return ClassificationLabel::BilateralPartner;
  return ClassificationLabel::OtherInternational;
}

}  // namespace collabind
