#include "collabind/interchange.hpp"

#include <fstream>
#include <string>

#include "collabind/error.hpp"
#include "json.hpp"

namespace collabind {
namespace {

using nlohmann::ordered_json;

constexpr const char* kFormat = "collabind-corpus";
constexpr int kVersion = 1;

}  // namespace

ordered_json dedup_stats_json(const DedupStats& s) {
  ordered_json rejects = ordered_json::object();
  for (const auto& [reason, n] : s.rejects) rejects[std::string(to_string(reason))] = n;
  return {
      {"input_count", s.input_count},
      {"duplicate_count", s.duplicate_count},
      {"no_doi_count", s.no_doi_count},
      {"rejected_count", s.rejected_count},
      {"rejects", rejects},
      {"citation_warnings", s.citation_warnings},
      {"addresses_without_country", s.addresses_without_country},
      {"first_author_fallbacks", s.first_author_fallbacks},
      {"unmapped_countries", s.unmapped_countries},
  };
}

namespace {

DedupStats stats_from_json(const ordered_json& j) {
  DedupStats s;
  s.input_count = j.at("input_count").get<std::uint64_t>();
  s.duplicate_count = j.at("duplicate_count").get<std::uint64_t>();
  s.no_doi_count = j.at("no_doi_count").get<std::uint64_t>();
  s.rejected_count = j.at("rejected_count").get<std::uint64_t>();
  for (const auto& [key, value] : j.at("rejects").items()) {
    bool matched = false;
    for (auto r : {RejectReason::DocType, RejectReason::Language, RejectReason::YearMissing,
                   RejectReason::YearOutOfWindow, RejectReason::NoCountry,
                   RejectReason::FocalAbsent}) {
      if (key == to_string(r)) {
        s.rejects[r] = value.get<std::uint64_t>();
        matched = true;
      }
    }
    if (!matched) throw Error(ErrorKind::InvalidCorpus, "unknown reject reason " + key);
  }
  s.citation_warnings = j.value("citation_warnings", std::uint64_t{0});
  s.addresses_without_country = j.value("addresses_without_country", std::uint64_t{0});
  s.first_author_fallbacks = j.value("first_author_fallbacks", std::uint64_t{0});
  if (j.contains("unmapped_countries"))
    s.unmapped_countries = j.at("unmapped_countries").get<std::set<std::string>>();
  return s;
}

ordered_json optional_string(const std::optional<std::string>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json record_to_json(const PublicationRecord& r) {
  return {
      {"doi", optional_string(r.doi)},
      {"year", r.year},
      {"doc_type", std::string(to_string(r.doc_type))},
      {"language", r.language},
      {"countries", r.countries},
      {"categories", r.categories},
      {"times_cited", r.times_cited},
      {"first_author_country", optional_string(r.first_author_country)},
  };
}

PublicationRecord record_from_json(const ordered_json& j) {
  PublicationRecord r;
  if (!j.at("doi").is_null()) r.doi = j.at("doi").get<std::string>();
  r.year = j.at("year").get<int>();
  r.doc_type = parse_doc_type(j.at("doc_type").get<std::string>());
  r.language = j.at("language").get<std::string>();
  r.countries = j.at("countries").get<std::set<std::string>>();
  r.categories = j.at("categories").get<std::set<std::string>>();
  r.times_cited = j.at("times_cited").get<std::uint64_t>();
  if (const auto& f = j.at("first_author_country"); !f.is_null())
    r.first_author_country = f.get<std::string>();
  return r;
}

}  // namespace

void write_corpus(std::ostream& out, const Corpus& corpus) {
  ordered_json header{{"format", kFormat}, {"version", kVersion},
                      {"stats", dedup_stats_json(corpus.dedup_stats())}};
  out << header.dump() << '\n';
  for (const auto& r : corpus) out << record_to_json(r).dump() << '\n';
}

void write_corpus_file(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_corpus(out, corpus);
}

Corpus read_corpus(std::istream& in) {
  std::vector<PublicationRecord> records;
  std::optional<DedupStats> stats;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      auto j = ordered_json::parse(line);
      if (j.contains("format")) {
        if (j.at("format") != kFormat || j.at("version") != kVersion)
          throw Error(ErrorKind::InvalidCorpus, "unsupported corpus header");
        stats = stats_from_json(j.at("stats"));
        continue;
      }
      records.push_back(record_from_json(j));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidCorpus,
                  "corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!stats) {
    stats.emplace();
    stats->input_count = records.size();
    for (const auto& r : records)
      if (!r.doi) ++stats->no_doi_count;
  }
  return Corpus(std::move(records), std::move(*stats));
}

Corpus read_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open corpus " + path.string());
  return read_corpus(in);
}

}  // namespace collabind
