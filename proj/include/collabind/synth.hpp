#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "collabind/record.hpp"
#include "collabind/wos_parser.hpp"

namespace collabind {

struct WeightedCountry {
  std::string country;
  double weight = 1.0;
};

struct CitationModel {
  double zero_inflation = 0.15;  // P(times_cited == 0)
  double mean = 12.0;            // mean of the cited (non-zero) part, >= 1
};

// Synthetic corpus description. bilateral_rate and icp_rate are the
// unconditional probabilities of a bilateral record and of an
// other-international record; the remainder is indigenous.
struct SynthSpec {
  std::uint64_t seed = 42;
  YearRange years{1990, 2020};
  std::string focal = "India";
  std::string partner = "USA";
  std::vector<WeightedCountry> country_pool{
      {"Germany", 3}, {"England", 3}, {"Peoples R China", 2}, {"Japan", 2},
      {"France", 2},  {"South Korea", 2}, {"Australia", 1}, {"Italy", 1},
      {"Canada", 1},  {"Scotland", 0.5},
  };
  double bilateral_rate = 0.08;
  double icp_rate = 0.17;
  CitationModel citation_model;
  std::uint64_t record_count = 1000;
  std::vector<std::string> category_pool{
      "Astronomy & Astrophysics", "Biology", "Materials Science, Multidisciplinary",
      "Physics, Particles & Fields", "Biochemistry & Molecular Biology", "Physics, Applied",
      "Chemistry, Physical", "Multidisciplinary Sciences", "Microbiology",
      "Chemistry, Multidisciplinary"};
  double no_doi_rate = 0.0;     // DI line omitted
  double duplicate_rate = 0.0;  // re-emit an earlier record with the same DOI
  double reject_rate = 0.0;     // DT=Letter records, filtered at ingest

  // Throws Error(InvalidSpec).
  void validate() const;
};

// key=value lines, '#' comments. Keys: seed, records, years (1990-2020),
// focal, partner, countries (Name:weight,...), bilateral_rate, icp_rate,
// zero_inflation, citation_mean, categories (Name|Name|...), no_doi_rate,
// duplicate_rate, reject_rate. Unknown keys are InvalidSpec.
SynthSpec parse_synth_spec(std::istream& in);

enum class TruthStatus { Admitted, Duplicate, Rejected };

std::string_view to_string(TruthStatus status);

// Ground truth for one emitted block.
struct TruthRow {
  std::size_t index = 0;
  std::optional<std::string> doi;
  int year = 0;
  ClassificationLabel label = ClassificationLabel::Indigenous;
  std::set<std::string> countries;  // normalized
  std::uint64_t times_cited = 0;
  std::string first_author_country;
  TruthStatus status = TruthStatus::Admitted;
};

struct SynthOutput {
  std::vector<RawRecordBlock> blocks;
  std::vector<TruthRow> truth;
};

SynthOutput generate(const SynthSpec& spec);

// Sidecar TSV with header
// index, doi, year, label, countries (';'-joined), times_cited,
// first_author_country, status
void write_truth(std::ostream& out, const std::vector<TruthRow>& truth);
std::vector<TruthRow> read_truth(std::istream& in);

// Writes records.txt (field-tagged), records.tsv and truth.tsv into `dir`.
void write_synth_outputs(const std::filesystem::path& dir, const SynthOutput& output);

}  // namespace collabind
