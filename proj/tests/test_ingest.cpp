#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "collabind/ingest.hpp"
#include "collabind/interchange.hpp"

using namespace collabind;

namespace {

RawRecordBlock block(std::initializer_list<std::pair<std::string, std::vector<std::string>>> f) {
  RawRecordBlock b;
  b.fields["PT"] = {"J"};
  for (const auto& [tag, values] : f) b.fields[tag] = values;
  return b;
}

RawRecordBlock article(const std::string& doi, int year, std::vector<std::string> c1,
                       const std::string& z9 = "1") {
  auto b = block({{"LA", {"English"}}, {"DT", {"Article"}}, {"PY", {std::to_string(year)}},
                  {"C1", std::move(c1)}, {"Z9", {z9}}});
  if (!doi.empty()) b.fields["DI"] = {doi};
  return b;
}

const std::string kIndia = "[A] Univ X, Delhi, India.";
const std::string kUsa = "[B] MIT, Cambridge, MA 02139 USA.";

Corpus load_fixture(const char* name, bool tsv) {
  std::ifstream in(std::string(COLLABIND_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in.good());
  auto parsed = tsv ? parse_tab_delimited(in) : parse_field_tagged(in);
  EXPECT_TRUE(parsed.issues.empty());
  return build_corpus(parsed.blocks, IngestFilters{});
}

}  // namespace

TEST(ExtractCountries, SingleIndianAddress) {
  CountryNormalizer n;
  auto e = extract_countries({"[A] Univ X, Delhi, India."}, n);
  EXPECT_EQ(e.countries, (std::set<std::string>{"India"}));
}

TEST(ExtractCountries, UsStateAndZipSuffix) {
  CountryNormalizer n;
  auto e = extract_countries({"[A] MIT, Cambridge, MA 02139 USA."}, n);
  EXPECT_EQ(e.countries, (std::set<std::string>{"USA"}));
}

TEST(ExtractCountries, TwentyRealFormatUsAddresses) {
  CountryNormalizer n;
  std::ifstream in(COLLABIND_FIXTURE_DIR "/us_addresses.txt");
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++count;
    auto e = extract_countries({line}, n);
    EXPECT_EQ(e.countries, (std::set<std::string>{"USA"})) << line;
    EXPECT_TRUE(e.unmapped.empty()) << line;
  }
  EXPECT_EQ(count, 20);
}

TEST(ExtractCountries, IndiaPlusUsa) {
  CountryNormalizer n;
  auto e = extract_countries({kIndia, kUsa}, n);
  EXPECT_EQ(e.countries, (std::set<std::string>{"India", "USA"}));
  EXPECT_EQ(e.per_address, (std::vector<std::string>{"India", "USA"}));
}

TEST(ExtractCountries, SemicolonJoinedAddressesWithBracketSemicolons) {
  CountryNormalizer n;
  auto e = extract_countries(
      {"[Rao, A; Iyer, B] IIT Bombay, Mumbai 400076, India; [Li, C] Peking Univ, Beijing, Peoples R "
       "China."},
      n);
  EXPECT_EQ(e.countries, (std::set<std::string>{"China", "India"}));
}

TEST(ExtractCountries, AddressWithoutCommaIsSkippedAndCounted) {
  CountryNormalizer n;
  auto e = extract_countries({"[A] Somewhere", kIndia}, n);
  EXPECT_EQ(e.countries, (std::set<std::string>{"India"}));
  EXPECT_EQ(e.addresses_without_country, 1u);
}

TEST(ExtractCountries, UnmappedTokensAreReported) {
  CountryNormalizer n;
  auto e = extract_countries({"Univ Y, Gotham, Atlantis."}, n);
  EXPECT_EQ(e.countries, (std::set<std::string>{"Atlantis"}));
  EXPECT_EQ(e.unmapped, (std::set<std::string>{"Atlantis"}));
}

TEST(BuildCorpus, DuplicateDoiKeepsFirstSeen) {
  std::vector<RawRecordBlock> blocks{article("10.1/A", 1995, {kIndia}, "5"),
                                     article("10.1/b", 1996, {kIndia}),
                                     article(" 10.1/a ", 1997, {kIndia, kUsa}, "9")};
  auto c = build_corpus(blocks, IngestFilters{});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.dedup_stats().duplicate_count, 1u);
  EXPECT_EQ(c.records()[0].doi, "10.1/a");
  EXPECT_EQ(c.records()[0].times_cited, 5u);
  EXPECT_EQ(c.records()[0].year, 1995);
}

TEST(BuildCorpus, LetterIsExcluded) {
  auto b = article("10.1/l", 2000, {kIndia});
  b.fields["DT"] = {"Letter"};
  auto c = build_corpus({b}, IngestFilters{});
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c.dedup_stats().rejects.at(RejectReason::DocType), 1u);
}

TEST(BuildCorpus, RejectReasonsAreCounted) {
  auto french = article("10.1/f", 2000, {kIndia});
  french.fields["LA"] = {"French"};
  auto no_year = article("10.1/y", 2000, {kIndia});
  no_year.fields.erase("PY");
  std::vector<RawRecordBlock> blocks{
      french,
      no_year,
      article("10.1/old", 1985, {kIndia}),
      article("10.1/nc", 2000, {"no comma here"}),
      article("10.1/us", 2000, {kUsa}),
      article("", 2000, {kIndia}),
      article("", 2001, {kIndia}),
  };
  auto c = build_corpus(blocks, IngestFilters{});
  const auto& s = c.dedup_stats();
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(s.no_doi_count, 2u);
  EXPECT_EQ(s.rejects.at(RejectReason::Language), 1u);
  EXPECT_EQ(s.rejects.at(RejectReason::YearMissing), 1u);
  EXPECT_EQ(s.rejects.at(RejectReason::YearOutOfWindow), 1u);
  EXPECT_EQ(s.rejects.at(RejectReason::NoCountry), 1u);
  EXPECT_EQ(s.rejects.at(RejectReason::FocalAbsent), 1u);
  EXPECT_EQ(s.input_count, c.size() + s.duplicate_count + s.rejected_count);
}

TEST(BuildCorpus, NonNumericZ9BecomesZeroWithWarning) {
  auto c = build_corpus({article("10.1/z", 2000, {kIndia}, "n/a"), article("10.1/w", 2000, {kIndia}, "")},
                        IngestFilters{});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.records()[0].times_cited, 0u);
  EXPECT_EQ(c.dedup_stats().citation_warnings, 2u);
}

TEST(BuildCorpus, DocTypeWithQualifiers) {
  auto b = article("10.1/q", 2000, {kIndia});
  b.fields["DT"] = {"Review; Early Access"};
  auto c = build_corpus({b}, IngestFilters{});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.records()[0].doc_type, DocType::Review);
}

TEST(FirstAuthor, BracketMatchOnFullOrShortName) {
  CountryNormalizer n;
  auto b = block({{"AU", {"Smith, J", "Rao, K"}},
                  {"C1", {"[Rao, Kiran] IISc, Bangalore, India.", "[Smith, John] MIT, Cambridge, MA USA."}}});
  auto r = resolve_first_author_country(b, n);
  EXPECT_EQ(r.country, "USA");
  EXPECT_FALSE(r.fallback);
  b.fields["AF"] = {"Smith, John", "Rao, Kiran"};
  EXPECT_EQ(resolve_first_author_country(b, n).country, "USA");
}

TEST(FirstAuthor, FallbackToFirstAddress) {
  CountryNormalizer n;
  auto b = block({{"AU", {"Smith, J"}}, {"C1", {"IISc, Bangalore, India.", "MIT, Cambridge, MA USA."}}});
  auto r = resolve_first_author_country(b, n);
  EXPECT_EQ(r.country, "India");
  EXPECT_TRUE(r.fallback);
  EXPECT_FALSE(resolve_first_author_country(block({{"AU", {"X, Y"}}}), n).country);
}

// Independent filter + dedup over the generated parameters, never touching
// the parser or CorpusBuilder.
TEST(BuildCorpus, RandomStreamMatchesBruteForce) {
  std::mt19937 gen(1000);
  const std::vector<std::string> addresses{kIndia, kUsa, "[C] Univ Tokyo, Tokyo, Japan."};
  std::vector<RawRecordBlock> blocks;
  struct Expect {
    std::string doi;
    bool keep;
  };
  std::vector<Expect> expect;
  std::set<std::string> seen;
  std::size_t kept = 0, dup = 0, rej = 0;
  for (int i = 0; i < 1000; ++i) {
    const int doi_id = static_cast<int>(gen() % 700);
    const bool has_doi = gen() % 10 != 0;
    const std::string doi = has_doi ? "10.9/" + std::to_string(doi_id) : "";
    const int year = 1985 + static_cast<int>(gen() % 40);
    const bool letter = gen() % 15 == 0;
    const bool english = gen() % 20 != 0;
    std::vector<std::string> c1;
    const int mask = 1 + static_cast<int>(gen() % 7);
    for (int k = 0; k < 3; ++k)
      if (mask & (1 << k)) c1.push_back(addresses[k]);
    auto b = article(doi, year, c1);
    if (letter) b.fields["DT"] = {"Letter"};
    if (!english) b.fields["LA"] = {"German"};
    blocks.push_back(b);

    const bool has_india = (mask & 1) != 0;
    const bool pass = !letter && english && year >= 1990 && year <= 2020 && has_india;
    if (!pass) {
      ++rej;
    } else if (has_doi && !seen.insert(doi).second) {
      ++dup;
    } else {
      ++kept;
    }
  }
  auto c = build_corpus(blocks, IngestFilters{});
  EXPECT_EQ(c.size(), kept);
  EXPECT_EQ(c.dedup_stats().duplicate_count, dup);
  EXPECT_EQ(c.dedup_stats().rejected_count, rej);
  EXPECT_EQ(c.dedup_stats().input_count, 1000u);
}

TEST(Fixture, FiveRecordFieldTaggedMatchesExpectedCorpus) {
  auto got = load_fixture("five_records.txt", false);
  std::ifstream in(COLLABIND_FIXTURE_DIR "/five_records.expected.ndjson");
  auto expected = read_corpus(in);
  EXPECT_EQ(got.records(), expected.records());
  EXPECT_EQ(got.dedup_stats(), expected.dedup_stats());
}

TEST(Fixture, TabDelimitedVariantYieldsIdenticalCorpus) {
  EXPECT_EQ(load_fixture("five_records.txt", false), load_fixture("five_records.tsv", true));
}

TEST(Interchange, RoundTripPreservesCorpus) {
  auto c = load_fixture("five_records.txt", false);
  std::stringstream s;
  write_corpus(s, c);
  auto back = read_corpus(s);
  EXPECT_EQ(back, c);
  std::stringstream again;
  write_corpus(again, back);
  EXPECT_EQ(again.str(), s.str());
}

TEST(Interchange, HeaderlessFileAndErrors) {
  std::istringstream plain(
      R"({"doi":null,"year":2000,"doc_type":"Article","language":"English","countries":["India"],"categories":[],"times_cited":3,"first_author_country":null})"
      "\n");
  auto c = read_corpus(plain);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.dedup_stats().no_doi_count, 1u);
  std::istringstream broken("{not json}\n");
  EXPECT_THROW(read_corpus(broken), Error);
}
