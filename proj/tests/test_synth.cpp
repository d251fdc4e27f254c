#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "collabind/error.hpp"
#include "collabind/ingest.hpp"
#include "collabind/synth.hpp"

using namespace collabind;

namespace {

std::string tagged(const SynthOutput& out) {
  std::ostringstream s;
  write_field_tagged(s, out.blocks);
  return s.str();
}

Corpus ingest_text(const std::string& text, bool tsv = false) {
  std::istringstream in(text);
  auto parsed = tsv ? parse_tab_delimited(in) : parse_field_tagged(in);
  EXPECT_TRUE(parsed.issues.empty());
  return build_corpus(parsed.blocks, IngestFilters{});
}

// Compares the ingested corpus against the admitted truth rows; returns mismatches.
std::size_t mismatches(const Corpus& corpus, const std::vector<TruthRow>& truth,
                       const SynthSpec& spec) {
  std::vector<const TruthRow*> admitted;
  for (const auto& t : truth)
    if (t.status == TruthStatus::Admitted) admitted.push_back(&t);
  if (admitted.size() != corpus.size()) return std::max(admitted.size(), corpus.size());
  std::size_t bad = 0;
  for (std::size_t i = 0; i < admitted.size(); ++i) {
    const auto& r = corpus.records()[i];
    const auto& t = *admitted[i];
    const bool ok = r.doi == t.doi && r.year == t.year && r.countries == t.countries &&
                    r.times_cited == t.times_cited &&
                    r.first_author_country.value_or("") == t.first_author_country &&
                    classify(r, spec.focal, spec.partner) == t.label;
    bad += !ok;
  }
  return bad;
}

}  // namespace

TEST(Synth, EmptyExport) {
  SynthSpec spec;
  spec.record_count = 0;
  auto out = generate(spec);
  EXPECT_TRUE(out.blocks.empty());
  const auto text = tagged(out);
  EXPECT_EQ(text.rfind("FN ", 0), 0u);
  EXPECT_NE(text.find("VR "), std::string::npos);
  EXPECT_NE(text.find("EF"), std::string::npos);
  EXPECT_EQ(text.find("PT "), std::string::npos);
  std::istringstream in(text);
  auto parsed = parse_field_tagged(in);
  EXPECT_TRUE(parsed.blocks.empty());
  EXPECT_TRUE(parsed.issues.empty());
}

TEST(Synth, ForcedBilateral) {
  SynthSpec spec;
  spec.bilateral_rate = 1.0;
  spec.icp_rate = 0.0;
  spec.record_count = 300;
  auto corpus = ingest_text(tagged(generate(spec)));
  ASSERT_EQ(corpus.size(), 300u);
  for (const auto& r : corpus)
    EXPECT_EQ(classify(r, "India", "USA"), ClassificationLabel::BilateralPartner);
}

TEST(Synth, Seed42MatchesSidecar) {
  SynthSpec spec;
  auto out = generate(spec);
  ASSERT_EQ(out.truth.size(), 1000u);
  auto corpus = ingest_text(tagged(out));
  EXPECT_EQ(mismatches(corpus, out.truth, spec), 0u);
  std::size_t ind = 0, icp = 0;
  for (const auto& r : corpus) (is_international(classify(r, "India", "USA")) ? icp : ind)++;
  EXPECT_EQ(ind + icp, corpus.size());
  EXPECT_GT(ind, 0u);
  EXPECT_GT(icp, 0u);
}

TEST(Synth, Deterministic) {
  SynthSpec spec;
  spec.record_count = 200;
  spec.no_doi_rate = 0.1;
  EXPECT_EQ(tagged(generate(spec)), tagged(generate(spec)));
  auto other = spec;
  other.seed = 43;
  EXPECT_NE(tagged(generate(spec)), tagged(generate(other)));
}

TEST(Synth, TsvAndTaggedAgree) {
  SynthSpec spec;
  spec.record_count = 250;
  auto out = generate(spec);
  std::ostringstream tsv;
  write_tab_delimited(tsv, out.blocks);
  EXPECT_EQ(ingest_text(tagged(out)), ingest_text(tsv.str(), true));
}

TEST(Synth, NoiseRatesAreAccountedFor) {
  SynthSpec spec;
  spec.record_count = 800;
  spec.no_doi_rate = 0.1;
  spec.duplicate_rate = 0.1;
  spec.reject_rate = 0.1;
  auto out = generate(spec);
  auto corpus = ingest_text(tagged(out));
  EXPECT_EQ(mismatches(corpus, out.truth, spec), 0u);
  std::size_t dup = 0, rej = 0, no_doi = 0;
  for (const auto& t : out.truth) {
    dup += t.status == TruthStatus::Duplicate;
    rej += t.status == TruthStatus::Rejected;
    no_doi += t.status == TruthStatus::Admitted && !t.doi;
  }
  const auto& st = corpus.dedup_stats();
  EXPECT_GT(dup, 0u);
  EXPECT_GT(rej, 0u);
  EXPECT_EQ(st.duplicate_count, dup);
  EXPECT_EQ(st.rejected_count, rej);
  EXPECT_EQ(st.no_doi_count, no_doi);
  EXPECT_EQ(st.input_count, corpus.size() + st.duplicate_count + st.rejected_count);
}

TEST(Synth, PartitionHoldsAcrossSeeds) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SynthSpec spec;
    spec.seed = seed;
    spec.record_count = 150;
    spec.bilateral_rate = 0.05 * static_cast<double>(seed % 5);
    auto out = generate(spec);
    auto corpus = ingest_text(tagged(out));
    std::size_t ind = 0, icp = 0;
    for (const auto& r : corpus) (is_international(classify(r, "India", "USA")) ? icp : ind)++;
    EXPECT_EQ(ind + icp, corpus.size());
    EXPECT_EQ(mismatches(corpus, out.truth, spec), 0u) << seed;
  }
}

TEST(Synth, CitationModel) {
  SynthSpec spec;
  spec.record_count = 4000;
  spec.citation_model = {0.25, 8.0};
  auto out = generate(spec);
  double zeros = 0, sum = 0, cited = 0;
  for (const auto& t : out.truth) {
    if (t.times_cited == 0) {
      ++zeros;
    } else {
      ++cited;
      sum += static_cast<double>(t.times_cited);
    }
  }
  EXPECT_NEAR(zeros / 4000, 0.25, 0.03);
  EXPECT_NEAR(sum / cited, 8.0, 0.6);
}

TEST(Synth, InvalidSpecs) {
  auto expect_invalid = [](SynthSpec s) {
    try {
      s.validate();
      ADD_FAILURE() << "accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidSpec);
    }
  };
  SynthSpec s;
  s.bilateral_rate = 1.5;
  expect_invalid(s);
  s = {};
  s.bilateral_rate = 0.6;
  s.icp_rate = 0.6;
  expect_invalid(s);
  s = {};
  s.citation_model.zero_inflation = -0.1;
  expect_invalid(s);
  s = {};
  s.citation_model.mean = 0.5;
  expect_invalid(s);
  s = {};
  s.category_pool.clear();
  expect_invalid(s);
  s = {};
  s.partner = "India";
  expect_invalid(s);
  s = {};
  s.country_pool.push_back({"USA", 1});
  expect_invalid(s);
  s = {};
  s.country_pool.push_back({"Germany", 1});
  expect_invalid(s);
  s = {};
  s.country_pool[0].weight = 0;
  expect_invalid(s);
  s = {};
  s.years = {2001, 2000};
  expect_invalid(s);
  EXPECT_THROW(generate(s), Error);
}

TEST(Synth, ParsesSpecFile) {
  std::istringstream in(
      "# test spec\nseed = 7\nrecords=12\nyears=2000-2004\nfocal=India\npartner=USA\n"
      "countries=Japan:2,France:1.5\nbilateral_rate=0.3\nicp_rate=0.2\nzero_inflation=0.1\n"
      "citation_mean=5\ncategories=Optics|Biology\nno_doi_rate=0.05\n");
  auto s = parse_synth_spec(in);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(s.record_count, 12u);
  EXPECT_EQ(s.years.from, 2000);
  EXPECT_EQ(s.years.to, 2004);
  ASSERT_EQ(s.country_pool.size(), 2u);
  EXPECT_EQ(s.country_pool[1].country, "France");
  EXPECT_DOUBLE_EQ(s.country_pool[1].weight, 1.5);
  EXPECT_DOUBLE_EQ(s.bilateral_rate, 0.3);
  EXPECT_DOUBLE_EQ(s.citation_model.mean, 5);
  EXPECT_EQ(s.category_pool, (std::vector<std::string>{"Optics", "Biology"}));
  EXPECT_DOUBLE_EQ(s.no_doi_rate, 0.05);
  std::istringstream unknown("colour=blue\n");
  EXPECT_THROW(parse_synth_spec(unknown), Error);
  std::istringstream bad("records=many\n");
  EXPECT_THROW(parse_synth_spec(bad), Error);
}

TEST(Synth, TruthRoundTrip) {
  SynthSpec spec;
  spec.record_count = 60;
  spec.no_doi_rate = 0.2;
  spec.duplicate_rate = 0.1;
  auto out = generate(spec);
  std::stringstream s;
  write_truth(s, out.truth);
  auto back = read_truth(s);
  ASSERT_EQ(back.size(), out.truth.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].index, out.truth[i].index);
    EXPECT_EQ(back[i].doi, out.truth[i].doi);
    EXPECT_EQ(back[i].countries, out.truth[i].countries);
    EXPECT_EQ(back[i].label, out.truth[i].label);
    EXPECT_EQ(back[i].status, out.truth[i].status);
    EXPECT_EQ(back[i].first_author_country, out.truth[i].first_author_country);
  }
}

TEST(Synth, WritesOutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "collabind_synth_test";
  std::filesystem::remove_all(dir);
  SynthSpec spec;
  spec.record_count = 20;
  write_synth_outputs(dir, generate(spec));
  for (const char* f : {"records.txt", "records.tsv", "truth.tsv"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::ifstream in(dir / "records.txt");
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), tagged(generate(spec)));
  std::filesystem::remove_all(dir);
}
