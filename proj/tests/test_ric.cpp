#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "collabind/error.hpp"
#include "collabind/ric.hpp"

using namespace collabind;

namespace {

PublicationRecord rec(int year, std::set<std::string> countries) {
  PublicationRecord r;
  r.year = year;
  r.countries = std::move(countries);
  return r;
}

PairwiseCollabTable hand_table() {
  PairwiseCollabTable t({"A", "B", "C"});
  t.add_pair("A", "B", 2);
  t.add_pair("A", "C", 1);
  t.add_pair("B", "C", 1);
  return t;
}

// Independent evaluation straight from paper lists.
double brute_ric(const std::vector<std::set<std::string>>& papers,
                 const std::vector<std::string>& system, const std::string& x,
                 const std::string& y, bool* defined) {
  auto pair_count = [&](const std::string& a, const std::string& b) {
    double n = 0;
    for (const auto& p : papers) n += p.count(a) && p.count(b);
    return n;
  };
  double T = 0, cx = 0, cy = 0;
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t j = i + 1; j < system.size(); ++j) T += pair_count(system[i], system[j]);
  for (const auto& z : system) {
    if (z != x) cx += pair_count(x, z);
    if (z != y) cy += pair_count(y, z);
  }
  const double cxy = pair_count(x, y);
  *defined = cx > 0 && (cxy == 0 || cy != cxy);
  if (!*defined || cxy == 0) return 0;
  return cxy * (T - cx) / (cx * (cy - cxy));
}

std::vector<std::set<std::string>> random_papers(std::mt19937_64& gen,
                                                 const std::vector<std::string>& system,
                                                 std::size_t n) {
  std::vector<std::set<std::string>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::string> p;
    for (const auto& c : system)
      if (gen() % 3 == 0) p.insert(c);
    if (p.empty()) p.insert(system[gen() % system.size()]);
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Ric, HandCaseIsTwoThirds) {
  auto t = hand_table();
  EXPECT_EQ(t.total(), 4u);
  EXPECT_EQ(t.row_total("A"), 3u);
  EXPECT_EQ(t.row_total("B"), 3u);
  auto v = ric(t, "A", "B");
  ASSERT_TRUE(v.value);
  EXPECT_EQ(*v.value, 2.0 / 3.0);
  EXPECT_EQ(v.flag, RicFlag::Ok);
  EXPECT_EQ(*ric(t, "B", "A").value, 2.0 / 3.0);
}

TEST(Ric, Asymmetric) {
  PairwiseCollabTable t({"A", "B", "C"});
  t.add_pair("A", "B", 3);
  t.add_pair("A", "C", 1);
  t.add_pair("B", "C", 4);
  // T=8, C_A=4, C_B=7
  EXPECT_DOUBLE_EQ(*ric(t, "A", "B").value, 3.0 * 4 / (4 * 4));
  EXPECT_DOUBLE_EQ(*ric(t, "B", "A").value, 3.0 * 1 / (7 * 1));
}

TEST(Ric, ZeroPairIsZero) {
  PairwiseCollabTable t({"A", "B", "C"});
  t.add_pair("A", "C", 2);
  t.add_pair("B", "C", 2);
  auto v = ric(t, "A", "B");
  EXPECT_EQ(*v.value, 0.0);
  EXPECT_EQ(v.flag, RicFlag::Ok);
}

TEST(Ric, Flags) {
  PairwiseCollabTable t({"A", "B", "C"});
  t.add_pair("B", "C", 2);
  auto none = ric(t, "A", "B");
  EXPECT_FALSE(none.value);
  EXPECT_EQ(none.flag, RicFlag::NoCollaborations);
  // B's only link is A, so the denominator vanishes.
  PairwiseCollabTable e({"A", "B", "C"});
  e.add_pair("A", "B", 2);
  e.add_pair("A", "C", 1);
  auto ex = ric(e, "A", "B");
  EXPECT_EQ(ex.flag, RicFlag::ExclusivePartner);
  EXPECT_TRUE(std::isinf(*ex.value));
  EXPECT_EQ(to_string(RicFlag::ExclusivePartner), "exclusive_partner");
  EXPECT_EQ(to_string(RicFlag::NoCollaborations), "no_collaborations");
}

TEST(Ric, Errors) {
  auto t = hand_table();
  EXPECT_THROW(ric(t, "A", "A"), Error);
  EXPECT_THROW(ric(t, "A", "Z"), Error);
  EXPECT_THROW(PairwiseCollabTable({"A", "A"}), Error);
  PairwiseCollabTable other({"A", "B"});
  EXPECT_THROW(t.merge(other), Error);
}

TEST(PairwiseTable, TripleContributesToEveryPair) {
  PairwiseCollabTable t({"A", "B", "C"});
  t.add_paper({"A", "B", "C"});
  t.add_paper({"A"});
  t.add_paper({"A", "Outside"});
  EXPECT_EQ(t.count("A", "B"), 1u);
  EXPECT_EQ(t.count("A", "C"), 1u);
  EXPECT_EQ(t.count("B", "C"), 1u);
  EXPECT_EQ(t.total(), 3u);
}

TEST(PairwiseTable, SymmetricWithZeroDiagonal) {
  std::mt19937_64 gen(11);
  const std::vector<std::string> sys{"A", "B", "C", "D", "E"};
  std::vector<PublicationRecord> rs;
  for (const auto& p : random_papers(gen, sys, 400)) rs.push_back(rec(2000, p));
  auto t = pairwise_table(Corpus(rs, {}), sys);
  std::uint64_t row_sum = 0;
  for (const auto& x : sys) {
    EXPECT_EQ(t.count(x, x), 0u);
    row_sum += t.row_total(x);
    for (const auto& y : sys) EXPECT_EQ(t.count(x, y), t.count(y, x));
  }
  EXPECT_EQ(row_sum, 2 * t.total());
}

TEST(PairwiseTable, AdditiveOverDisjointHalves) {
  std::mt19937_64 gen(12);
  const std::vector<std::string> sys{"A", "B", "C", "D"};
  auto papers = random_papers(gen, sys, 300);
  std::vector<PublicationRecord> all, first, second;
  for (std::size_t i = 0; i < papers.size(); ++i) {
    all.push_back(rec(2000, papers[i]));
    (i % 2 ? first : second).push_back(rec(2000, papers[i]));
  }
  auto sum = pairwise_table(Corpus(first, {}), sys);
  sum.merge(pairwise_table(Corpus(second, {}), sys));
  EXPECT_EQ(sum, pairwise_table(Corpus(all, {}), sys));
}

TEST(PairwiseTable, WindowSelectsYears) {
  Corpus c({rec(2000, {"A", "B"}), rec(2001, {"A", "B"}), rec(2002, {"A", "C"})}, {});
  auto t = pairwise_table(c, {"A", "B", "C"}, YearRange{2001, 2002});
  EXPECT_EQ(t.count("A", "B"), 1u);
  EXPECT_EQ(t.count("A", "C"), 1u);
}

TEST(Ric, DuplicatingRecordsLeavesRicUnchanged) {
  std::mt19937_64 gen(13);
  const std::vector<std::string> sys{"A", "B", "C", "D"};
  auto papers = random_papers(gen, sys, 200);
  std::vector<PublicationRecord> once, twice;
  for (const auto& p : papers) {
    once.push_back(rec(2000, p));
    twice.push_back(rec(2000, p));
    twice.push_back(rec(2000, p));
  }
  auto a = pairwise_table(Corpus(once, {}), sys);
  auto b = pairwise_table(Corpus(twice, {}), sys);
  for (const auto& x : sys)
    for (const auto& y : sys) {
      if (x == y) continue;
      auto ra = ric(a, x, y), rb = ric(b, x, y);
      EXPECT_EQ(ra.flag, rb.flag);
      if (ra.value && std::isfinite(*ra.value)) {
        EXPECT_NEAR(*ra.value, *rb.value, 1e-12 * *ra.value);
      }
    }
}

TEST(Ric, MatchesBruteForce) {
  std::mt19937_64 gen(14);
  const std::vector<std::string> names{"A", "B", "C", "D", "E", "F"};
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2 + gen() % 5;
    std::vector<std::string> sys(names.begin(), names.begin() + static_cast<long>(k));
    auto papers = random_papers(gen, sys, 1 + gen() % 1000);
    std::vector<PublicationRecord> rs;
    for (const auto& p : papers) rs.push_back(rec(2000, p));
    auto t = pairwise_table(Corpus(rs, {}), sys);
    for (const auto& x : sys)
      for (const auto& y : sys) {
        if (x == y) continue;
        bool defined = false;
        const double want = brute_ric(papers, sys, x, y, &defined);
        auto got = ric(t, x, y);
        if (!defined) {
          EXPECT_NE(got.flag, RicFlag::Ok);
          continue;
        }
        ASSERT_TRUE(got.value);
        EXPECT_NEAR(*got.value, want, 1e-12 * std::max(1.0, std::fabs(want)));
        EXPECT_EQ(*got.value == 0, t.count(x, y) == 0);
      }
  }
}

TEST(RicSeries, SingleYear) {
  Corpus c({rec(2005, {"India", "USA"}), rec(2005, {"India", "Japan"}),
            rec(2005, {"USA", "Japan"})},
           {});
  auto s = ric_series(c, "India", {"USA", "Japan"}, {2005, 2005}, RicMode::Yearly);
  ASSERT_EQ(s.size(), 2u);
  auto t = pairwise_table(c, {"India", "USA", "Japan"});
  EXPECT_EQ(s[0].partner, "USA");
  EXPECT_EQ(*s[0].ric.value, *ric(t, "India", "USA").value);
  EXPECT_EQ(*s[1].ric.value, *ric(t, "India", "Japan").value);
}

TEST(RicSeries, AbsentPartnerIsZero) {
  Corpus c({rec(2000, {"India", "Japan"}), rec(2001, {"India", "Japan"}),
            rec(2001, {"Japan", "France"})},
           {});
  auto s = ric_series(c, "India", {"USA", "Japan", "France"}, {2000, 2001}, RicMode::Yearly);
  for (const auto& p : s)
    if (p.partner == "USA") {
      EXPECT_EQ(*p.ric.value, 0.0);
    }
}

TEST(RicSeries, EmptyYearIsNull) {
  Corpus c({rec(2000, {"India", "USA"}), rec(2000, {"India", "Japan"}), rec(2002, {"India", "USA"}),
            rec(2002, {"India", "Japan"})},
           {});
  auto s = ric_series(c, "India", {"USA", "Japan"}, {2000, 2002}, RicMode::Yearly);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[2].year, 2001);
  EXPECT_FALSE(s[2].ric.value);
  EXPECT_EQ(s[2].ric.flag, RicFlag::NoCollaborations);
}

TEST(RicSeries, YearlyAndCumulativeMatchBruteForce) {
  std::mt19937_64 gen(15);
  const std::vector<std::string> sys{"India", "USA", "Germany", "Japan"};
  std::vector<PublicationRecord> rs;
  std::map<int, std::vector<std::set<std::string>>> by_year;
  for (int i = 0; i < 600; ++i) {
    std::set<std::string> p{"India"};
    for (std::size_t c = 1; c < sys.size(); ++c)
      if (gen() % 3 == 0) p.insert(sys[c]);
    if (gen() % 4 == 0) p = {sys[1 + gen() % 3], sys[1 + gen() % 3]};
    const int year = 2010 + static_cast<int>(gen() % 5);
    by_year[year].push_back(p);
    rs.push_back(rec(year, p));
  }
  Corpus c(rs, {});
  const std::vector<std::string> partners{"USA", "Germany", "Japan"};
  auto yearly = ric_series(c, "India", partners, {2010, 2014}, RicMode::Yearly);
  auto cumulative = ric_series(c, "India", partners, {2010, 2014}, RicMode::Cumulative);
  ASSERT_EQ(yearly.size(), 15u);
  ASSERT_EQ(cumulative.size(), 15u);
  std::vector<std::set<std::string>> running;
  for (int y = 2010; y <= 2014; ++y) {
    running.insert(running.end(), by_year[y].begin(), by_year[y].end());
    for (std::size_t k = 0; k < partners.size(); ++k) {
      const auto& py = yearly[static_cast<std::size_t>(y - 2010) * 3 + k];
      const auto& pc = cumulative[static_cast<std::size_t>(y - 2010) * 3 + k];
      EXPECT_EQ(py.year, y);
      EXPECT_EQ(py.partner, partners[k]);
      bool d1 = false, d2 = false;
      const double want_y = brute_ric(by_year[y], sys, "India", partners[k], &d1);
      const double want_c = brute_ric(running, sys, "India", partners[k], &d2);
      ASSERT_TRUE(d1 && d2);
      EXPECT_NEAR(*py.ric.value, want_y, 1e-12 * std::max(1.0, want_y));
      EXPECT_NEAR(*pc.ric.value, want_c, 1e-12 * std::max(1.0, want_c));
    }
  }
}

TEST(PairTable, ReadsExternalFile) {
  std::istringstream in("# counts\nA,B,2\nA,C,1\n\nB,C,1\n");
  auto t = read_pair_table(in);
  EXPECT_EQ(t, hand_table());
  EXPECT_EQ(*ric(t, "A", "B").value, 2.0 / 3.0);
  std::istringstream bad("A,B\n");
  EXPECT_THROW(read_pair_table(bad), Error);
  std::istringstream self("A,A,3\n");
  EXPECT_THROW(read_pair_table(self), Error);
}

TEST(Ric, PartnerWithoutLinksIsZeroNotExclusive) {
  PairwiseCollabTable t({"A", "B", "C"});
  t.add_pair("A", "C", 3);
  auto v = ric(t, "A", "B");
  EXPECT_EQ(t.row_total("B"), 0u);
  EXPECT_EQ(*v.value, 0.0);
  EXPECT_EQ(v.flag, RicFlag::Ok);
}
