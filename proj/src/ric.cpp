#include "collabind/ric.hpp"

#include <limits>

#include "collabind/error.hpp"
#include "collabind/strings.hpp"

namespace collabind {

PairwiseCollabTable::PairwiseCollabTable(std::vector<std::string> countries)
    : countries_(std::move(countries)) {
  for (std::size_t i = 0; i < countries_.size(); ++i) {
    if (!index_.emplace(countries_[i], i).second)
      throw Error(ErrorKind::InvalidArgument, "country " + countries_[i] + " listed twice");
  }
  counts_.assign(countries_.size() * countries_.size(), 0);
}

bool PairwiseCollabTable::contains(std::string_view country) const {
  return index_.find(country) != index_.end();
}

std::size_t PairwiseCollabTable::index_of(std::string_view country) const {
  auto it = index_.find(country);
  if (it == index_.end())
    throw Error(ErrorKind::UnknownCountry,
                "country " + std::string(country) + " is not in the country system");
  return it->second;
}

void PairwiseCollabTable::add_paper(const std::set<std::string>& paper_countries) {
  std::vector<std::size_t> present;
  for (const auto& c : paper_countries) {
    auto it = index_.find(c);
    if (it != index_.end()) present.push_back(it->second);
  }
  const std::size_t n = countries_.size();
  for (std::size_t a = 0; a < present.size(); ++a) {
    for (std::size_t b = a + 1; b < present.size(); ++b) {
      ++counts_[present[a] * n + present[b]];
      ++counts_[present[b] * n + present[a]];
    }
  }
}

void PairwiseCollabTable::add_pair(std::string_view x, std::string_view y, std::uint64_t count) {
  auto i = index_of(x);
  auto j = index_of(y);
  if (i == j) throw Error(ErrorKind::InvalidArgument, "self-collaboration for " + std::string(x));
  const std::size_t n = countries_.size();
  counts_[i * n + j] += count;
  counts_[j * n + i] += count;
}

void PairwiseCollabTable::merge(const PairwiseCollabTable& other) {
  if (other.countries_ != countries_)
    throw Error(ErrorKind::InvalidArgument, "cannot merge tables over different country systems");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::uint64_t PairwiseCollabTable::count(std::string_view x, std::string_view y) const {
  return counts_[index_of(x) * countries_.size() + index_of(y)];
}

std::uint64_t PairwiseCollabTable::row_total(std::string_view x) const {
  const std::size_t n = countries_.size();
  const std::size_t i = index_of(x);
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) sum += counts_[i * n + j];
  return sum;
}

std::uint64_t PairwiseCollabTable::total() const {
  const std::size_t n = countries_.size();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += counts_[i * n + j];
  return sum;
}

PairwiseCollabTable pairwise_table(const Corpus& corpus, const std::vector<std::string>& countries,
                                   std::optional<YearRange> window) {
  if (countries.empty()) throw Error(ErrorKind::InvalidArgument, "empty country system");
  PairwiseCollabTable table(countries);
  for (const auto& r : corpus) {
    if (window && !window->contains(r.year)) continue;
    table.add_paper(r.countries);
  }
  return table;
}

PairwiseCollabTable read_pair_table(std::istream& in) {
  struct Entry {
    std::string x, y;
    std::uint64_t n;
  };
  std::vector<Entry> entries;
  std::vector<std::string> order;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = text::trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    auto cells = text::split(body, ',');
    if (cells.size() != 3)
      throw Error(ErrorKind::InvalidArgument,
                  "pair table line " + std::to_string(line_no) + ": expected x,y,count");
    Entry e{std::string(text::trim(cells[0])), std::string(text::trim(cells[1])), 0};
    try {
      std::size_t used = 0;
      auto cell = std::string(text::trim(cells[2]));
      e.n = std::stoull(cell, &used);
      if (used != cell.size() || cell.front() == '-') throw std::invalid_argument("count");
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument,
                  "pair table line " + std::to_string(line_no) + ": bad count");
    }
    for (const auto& c : {e.x, e.y})
      if (seen.insert(c).second) order.push_back(c);
    entries.push_back(std::move(e));
  }
  PairwiseCollabTable table(order);
  for (const auto& e : entries) table.add_pair(e.x, e.y, e.n);
  return table;
}

std::string_view to_string(RicFlag flag) {
  switch (flag) {
    case RicFlag::Ok: return "ok";
    case RicFlag::NoCollaborations: return "no_collaborations";
    case RicFlag::ExclusivePartner: return "exclusive_partner";
  }
  return "ok";
}

RicValue ric(const PairwiseCollabTable& table, std::string_view x, std::string_view y) {
  if (x == y) throw Error(ErrorKind::InvalidArgument, "RIC needs two distinct countries");
  const std::uint64_t cxy = table.count(x, y);
  const std::uint64_t cx = table.row_total(x);
  const std::uint64_t cy = table.row_total(y);
  const std::uint64_t t = table.total();
  if (cx == 0) return {std::nullopt, RicFlag::NoCollaborations};
  if (cxy == 0) return {0.0, RicFlag::Ok};
  if (cy == cxy) return {std::numeric_limits<double>::infinity(), RicFlag::ExclusivePartner};
  const double numerator = static_cast<double>(cxy) * static_cast<double>(t - cx);
  const double denominator = static_cast<double>(cx) * static_cast<double>(cy - cxy);
  return {numerator / denominator, RicFlag::Ok};
}

std::vector<RicPoint> ric_series(const Corpus& corpus, std::string_view focal,
                                 const std::vector<std::string>& partners, YearRange years,
                                 RicMode mode, const std::vector<std::string>& system) {
  if (!years.valid()) throw Error(ErrorKind::InvalidArgument, "empty year range");
  std::vector<std::string> countries = system;
  if (countries.empty()) {
    countries.emplace_back(focal);
    for (const auto& p : partners)
      if (p != focal) countries.push_back(p);
  }
  PairwiseCollabTable running(countries);
  if (!running.contains(focal))
    throw Error(ErrorKind::UnknownCountry, std::string(focal) + " is not in the country system");
  for (const auto& p : partners)
    if (!running.contains(p))
      throw Error(ErrorKind::UnknownCountry, p + " is not in the country system");

  std::map<int, PairwiseCollabTable> per_year;
  for (int y = years.from; y <= years.to; ++y) per_year.emplace(y, PairwiseCollabTable(countries));
  for (const auto& r : corpus)
    if (years.contains(r.year)) per_year.at(r.year).add_paper(r.countries);

  std::vector<RicPoint> out;
  for (auto& [year, table] : per_year) {
    const PairwiseCollabTable* slice = &table;
    if (mode == RicMode::Cumulative) {
      running.merge(table);
      slice = &running;
    }
    for (const auto& p : partners) out.push_back({year, p, ric(*slice, focal, p)});
  }
  return out;
}

}  // namespace collabind
