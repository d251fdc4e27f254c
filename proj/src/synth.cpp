#include "collabind/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "collabind/country.hpp"
#include "collabind/error.hpp"
#include "collabind/strings.hpp"

namespace collabind {
namespace {

constexpr const char* kSurnames[] = {
    "Sharma", "Gupta",  "Smith",  "Muller", "Wang",   "Tanaka", "Martin", "Kim",
    "Brown",  "Rossi",  "Singh",  "Patel",  "Jones",  "Schmidt", "Li",    "Sato",
    "Dubois", "Park",   "Wilson", "Ferrari"};
constexpr const char* kGivenNames[] = {"Anita", "Brian",  "Chen",   "Divya", "Erik",
                                       "Fatima", "Gopal", "Hiro",   "Irene", "Jun",
                                       "Kavya", "Lukas",  "Meera",  "Nikhil", "Olga"};
constexpr const char* kUsStates[] = {"MA", "CA", "NY", "IL", "TX", "MI", "OH", "WA"};
constexpr const char* kUsCities[] = {"Cambridge", "Berkeley", "Ithaca", "Urbana",
                                     "Austin",    "Ann Arbor", "Columbus", "Seattle"};
constexpr const char* kIndianCities[] = {"New Delhi", "Mumbai", "Bangalore", "Kanpur",
                                         "Varanasi",  "Chennai", "Kolkata"};

// Portable draws: mt19937_64 output is fully specified, the std
// distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * n); }

  // Geometric number of failures before the first success (mean (1 - p) / p).
  std::uint64_t geometric(double p) {
    if (p >= 1.0) return 0;
    const double u = uniform();
    return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
  }

  std::size_t weighted(const std::vector<WeightedCountry>& pool) {
    double total = 0;
    for (const auto& c : pool) total += c.weight;
    double x = uniform() * total;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      x -= pool[i].weight;
      if (x < 0) return i;
    }
    return pool.size() - 1;
  }

 private:
  std::mt19937_64 gen_;
};

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::string address_for(const std::string& raw_country, Draw& draw) {
  std::ostringstream a;
  if (raw_country == "USA") {
    auto k = draw.index(std::size(kUsStates));
    a << "Univ " << kUsCities[k] << ", Dept Phys, " << kUsCities[k] << ", " << kUsStates[k] << ' '
      << 10000 + draw.index(89999) << " USA";
  } else if (raw_country == "India") {
    auto k = draw.index(std::size(kIndianCities));
    a << "Indian Inst Sci Res, Dept Chem, " << kIndianCities[k] << ' ' << 110000 + draw.index(80000)
      << ", India";
  } else if (raw_country == "Peoples R China") {
    a << "Tsinghua Univ, Dept Mat Sci, Beijing " << 100000 + draw.index(9000)
      << ", Peoples R China";
  } else {
    a << "Natl Univ " << raw_country << ", Dept Biol, Capital City, " << raw_country;
  }
  return a.str();
}

std::string format_doi(std::uint64_t seed, std::size_t i) {
  return "10.5555/SYNTH." + std::to_string(seed) + "." + std::to_string(i);
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

double parse_double(const std::string& key, std::string_view value) {
  try {
    std::size_t used = 0;
    std::string s(value);
    double d = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(key);
    return d;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidSpec, "bad number for " + key + ": " + std::string(value));
  }
}

std::uint64_t parse_uint(const std::string& key, std::string_view value) {
  try {
    std::size_t used = 0;
    std::string s(value);
    if (!s.empty() && s.front() == '-') throw std::invalid_argument(key);
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidSpec, "bad integer for " + key + ": " + std::string(value));
  }
}

}  // namespace

void SynthSpec::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidSpec, m); };
  if (!years.valid()) fail("years: empty range");
  if (focal.empty() || partner.empty()) fail("focal and partner are required");
  for (double p : {bilateral_rate, icp_rate, citation_model.zero_inflation, no_doi_rate,
                   duplicate_rate, reject_rate})
    if (!is_probability(p)) fail("probabilities must lie in [0, 1]");
  if (bilateral_rate + icp_rate > 1.0 + 1e-12) fail("bilateral_rate + icp_rate exceeds 1");
  if (!(citation_model.mean >= 1.0)) fail("citation_mean must be >= 1");
  if (category_pool.empty()) fail("category pool is empty");

  CountryNormalizer norm;
  const auto f = norm.normalize(focal);
  const auto p = norm.normalize(partner);
  if (f == p) fail("focal and partner must differ");
  if (icp_rate > 0 && country_pool.empty()) fail("country pool is empty");
  std::set<std::string> names;
  for (const auto& c : country_pool) {
    if (!(c.weight > 0)) fail("country weights must be positive");
    auto n = norm.normalize(c.country);
    if (n == f || n == p) fail("country pool must exclude focal and partner");
    if (!names.insert(n).second) fail("country " + n + " listed twice in the pool");
  }
}

SynthSpec parse_synth_spec(std::istream& in) {
  SynthSpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = text::trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidSpec, "line " + std::to_string(line_no) + ": expected key=value");
    std::string key(text::trim(body.substr(0, eq)));
    auto value = text::trim(body.substr(eq + 1));

    if (key == "seed") {
      spec.seed = parse_uint(key, value);
    } else if (key == "records") {
      spec.record_count = parse_uint(key, value);
    } else if (key == "years") {
      auto dash = value.find('-');
      if (dash == std::string_view::npos) throw Error(ErrorKind::InvalidSpec, "years: expected A-B");
      spec.years = {static_cast<int>(parse_uint(key, text::trim(value.substr(0, dash)))),
                    static_cast<int>(parse_uint(key, text::trim(value.substr(dash + 1))))};
    } else if (key == "focal") {
      spec.focal = std::string(value);
    } else if (key == "partner") {
      spec.partner = std::string(value);
    } else if (key == "countries") {
      spec.country_pool.clear();
      for (const auto& item : text::split(value, ',')) {
        auto entry = text::trim(item);
        if (entry.empty()) continue;
        auto colon = entry.rfind(':');
        WeightedCountry c;
        c.country = std::string(text::trim(entry.substr(0, colon)));
        if (colon != std::string_view::npos) c.weight = parse_double(key, entry.substr(colon + 1));
        spec.country_pool.push_back(std::move(c));
      }
    } else if (key == "bilateral_rate") {
      spec.bilateral_rate = parse_double(key, value);
    } else if (key == "icp_rate") {
      spec.icp_rate = parse_double(key, value);
    } else if (key == "zero_inflation") {
      spec.citation_model.zero_inflation = parse_double(key, value);
    } else if (key == "citation_mean") {
      spec.citation_model.mean = parse_double(key, value);
    } else if (key == "categories") {
      spec.category_pool.clear();
      for (const auto& c : text::split(value, '|'))
        if (auto t = text::trim(c); !t.empty()) spec.category_pool.emplace_back(t);
    } else if (key == "no_doi_rate") {
      spec.no_doi_rate = parse_double(key, value);
    } else if (key == "duplicate_rate") {
      spec.duplicate_rate = parse_double(key, value);
    } else if (key == "reject_rate") {
      spec.reject_rate = parse_double(key, value);
    } else {
      throw Error(ErrorKind::InvalidSpec, "unknown key " + key);
    }
  }
  spec.validate();
  return spec;
}

std::string_view to_string(TruthStatus status) {
  switch (status) {
    case TruthStatus::Admitted: return "admitted";
    case TruthStatus::Duplicate: return "duplicate";
    case TruthStatus::Rejected: return "rejected";
  }
  return "admitted";
}

SynthOutput generate(const SynthSpec& spec) {
  spec.validate();
  Draw draw(spec.seed);
  CountryNormalizer norm;
  SynthOutput out;
  std::vector<std::size_t> duplicable;  // admitted rows with a DOI
  const auto span = static_cast<std::size_t>(spec.years.to - spec.years.from + 1);

  for (std::size_t i = 0; i < spec.record_count; ++i) {
    if (!duplicable.empty() && draw.chance(spec.duplicate_rate)) {
      auto src = duplicable[draw.index(duplicable.size())];
      out.blocks.push_back(out.blocks[src]);
      TruthRow t = out.truth[src];
      t.index = i;
      t.status = TruthStatus::Duplicate;
      out.truth.push_back(std::move(t));
      continue;
    }

    TruthRow truth;
    truth.index = i;
    truth.year = spec.years.from + static_cast<int>(draw.index(span));

    std::vector<std::string> raw_countries{spec.focal};
    const double u = draw.uniform();
    if (u < spec.bilateral_rate) {
      truth.label = ClassificationLabel::BilateralPartner;
      raw_countries.push_back(spec.partner);
      if (!spec.country_pool.empty() && draw.chance(0.35))
        raw_countries.push_back(spec.country_pool[draw.weighted(spec.country_pool)].country);
    } else if (u < spec.bilateral_rate + spec.icp_rate) {
      truth.label = ClassificationLabel::OtherInternational;
      const std::size_t want = std::min<std::size_t>(draw.chance(0.3) ? 2 : 1,
                                                     spec.country_pool.size());
      while (raw_countries.size() < 1 + want) {
        const auto& c = spec.country_pool[draw.weighted(spec.country_pool)].country;
        if (std::find(raw_countries.begin(), raw_countries.end(), c) == raw_countries.end())
          raw_countries.push_back(c);
      }
    } else {
      truth.label = ClassificationLabel::Indigenous;
    }
    for (std::size_t k = raw_countries.size(); k > 1; --k)
      std::swap(raw_countries[k - 1], raw_countries[draw.index(k)]);

    // Authors: address k receives author k, extra authors land anywhere.
    const std::size_t n_addr = raw_countries.size();
    const std::size_t n_auth = n_addr + draw.index(3);
    const std::size_t surname_offset = draw.index(std::size(kSurnames));
    std::vector<std::string> full_names, short_names;
    std::vector<std::vector<std::string>> address_authors(n_addr);
    for (std::size_t a = 0; a < n_auth; ++a) {
      std::string surname = kSurnames[(surname_offset + a) % std::size(kSurnames)];
      std::string given = kGivenNames[draw.index(std::size(kGivenNames))];
      full_names.push_back(surname + ", " + given);
      short_names.push_back(surname + ", " + given.substr(0, 1));
      address_authors[a < n_addr ? a : draw.index(n_addr)].push_back(full_names.back());
    }

    RawRecordBlock block;
    block.fields["PT"] = {"J"};
    block.fields["AU"] = short_names;
    block.fields["AF"] = full_names;
    block.fields["TI"] = {"Synthetic record " + std::to_string(i)};
    block.fields["SO"] = {"JOURNAL OF SYNTHETIC RESULTS"};
    block.fields["LA"] = {"English"};

    const bool rejected = draw.chance(spec.reject_rate);
    block.fields["DT"] = {rejected ? "Letter" : (draw.chance(0.1) ? "Review" : "Article")};

    // C1 order is rotated so the first address is not always the first author's.
    const std::size_t rotate = draw.index(n_addr);
    auto& c1 = block.fields["C1"];
    for (std::size_t k = 0; k < n_addr; ++k) {
      const std::size_t j = (k + rotate) % n_addr;
      c1.push_back("[" + join(address_authors[j], "; ") + "] " +
                   address_for(raw_countries[j], draw) + ".");
    }

    std::vector<std::string> cats;
    const std::size_t n_cats = std::min<std::size_t>(
        1 + (draw.chance(0.4) ? 1 : 0) + (draw.chance(0.15) ? 1 : 0), spec.category_pool.size());
    while (cats.size() < n_cats) {
      const auto& c = spec.category_pool[draw.index(spec.category_pool.size())];
      if (std::find(cats.begin(), cats.end(), c) == cats.end()) cats.push_back(c);
    }
    block.fields["WC"] = {join(cats, "; ")};

    if (!draw.chance(spec.citation_model.zero_inflation))
      truth.times_cited = 1 + draw.geometric(1.0 / spec.citation_model.mean);
    block.fields["Z9"] = {std::to_string(truth.times_cited)};
    block.fields["PY"] = {std::to_string(truth.year)};

    if (!draw.chance(spec.no_doi_rate)) {
      auto doi = format_doi(spec.seed, i);
      block.fields["DI"] = {doi};
      truth.doi = text::to_lower(doi);
    }

    for (const auto& c : raw_countries) truth.countries.insert(norm.normalize(c));
    truth.first_author_country = norm.normalize(raw_countries[0]);
    truth.status = rejected ? TruthStatus::Rejected : TruthStatus::Admitted;
    if (!rejected && truth.doi) duplicable.push_back(out.blocks.size());

    block.line = i;
    out.blocks.push_back(std::move(block));
    out.truth.push_back(std::move(truth));
  }
  return out;
}

void write_truth(std::ostream& out, const std::vector<TruthRow>& truth) {
  out << "index\tdoi\tyear\tlabel\tcountries\ttimes_cited\tfirst_author_country\tstatus\n";
  for (const auto& t : truth) {
    std::vector<std::string> countries(t.countries.begin(), t.countries.end());
    out << t.index << '\t' << t.doi.value_or("") << '\t' << t.year << '\t' << to_string(t.label)
        << '\t' << join(countries, ";") << '\t' << t.times_cited << '\t'
        << t.first_author_country << '\t' << to_string(t.status) << '\n';
  }
}

std::vector<TruthRow> read_truth(std::istream& in) {
  std::vector<TruthRow> rows;
  std::string line;
  if (!std::getline(in, line) || line.rfind("index\t", 0) != 0)
    throw Error(ErrorKind::HeaderMissing, "truth sidecar lacks its header row");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = text::split(line, '\t');
    if (cells.size() != 8) throw Error(ErrorKind::RowArityMismatch, "truth row: " + line);
    TruthRow t;
    t.index = parse_uint("index", cells[0]);
    if (!cells[1].empty()) t.doi = cells[1];
    t.year = static_cast<int>(parse_uint("year", cells[2]));
    auto label = parse_label(cells[3]);
    if (!label) throw Error(ErrorKind::InvalidArgument, "truth label " + cells[3]);
    t.label = *label;
    for (const auto& c : text::split(cells[4], ';'))
      if (!c.empty()) t.countries.insert(c);
    t.times_cited = parse_uint("times_cited", cells[5]);
    t.first_author_country = cells[6];
    if (cells[7] == "admitted") t.status = TruthStatus::Admitted;
    else if (cells[7] == "duplicate") t.status = TruthStatus::Duplicate;
    else if (cells[7] == "rejected") t.status = TruthStatus::Rejected;
    else throw Error(ErrorKind::InvalidArgument, "truth status " + cells[7]);
    rows.push_back(std::move(t));
  }
  return rows;
}

void write_synth_outputs(const std::filesystem::path& dir, const SynthOutput& output) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("records.txt");
    write_field_tagged(f, output.blocks);
  }
  {
    auto f = open("records.tsv");
    write_tab_delimited(f, output.blocks);
  }
  {
    auto f = open("truth.tsv");
    write_truth(f, output.truth);
  }
}

}  // namespace collabind
