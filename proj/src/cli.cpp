#include "collabind/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "collabind/boost.hpp"
#include "collabind/categories.hpp"
#include "collabind/country.hpp"
#include "collabind/error.hpp"
#include "collabind/indicators.hpp"
#include "collabind/ingest.hpp"
#include "collabind/interchange.hpp"
#include "collabind/report.hpp"
#include "collabind/ric.hpp"
#include "collabind/strings.hpp"
#include "collabind/synth.hpp"

namespace collabind::cli {
namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kDefaultRicPartners{
    "USA", "Germany", "England", "South Korea", "China",
    "France", "Japan", "Australia", "Italy", "Canada"};

enum class Verbosity { Quiet, Normal, Verbose };

struct RunConfig {
  std::string focal = "India";
  std::string partner = "USA";
  int year_from = 1990;
  int year_to = 2020;
  std::vector<std::string> inputs;
  std::string input_format = "tagged";
  std::string corpus_path;
  std::string format = "csv";
  std::string out;
  std::size_t top_k = 10;
  std::string alias_map;
  std::vector<std::string> ric_countries;
  Verbosity verbosity = Verbosity::Normal;

  void validate() const {
    if (focal == partner)
      throw Error(ErrorKind::InvalidArgument, "focal and partner must differ");
    if (year_from > year_to) throw Error(ErrorKind::InvalidArgument, "empty year window");
  }
};

struct Session {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
  CountryNormalizer normalizer;

  void log(Verbosity level, const std::string& message) const {
    if (static_cast<int>(cfg.verbosity) >= static_cast<int>(level)) err << message << '\n';
  }

  void prepare() {
    std::string alias = cfg.alias_map;
    if (alias.empty())
      if (const char* env = std::getenv(kAliasMapEnv)) alias = env;
    if (!alias.empty()) normalizer.load_aliases_file(alias);
    cfg.focal = normalizer.normalize(cfg.focal);
    cfg.partner = normalizer.normalize(cfg.partner);
    for (auto& c : cfg.ric_countries) c = normalizer.normalize(c);
    cfg.validate();
  }

  IngestFilters filters() const {
    IngestFilters f;
    f.focal = cfg.focal;
    f.year_window = YearRange{cfg.year_from, cfg.year_to};
    return f;
  }

  Corpus ingest_inputs(const IngestFilters& f) const {
    if (cfg.inputs.empty()) throw Error(ErrorKind::InvalidArgument, "no input files given");
    CorpusBuilder builder(f, normalizer);
    std::size_t issues = 0;
    for (const auto& path : cfg.inputs) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
      std::vector<ParseIssue> found;
      if (cfg.input_format == "tsv") {
        auto parsed = parse_tab_delimited(in);
        for (const auto& b : parsed.blocks) builder.add(b);
        found = std::move(parsed.issues);
      } else {
        FieldTaggedReader reader(in);
        while (auto block = reader.next()) builder.add(*block);
        found = reader.issues();
      }
      for (const auto& i : found)
        log(Verbosity::Verbose, path + ":" + std::to_string(i.line) + ": " +
                                   std::string(to_string(i.kind)) + ": " + i.message);
      issues += found.size();
    }
    if (issues > 0) log(Verbosity::Normal, "warning: " + std::to_string(issues) + " parse issue(s)");
    auto corpus = std::move(builder).finish();
    const auto& s = corpus.dedup_stats();
    log(Verbosity::Verbose, "ingested " + std::to_string(s.input_count) + " block(s): " +
                                std::to_string(corpus.size()) + " kept, " +
                                std::to_string(s.duplicate_count) + " duplicate, " +
                                std::to_string(s.rejected_count) + " rejected");
    if (s.citation_warnings > 0)
      log(Verbosity::Normal, "warning: " + std::to_string(s.citation_warnings) +
                                 " record(s) with missing or non-numeric Z9");
    return corpus;
  }

  Corpus load() const {
    if (!cfg.corpus_path.empty()) {
      if (!cfg.inputs.empty())
        throw Error(ErrorKind::InvalidArgument, "give either --corpus or --input, not both");
      return read_corpus_file(cfg.corpus_path);
    }
    return ingest_inputs(filters());
  }

  YearRange corpus_years(const Corpus& corpus) const {
    if (!cfg.corpus_path.empty() && !corpus.empty()) {
      YearRange r{corpus.records().front().year, corpus.records().front().year};
      for (const auto& rec : corpus) {
        r.from = std::min(r.from, rec.year);
        r.to = std::max(r.to, rec.year);
      }
      return r;
    }
    return {cfg.year_from, cfg.year_to};
  }

  template <typename Fn>
  void emit(Fn&& write) const {
    if (cfg.out.empty()) {
      write(out);
      return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + cfg.out);
    write(f);
  }

  void emit_json(const ordered_json& j) const {
    emit([&](std::ostream& o) { o << j.dump(2) << '\n'; });
  }
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
  f << content;
}

template <typename Fn>
std::string render(Fn&& write) {
  std::ostringstream s;
  write(s);
  return s.str();
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool analysis) {
  cmd->add_option("--focal", cfg.focal, "Focal country")->capture_default_str();
  cmd->add_option("--from", cfg.year_from, "First publication year")->capture_default_str();
  cmd->add_option("--to", cfg.year_to, "Last publication year")->capture_default_str();
  cmd->add_option("--alias-map", cfg.alias_map,
                  std::string("Country alias file (default: $") + kAliasMapEnv + ")");
  cmd->add_option("--out", cfg.out, "Output path (default: stdout)");
  cmd->add_flag_callback("--quiet", [&cfg] { cfg.verbosity = Verbosity::Quiet; });
  cmd->add_flag_callback("--verbose", [&cfg] { cfg.verbosity = Verbosity::Verbose; });
  if (!analysis) return;
  cmd->add_option("--partner", cfg.partner, "Partner country")->capture_default_str();
  cmd->add_option("--corpus", cfg.corpus_path, "Normalized corpus produced by `ingest`");
  cmd->add_option("--input", cfg.inputs, "Raw WoS export(s), ingested on the fly");
  cmd->add_option("--input-format", cfg.input_format, "Raw export format")
      ->check(CLI::IsMember({"tagged", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& part : text::split(s, ','))
    if (auto t = text::trim(part); !t.empty()) out.emplace_back(t);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bilateral research-collaboration indicators from Web of Science exports",
               argv.empty() ? "collabind" : argv.front()};
  app.require_subcommand(1);

  RunConfig cfg;

  auto* ingest = app.add_subcommand("ingest", "Parse, filter and deduplicate WoS exports");
  add_common(ingest, cfg, false);
  ingest->add_option("--input", cfg.inputs, "WoS export file(s)")->required();
  ingest->add_option("--format", cfg.input_format, "Export format")
      ->check(CLI::IsMember({"tagged", "tsv"}))
      ->capture_default_str();
  std::string language = "English";
  std::string doc_types = "Article,Review";
  ingest->add_option("--language", language, "LA filter; empty accepts any")->capture_default_str();
  ingest->add_option("--doc-types", doc_types, "Accepted DT values")->capture_default_str();

  auto* timeseries = app.add_subcommand("timeseries", "Year-wise shares and CAGR");
  add_common(timeseries, cfg, true);

  auto* impact = app.add_subcommand("impact", "Cited percentage and citations per paper");
  add_common(impact, cfg, true);

  auto* first_author = app.add_subcommand("first-author", "Share of bilateral papers first-authored by the focal country");
  add_common(first_author, cfg, true);

  auto* ric_cmd = app.add_subcommand("ric", "Relative intensity of collaboration");
  add_common(ric_cmd, cfg, true);
  std::string partners_arg;
  std::string system_arg;
  std::string ric_mode = "yearly";
  std::string table_path;
  ric_cmd->add_option("--partners", partners_arg, "Comma-separated partner countries")->required();
  ric_cmd->add_option("--system", system_arg, "Country system (default: focal + partners)");
  ric_cmd->add_option("--mode", ric_mode, "Time slicing")
      ->check(CLI::IsMember({"yearly", "cumulative"}))
      ->capture_default_str();
  ric_cmd->add_option("--table", table_path, "Externally supplied pair-count table (x,y,count)");

  auto* boost_cmd = app.add_subcommand("boost", "Productivity, citation and citedness boost");
  add_common(boost_cmd, cfg, true);
  std::string citedness_mode = "combined";
  boost_cmd->add_option("--citedness", citedness_mode, "Citedness boost form")
      ->check(CLI::IsMember({"combined", "bilateral-only"}))
      ->capture_default_str();
  std::vector<std::uint64_t> totals;
  boost_cmd->add_option("--totals", totals,
                        "Aggregates instead of a corpus: T_IP T_IPUS T_IC T_ICUS T_IP_cited "
                        "T_cited_combined")
      ->expected(6);

  auto* categories = app.add_subcommand("categories", "WoS category volume and breadth");
  add_common(categories, cfg, true);
  categories->add_option("--top", cfg.top_k, "Number of categories")->capture_default_str();
  bool breadth = false;
  categories->add_flag("--breadth", breadth, "Per-year distinct category counts instead of top-k");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic WoS export with ground truth");
  std::string spec_path;
  std::string synth_dir;
  synth->add_option("--spec", spec_path, "key=value generator spec")->required();
  synth->add_option("--out", synth_dir, "Output directory")->required();

  auto* report_cmd = app.add_subcommand("report", "All tables, boost report and figure data");
  add_common(report_cmd, cfg, true);
  std::string out_dir;
  std::string report_partners;
  report_cmd->add_option("--out-dir", out_dir, "Output directory")->required();
  report_cmd->add_option("--top", cfg.top_k, "Top categories")->capture_default_str();
  report_cmd->add_option("--ric-partners", report_partners,
                         "Comma-separated partners for RIC figure data");

  std::vector<char*> cargv;
  std::vector<std::string> storage = argv.empty() ? std::vector<std::string>{"collabind"} : argv;
  for (auto& a : storage) cargv.push_back(a.data());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << ordered_json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    err << app.help();
    return kExitUsage;
  }
  if (cfg.top_k < 1) {
    err << ordered_json{{"error", "usage"}, {"message", "--top must be >= 1"}}.dump() << '\n';
    return kExitUsage;
  }

  try {
    if (*synth) {
      std::ifstream in(spec_path);
      if (!in) throw Error(ErrorKind::Io, "cannot open spec " + spec_path);
      auto output = generate(parse_synth_spec(in));
      write_synth_outputs(synth_dir, output);
      return kExitOk;
    }

    if (!report_partners.empty()) cfg.ric_countries = split_list(report_partners);
    Session s{cfg, out, err, CountryNormalizer{}};
    s.prepare();
    const auto& c = s.cfg;

    if (*ingest) {
      auto f = s.filters();
      f.language = language;
      f.doc_types.clear();
      for (const auto& t : split_list(doc_types)) {
        auto dt = parse_doc_type(t);
        if (dt == DocType::Other && !text::iequals(t, "Other"))
          throw Error(ErrorKind::InvalidArgument, "unsupported document type " + t);
        f.doc_types.insert(dt);
      }
      auto corpus = s.ingest_inputs(f);
      s.emit([&](std::ostream& o) { write_corpus(o, corpus); });
      return kExitOk;
    }

    if (*boost_cmd) {
      const auto mode =
          citedness_mode == "combined" ? CitednessMode::Combined : CitednessMode::BilateralOnly;
      BoostReport r;
      if (!totals.empty()) {
        BoostInputs in{totals[0], totals[1], totals[2], totals[3], totals[4], totals[5]};
        r = boost_report(in, mode);
      } else {
        r = boost_report(s.load(), c.focal, c.partner, mode);
      }
      if (c.format == "json")
        s.emit_json(report::boost_json(r, c.focal, c.partner));
      else
        s.emit([&](std::ostream& o) { report::boost_csv(o, r); });
      return kExitOk;
    }

    if (*ric_cmd) {
      auto partners = split_list(partners_arg);
      for (auto& p : partners) p = s.normalizer.normalize(p);
      auto system = split_list(system_arg);
      for (auto& p : system) p = s.normalizer.normalize(p);
      std::vector<RicPoint> points;
      if (!table_path.empty()) {
        std::ifstream in(table_path);
        if (!in) throw Error(ErrorKind::Io, "cannot open " + table_path);
        auto table = read_pair_table(in);
        for (const auto& p : partners) points.push_back({0, p, ric(table, c.focal, p)});
      } else {
        auto corpus = s.load();
        points = ric_series(corpus, c.focal, partners, s.corpus_years(corpus),
                            ric_mode == "yearly" ? RicMode::Yearly : RicMode::Cumulative, system);
      }
      if (c.format == "json")
        s.emit_json(report::ric_json(points));
      else
        s.emit([&](std::ostream& o) { report::ric_csv(o, points); });
      return kExitOk;
    }

    auto corpus = s.load();

    if (*timeseries) {
      auto series = year_series(corpus, c.focal, c.partner);
      if (c.format == "json")
        s.emit_json(report::year_series_json(series));
      else
        s.emit([&](std::ostream& o) { report::year_series_csv(o, series); });
    } else if (*impact) {
      auto summary = impact_summary(corpus, c.focal, c.partner);
      if (c.format == "json")
        s.emit_json(report::impact_json(summary));
      else
        s.emit([&](std::ostream& o) { report::impact_csv(o, summary); });
    } else if (*first_author) {
      auto share = first_author_share(corpus, c.focal, c.partner);
      if (c.format == "json")
        s.emit_json(report::first_author_json(share));
      else
        s.emit([&](std::ostream& o) { report::first_author_csv(o, share); });
    } else if (*categories) {
      if (breadth) {
        auto b = category_breadth(corpus, c.focal, c.partner, s.corpus_years(corpus));
        if (c.format == "json")
          s.emit_json(report::breadth_json(b));
        else
          s.emit([&](std::ostream& o) { report::breadth_csv(o, b); });
      } else {
        auto top = top_categories(corpus, c.focal, c.partner, c.top_k);
        if (c.format == "json")
          s.emit_json(report::categories_json(top));
        else
          s.emit([&](std::ostream& o) { report::categories_csv(o, top); });
      }
    } else if (*report_cmd) {
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      const auto years = s.corpus_years(corpus);

      auto series = year_series(corpus, c.focal, c.partner);
      write_file(dir / "table1_year_series.csv",
                 render([&](std::ostream& o) { report::year_series_csv(o, series); }));
      write_file(dir / "table1_year_series.json", report::year_series_json(series).dump(2) + "\n");

      auto summary = impact_summary(corpus, c.focal, c.partner);
      write_file(dir / "table2_impact.csv",
                 render([&](std::ostream& o) { report::impact_csv(o, summary); }));
      write_file(dir / "table2_impact.json", report::impact_json(summary).dump(2) + "\n");

      auto top = top_categories(corpus, c.focal, c.partner, c.top_k);
      write_file(dir / "table3_top_categories.csv",
                 render([&](std::ostream& o) { report::categories_csv(o, top); }));
      write_file(dir / "table3_top_categories.json", report::categories_json(top).dump(2) + "\n");

      ordered_json boost_doc;
      try {
        boost_doc = report::boost_json(boost_report(corpus, c.focal, c.partner), c.focal, c.partner);
      } catch (const Error& e) {
        boost_doc = {{"focal", c.focal},
                     {"partner", c.partner},
                     {"error", std::string(to_string(e.kind()))},
                     {"message", e.what()}};
      }
      write_file(dir / "boost.json", boost_doc.dump(2) + "\n");

      std::vector<std::string> partners;
      for (const auto& p : c.ric_countries.empty() ? kDefaultRicPartners : c.ric_countries) {
        auto n = s.normalizer.normalize(p);
        if (n != c.focal && std::find(partners.begin(), partners.end(), n) == partners.end())
          partners.push_back(n);
      }
      for (auto [mode, name] : {std::pair{RicMode::Yearly, "fig1_ric_yearly.csv"},
                                std::pair{RicMode::Cumulative, "fig1_ric_cumulative.csv"}}) {
        auto points = ric_series(corpus, c.focal, partners, years, mode);
        write_file(dir / name, render([&](std::ostream& o) { report::ric_csv(o, points); }));
      }

      auto b = category_breadth(corpus, c.focal, c.partner, years);
      write_file(dir / "fig2_category_breadth.csv",
                 render([&](std::ostream& o) { report::breadth_csv(o, b); }));

      auto share = first_author_share(corpus, c.focal, c.partner);
      write_file(dir / "first_author_share.csv",
                 render([&](std::ostream& o) { report::first_author_csv(o, share); }));

      write_file(dir / "ingest_stats.json", dedup_stats_json(corpus.dedup_stats()).dump(2) + "\n");
      s.log(Verbosity::Verbose, "report written to " + dir.string());
    }
    return kExitOk;
  } catch (const Error& e) {
    err << ordered_json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump()
        << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << ordered_json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitDataError;
  }
}

}  // namespace collabind::cli
