#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "collabind/record.hpp"

namespace collabind {

// Aggregates the boost indicators are computed from. Indigenous and
// bilateral sets are disjoint, so the combined cited count is the cited
// count of their union.
struct BoostInputs {
  std::uint64_t t_ip = 0;                   // indigenous papers
  std::uint64_t t_ipus = 0;                 // bilateral papers
  std::uint64_t t_ic = 0;                   // indigenous citations
  std::uint64_t t_icus = 0;                 // bilateral citations
  std::uint64_t t_ip_cited = 0;             // cited indigenous papers
  std::uint64_t t_ipus_cited_combined = 0;  // cited papers, indigenous + bilateral

  // Throws InvalidArgument when cited counts exceed their paper counts.
  void validate() const;
  std::uint64_t bilateral_cited() const { return t_ipus_cited_combined - t_ip_cited; }
};

BoostInputs boost_inputs(const Corpus& corpus, std::string_view focal, std::string_view partner);

// Productivity boost in percent: 100 * t_ipus / t_ip.
double productivity_boost(std::uint64_t t_ip, std::uint64_t t_ipus);

// Citation boost in percent: 100 * t_icus / t_ic.
double citation_boost(std::uint64_t t_ic, std::uint64_t t_icus);

// Citation boost per unit productivity boost.
double gamma_ratio(double beta_c_pct, double beta_p_pct);

// Combined: citedness of indigenous + bilateral papers relative to indigenous
//   citedness, 100 * (r_comb / r_ti - 1). Gives 0.36 % on the India/USA aggregates.
// BilateralOnly: bilateral citedness r_tius = cited bilateral / t_ipus in the
//   ((r_tius + r_ti) / r_ti - 1) form, i.e. 100 * r_tius / r_ti.
enum class CitednessMode { Combined, BilateralOnly };

std::string_view to_string(CitednessMode mode);

double citedness_boost(const BoostInputs& inputs, CitednessMode mode = CitednessMode::Combined);

// Citation boost per unit citedness boost.
double delta_ratio(double beta_c_pct, double beta_rc_pct);

enum class DependenceLevel { Low, OverDependenceLikely, HighDependence };
enum class RewardLabel { Rewarding, Neutral, LessRewarding, Undefined };
enum class CitednessNote { GoodQualityMajority, ReviewAdvised };

std::string_view to_string(DependenceLevel level);
std::string_view to_string(RewardLabel label);
std::string_view to_string(CitednessNote note);

// Advisory thresholds: > 20 % (productivity) or > 30 % (impact) flags likely
// over-dependence, > 100 % high dependence.
DependenceLevel productivity_dependence(double beta_p_pct);
DependenceLevel impact_dependence(double beta_c_pct);
RewardLabel reward_label(std::optional<double> gamma_c);
CitednessNote citedness_note(double beta_rc_pct);

struct BoostReport {
  BoostInputs inputs;
  CitednessMode mode = CitednessMode::Combined;
  double beta_p_pct = 0;
  double beta_c_pct = 0;
  double beta_rc_pct = 0;
  std::optional<double> gamma_c;
  std::optional<double> delta_c;
  std::string gamma_undefined_reason;
  std::string delta_undefined_reason;
  DependenceLevel dependence_productivity = DependenceLevel::Low;
  DependenceLevel dependence_impact = DependenceLevel::Low;
  RewardLabel rewarding = RewardLabel::Undefined;
  CitednessNote note = CitednessNote::GoodQualityMajority;
};

// Component errors (zero indigenous papers, citations or citedness)
// propagate; a zero boost makes the dependent ratio undefined with a reason.
BoostReport boost_report(const BoostInputs& inputs, CitednessMode mode = CitednessMode::Combined);
BoostReport boost_report(const Corpus& corpus, std::string_view focal, std::string_view partner,
                         CitednessMode mode = CitednessMode::Combined);

}  // namespace collabind
