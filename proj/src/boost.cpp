#include "collabind/boost.hpp"

#include "collabind/error.hpp"

namespace collabind {

void BoostInputs::validate() const {
  if (t_ip_cited > t_ip)
    throw Error(ErrorKind::InvalidArgument, "cited indigenous count exceeds indigenous papers");
  if (t_ipus_cited_combined < t_ip_cited || t_ipus_cited_combined > t_ip + t_ipus)
    throw Error(ErrorKind::InvalidArgument,
                "combined cited count must lie in [cited indigenous, indigenous + bilateral]");
}

BoostInputs boost_inputs(const Corpus& corpus, std::string_view focal, std::string_view partner) {
  BoostInputs in;
  for (const auto& r : corpus) {
    const bool cited = r.times_cited > 0;
    switch (classify(r, focal, partner)) {
      case ClassificationLabel::Indigenous:
        ++in.t_ip;
        in.t_ic += r.times_cited;
        if (cited) {
          ++in.t_ip_cited;
          ++in.t_ipus_cited_combined;
        }
        break;
      case ClassificationLabel::BilateralPartner:
        ++in.t_ipus;
        in.t_icus += r.times_cited;
        if (cited) ++in.t_ipus_cited_combined;
        break;
      case ClassificationLabel::OtherInternational:
        break;
    }
  }
  return in;
}

double productivity_boost(std::uint64_t t_ip, std::uint64_t t_ipus) {
  if (t_ip == 0) throw Error(ErrorKind::ZeroIndigenous, "no indigenous papers");
  return 100.0 * static_cast<double>(t_ipus) / static_cast<double>(t_ip);
}

double citation_boost(std::uint64_t t_ic, std::uint64_t t_icus) {
  if (t_ic == 0)
    throw Error(ErrorKind::ZeroIndigenousCitations, "indigenous papers have no citations");
  return 100.0 * static_cast<double>(t_icus) / static_cast<double>(t_ic);
}

double gamma_ratio(double beta_c_pct, double beta_p_pct) {
  if (beta_p_pct == 0.0) throw Error(ErrorKind::ZeroProductivityBoost, "productivity boost is zero");
  return beta_c_pct / beta_p_pct;
}

std::string_view to_string(CitednessMode mode) {
  return mode == CitednessMode::Combined ? "combined" : "bilateral_only";
}

double citedness_boost(const BoostInputs& in, CitednessMode mode) {
  if (in.t_ip == 0) throw Error(ErrorKind::ZeroPapers, "no indigenous papers");
  const double r_ti = static_cast<double>(in.t_ip_cited) / static_cast<double>(in.t_ip);
  if (r_ti == 0.0) throw Error(ErrorKind::ZeroCitedness, "indigenous citedness is zero");

  if (mode == CitednessMode::Combined) {
    const double r_comb = static_cast<double>(in.t_ipus_cited_combined) /
                          static_cast<double>(in.t_ip + in.t_ipus);
    return 100.0 * (r_comb / r_ti - 1.0);
  }
  if (in.t_ipus == 0) throw Error(ErrorKind::ZeroPapers, "no bilateral papers");
  const double r_tius = static_cast<double>(in.bilateral_cited()) / static_cast<double>(in.t_ipus);
  return 100.0 * ((r_tius + r_ti) / r_ti - 1.0);
}

double delta_ratio(double beta_c_pct, double beta_rc_pct) {
  if (beta_rc_pct == 0.0) throw Error(ErrorKind::ZeroCitednessBoost, "citedness boost is zero");
  return beta_c_pct / beta_rc_pct;
}

std::string_view to_string(DependenceLevel level) {
  switch (level) {
    case DependenceLevel::Low: return "low";
    case DependenceLevel::OverDependenceLikely: return "over_dependence_likely";
    case DependenceLevel::HighDependence: return "high_dependence";
  }
  return "low";
}

std::string_view to_string(RewardLabel label) {
  switch (label) {
    case RewardLabel::Rewarding: return "rewarding";
    case RewardLabel::Neutral: return "neutral";
    case RewardLabel::LessRewarding: return "less_rewarding";
    case RewardLabel::Undefined: return "undefined";
  }
  return "undefined";
}

std::string_view to_string(CitednessNote note) {
  return note == CitednessNote::GoodQualityMajority ? "good_quality_majority" : "review_advised";
}

namespace {

DependenceLevel dependence(double pct, double likely_above) {
  if (pct > 100.0) return DependenceLevel::HighDependence;
  if (pct > likely_above) return DependenceLevel::OverDependenceLikely;
  return DependenceLevel::Low;
}

}  // namespace

DependenceLevel productivity_dependence(double beta_p_pct) { return dependence(beta_p_pct, 20.0); }
DependenceLevel impact_dependence(double beta_c_pct) { return dependence(beta_c_pct, 30.0); }

RewardLabel reward_label(std::optional<double> gamma_c) {
  if (!gamma_c) return RewardLabel::Undefined;
  if (*gamma_c > 1.0) return RewardLabel::Rewarding;
  if (*gamma_c < 1.0) return RewardLabel::LessRewarding;
  return RewardLabel::Neutral;
}

CitednessNote citedness_note(double beta_rc_pct) {
  return beta_rc_pct < 1.0 ? CitednessNote::GoodQualityMajority : CitednessNote::ReviewAdvised;
}

BoostReport boost_report(const BoostInputs& inputs, CitednessMode mode) {
  inputs.validate();
  BoostReport r;
  r.inputs = inputs;
  r.mode = mode;
  r.beta_p_pct = productivity_boost(inputs.t_ip, inputs.t_ipus);
  r.beta_c_pct = citation_boost(inputs.t_ic, inputs.t_icus);
  if (mode == CitednessMode::BilateralOnly && inputs.t_ipus == 0) {
    r.beta_rc_pct = 0.0;
  } else {
    r.beta_rc_pct = citedness_boost(inputs, mode);
  }

  if (r.beta_p_pct == 0.0) {
    r.gamma_undefined_reason = "productivity boost is zero";
  } else {
    r.gamma_c = gamma_ratio(r.beta_c_pct, r.beta_p_pct);
  }
  if (r.beta_rc_pct == 0.0) {
    r.delta_undefined_reason = "citedness boost is zero";
  } else {
    r.delta_c = delta_ratio(r.beta_c_pct, r.beta_rc_pct);
  }

  r.dependence_productivity = productivity_dependence(r.beta_p_pct);
  r.dependence_impact = impact_dependence(r.beta_c_pct);
  r.rewarding = reward_label(r.gamma_c);
  r.note = citedness_note(r.beta_rc_pct);
  return r;
}

BoostReport boost_report(const Corpus& corpus, std::string_view focal, std::string_view partner,
                         CitednessMode mode) {
  return boost_report(boost_inputs(corpus, focal, partner), mode);
}

}  // namespace collabind
