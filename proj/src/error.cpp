#include "collabind/error.hpp"

namespace collabind {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FocalAbsent: return "FocalAbsent";
    case ErrorKind::MalformedBlock: return "MalformedBlock";
    case ErrorKind::HeaderMissing: return "HeaderMissing";
    case ErrorKind::RowArityMismatch: return "RowArityMismatch";
    case ErrorKind::InvalidCorpus: return "InvalidCorpus";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::NonPositivePeriods: return "NonPositivePeriods";
    case ErrorKind::ZeroIndigenous: return "ZeroIndigenous";
    case ErrorKind::ZeroIndigenousCitations: return "ZeroIndigenousCitations";
    case ErrorKind::ZeroProductivityBoost: return "ZeroProductivityBoost";
    case ErrorKind::ZeroPapers: return "ZeroPapers";
    case ErrorKind::ZeroCitedness: return "ZeroCitedness";
    case ErrorKind::ZeroCitednessBoost: return "ZeroCitednessBoost";
    case ErrorKind::UnknownCountry: return "UnknownCountry";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace collabind
