#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace collabind {

enum class ErrorKind {
  InvalidArgument,
  FocalAbsent,
  MalformedBlock,
  HeaderMissing,
  RowArityMismatch,
  InvalidCorpus,
  ZeroBase,
  NonPositivePeriods,
  ZeroIndigenous,
  ZeroIndigenousCitations,
  ZeroProductivityBoost,
  ZeroPapers,
  ZeroCitedness,
  ZeroCitednessBoost,
  UnknownCountry,
  InvalidSpec,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Error carrying a machine-readable kind. All library failures throw this.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace collabind
