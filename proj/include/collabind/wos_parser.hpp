#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "collabind/error.hpp"

namespace collabind {

// Tag -> values for one PT...ER span. Multi-valued fields (AU, C1, ...) keep
// one entry per source line.
struct RawRecordBlock {
  std::map<std::string, std::vector<std::string>> fields;
  std::size_t line = 0;  // source line of the PT tag (tagged) or row (tsv)

  const std::vector<std::string>& values(std::string_view tag) const;
  // First value of `tag`, or "" when absent.
  std::string first(std::string_view tag) const;
  bool has(std::string_view tag) const;

  bool operator==(const RawRecordBlock& other) const { return fields == other.fields; }
};

struct ParseIssue {
  ErrorKind kind = ErrorKind::MalformedBlock;
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<RawRecordBlock> blocks;
  std::vector<ParseIssue> issues;
  std::size_t skipped_rows = 0;  // tab-delimited rows dropped for arity
};

// Pull parser over a WoS field-tagged plain-text export. Holds only the
// block being assembled, so arbitrarily large files stream through.
class FieldTaggedReader {
 public:
  explicit FieldTaggedReader(std::istream& in) : in_(in) {}

  // Next complete block, or nullopt at end of input. Malformed spans are
  // recorded in issues() and skipped.
  std::optional<RawRecordBlock> next();

  const std::vector<ParseIssue>& issues() const { return issues_; }

 private:
  void report(std::size_t line, std::string message);

  std::istream& in_;
  std::size_t line_no_ = 0;
  bool saw_ef_ = false;
  bool finished_ = false;
  std::vector<ParseIssue> issues_;
};

ParseResult parse_field_tagged(std::istream& in);

// Tab-delimited export: header of tags, one record per row, multi-valued
// fields joined with "; ". Throws Error(HeaderMissing) if the first row does
// not look like a tag header.
ParseResult parse_tab_delimited(std::istream& in);

// Tags whose tab-delimited cell holds several "; "-joined values.
bool is_multi_value_tag(std::string_view tag);

// Serializers producing input the parsers above accept.
void write_field_tagged(std::ostream& out, const std::vector<RawRecordBlock>& blocks);
void write_tab_delimited(std::ostream& out, const std::vector<RawRecordBlock>& blocks);

}  // namespace collabind
