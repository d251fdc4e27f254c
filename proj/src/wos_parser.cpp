#include "collabind/wos_parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "collabind/strings.hpp"

namespace collabind {
namespace {

const std::vector<std::string> kNoValues;

void strip_line_ending(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

void strip_bom(std::string& line) {
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF)
    line.erase(0, 3);
}

bool is_tag_char(char c) {
  return std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_tag(std::string_view s) { return s.size() == 2 && is_tag_char(s[0]) && is_tag_char(s[1]); }

// "TG value" / "TG  value" / bare "ER".
bool split_field_line(std::string_view line, std::string& tag, std::string& value) {
  if (line.size() < 2 || !is_tag(line.substr(0, 2))) return false;
  if (line.size() > 2 && line[2] != ' ') return false;
  tag.assign(line.substr(0, 2));
  value.assign(text::trim(line.substr(2)));
  return true;
}

std::string flatten(std::string_view s, char bad) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '\n', ' ');
  std::replace(out.begin(), out.end(), bad, ' ');
  return out;
}

std::vector<std::string> ordered_tags(const RawRecordBlock& block) {
  std::vector<std::string> tags;
  if (block.has("PT")) tags.emplace_back("PT");
  for (const auto& [tag, values] : block.fields)
    if (tag != "PT") tags.push_back(tag);
  return tags;
}

}  // namespace

const std::vector<std::string>& RawRecordBlock::values(std::string_view tag) const {
  auto it = fields.find(std::string(tag));
  return it == fields.end() ? kNoValues : it->second;
}

std::string RawRecordBlock::first(std::string_view tag) const {
  const auto& v = values(tag);
  return v.empty() ? std::string() : v.front();
}

bool RawRecordBlock::has(std::string_view tag) const { return fields.contains(std::string(tag)); }

bool is_multi_value_tag(std::string_view tag) {
  static const std::set<std::string, std::less<>> kMulti{"AU", "AF", "BA", "BE", "C1", "CR"};
  return kMulti.contains(tag);
}

void FieldTaggedReader::report(std::size_t line, std::string message) {
  issues_.push_back({ErrorKind::MalformedBlock, line, std::move(message)});
}

std::optional<RawRecordBlock> FieldTaggedReader::next() {
  if (finished_) return std::nullopt;

  std::optional<RawRecordBlock> block;
  std::string last_tag;
  std::string line;
  std::string tag;
  std::string value;
  bool saw_content = line_no_ > 0;

  while (std::getline(in_, line)) {
    ++line_no_;
    strip_line_ending(line);
    if (line_no_ == 1) strip_bom(line);
    if (text::trim(line).empty()) continue;
    saw_content = true;

    if (saw_ef_) {
      report(line_no_, "content after EF");
      continue;
    }

    if (line.rfind("   ", 0) == 0) {
      if (block && !last_tag.empty())
        block->fields[last_tag].emplace_back(text::trim(line));
      else if (block)
        report(line_no_, "continuation line without a preceding field");
      continue;
    }

    if (!split_field_line(line, tag, value)) {
      report(line_no_, "unrecognized line");
      continue;
    }

    if (tag == "EF") {
      saw_ef_ = true;
      if (block) report(block->line, "record truncated: EF before ER");
      block.reset();
      continue;
    }
    if (tag == "ER") {
      if (!block) {
        report(line_no_, "ER without PT");
        continue;
      }
      return block;
    }
    if (tag == "PT") {
      if (block) report(block->line, "record truncated: PT before ER");
      block.emplace();
      block->line = line_no_;
      block->fields["PT"].push_back(value);
      last_tag = "PT";
      continue;
    }
    if (!block) {
      if (tag != "FN" && tag != "VR") report(line_no_, "field " + tag + " outside a record");
      continue;
    }
    block->fields[tag].push_back(value);
    last_tag = tag;
  }

  finished_ = true;
  if (block) report(block->line, "record truncated: end of input before ER");
  if (saw_content && !saw_ef_) report(line_no_, "input truncated before EF");
  return std::nullopt;
}

ParseResult parse_field_tagged(std::istream& in) {
  ParseResult result;
  FieldTaggedReader reader(in);
  while (auto block = reader.next()) result.blocks.push_back(std::move(*block));
  result.issues = reader.issues();
  return result;
}

ParseResult parse_tab_delimited(std::istream& in) {
  ParseResult result;
  std::string line;
  std::size_t line_no = 0;

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    strip_line_ending(line);
    if (line_no == 1) strip_bom(line);
    if (text::trim(line).empty()) continue;
    header = text::split(line, '\t');
    break;
  }
  while (!header.empty() && text::trim(header.back()).empty()) header.pop_back();
  if (header.empty() ||
      !std::all_of(header.begin(), header.end(), [](auto& h) { return is_tag(text::trim(h)); }))
    throw Error(ErrorKind::HeaderMissing, "tab-delimited input lacks a field-tag header row");
  for (auto& h : header) h = std::string(text::trim(h));

  while (std::getline(in, line)) {
    ++line_no;
    strip_line_ending(line);
    if (text::trim(line).empty()) continue;
    auto cells = text::split(line, '\t');
    while (cells.size() > header.size() && text::trim(cells.back()).empty()) cells.pop_back();
    if (cells.size() != header.size()) {
      result.issues.push_back({ErrorKind::RowArityMismatch, line_no,
                               "expected " + std::to_string(header.size()) + " cells, got " +
                                   std::to_string(cells.size())});
      ++result.skipped_rows;
      continue;
    }
    RawRecordBlock block;
    block.line = line_no;
    for (std::size_t i = 0; i < header.size(); ++i) {
      auto cell = text::trim(cells[i]);
      if (cell.empty()) continue;
      auto& values = block.fields[header[i]];
      if (is_multi_value_tag(header[i])) {
        for (auto& part : text::split_outside_brackets(cell, ';')) {
          auto v = text::trim(part);
          if (!v.empty()) values.emplace_back(v);
        }
      } else {
        values.emplace_back(cell);
      }
    }
    result.blocks.push_back(std::move(block));
  }
  return result;
}

void write_field_tagged(std::ostream& out, const std::vector<RawRecordBlock>& blocks) {
  out << "FN Clarivate Analytics Web of Science\nVR 1.0\n";
  for (const auto& block : blocks) {
    for (const auto& tag : ordered_tags(block)) {
      bool first = true;
      for (const auto& v : block.values(tag)) {
        out << (first ? tag + " " : std::string("   ")) << flatten(v, '\n') << '\n';
        first = false;
      }
    }
    out << "ER\n\n";
  }
  out << "EF\n";
}

void write_tab_delimited(std::ostream& out, const std::vector<RawRecordBlock>& blocks) {
  std::set<std::string> tag_set;
  for (const auto& b : blocks)
    for (const auto& [tag, values] : b.fields) tag_set.insert(tag);
  if (tag_set.empty()) tag_set = {"PT", "DI", "PY"};
  std::vector<std::string> header;
  if (tag_set.erase("PT")) header.emplace_back("PT");
  header.insert(header.end(), tag_set.begin(), tag_set.end());

  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "\t" : "") << header[i];
  out << '\n';
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << '\t';
      const auto& values = block.values(header[i]);
      const char* sep = is_multi_value_tag(header[i]) ? "; " : " ";
      for (std::size_t j = 0; j < values.size(); ++j)
        out << (j ? sep : "") << flatten(values[j], '\t');
    }
    out << '\n';
  }
}

}  // namespace collabind
