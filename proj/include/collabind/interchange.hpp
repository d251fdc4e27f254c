#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "collabind/record.hpp"
#include "json.hpp"

namespace collabind {

// Normalized interchange file: line 1 is a header object
//   {"format":"collabind-corpus","version":1,"stats":{...}}
// followed by one record object per line:
//   {"doi":string|null,"year":int,"doc_type":"Article"|"Review"|"Other",
//    "language":string,"countries":[...],"categories":[...],
//    "times_cited":int,"first_author_country":string|null}
// Arrays are sorted so the encoding is canonical.
void write_corpus(std::ostream& out, const Corpus& corpus);
void write_corpus_file(const std::filesystem::path& path, const Corpus& corpus);

nlohmann::ordered_json dedup_stats_json(const DedupStats& stats);

// Reads the format above. A missing header yields stats derived from the
// records alone.
Corpus read_corpus(std::istream& in);
Corpus read_corpus_file(const std::filesystem::path& path);

}  // namespace collabind
