#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scs/word.hpp"

namespace scs {

// Words file format: one word per line over '0','1','2'; blank lines are
// ignored; lines starting with '#' are comments. Parse errors carry the
// 1-based line number.

std::vector<Word> read_words(std::istream& in, const std::string& source_name = "<stream>");
std::vector<Word> read_words_file(const std::string& path);

void write_words(std::ostream& out, const std::vector<Word>& words);
void write_words_file(const std::string& path, const std::vector<Word>& words);

/// FNV-1a 64-bit digest of a file's bytes, for run reports.
std::uint64_t file_digest(const std::string& path);

}  // namespace scs
