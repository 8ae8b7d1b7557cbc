#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gyroloop/cayley_table.hpp"

namespace gyroloop {

/// One table read from a corpus file.
struct CorpusEntry {
  std::string name;
  CayleyTable table;
  std::string source_file;
  int source_index = 0;  // position within the file
  int source_line = 0;   // line of the order header
};

/// An ordered collection of named tables; names are unique (suffixed on
/// collision). Parse problems per entry are either skipped with a diagnostic
/// or fatal, depending on the strict flag used when reading.
struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> diagnostics;  // skipped-table messages (non-strict)
};

/// Parses the table text format: the first non-comment line of a block is the
/// order n, followed by n rows of n whitespace-separated integers in 0..n-1.
/// Lines starting with '#' are comments; a "# name: <string>" comment names
/// the next table. Blocks are separated by at least one blank line.
std::vector<CorpusEntry> parse_tables(std::istream& in, const std::string& filename,
                                      bool strict, std::vector<std::string>* diagnostics);

/// Reads and concatenates several corpus files. Throws IoError when a file
/// cannot be opened, and ParseError in strict mode on malformed content.
Corpus read_corpus(const std::vector<std::string>& paths, bool strict = false);

/// Writes one table block in the corpus text format.
void write_table(std::ostream& out, const CayleyTable& table, const std::string& name);

}  // namespace gyroloop
