#include "gyroloop/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace gyroloop {

namespace {

bool is_blank(const std::string& line) {
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_int_row(const std::string& line, std::vector<int>& out) {
  out.clear();
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

std::vector<CorpusEntry> parse_tables(std::istream& in, const std::string& filename,
                                      bool strict, std::vector<std::string>* diagnostics) {
  std::vector<CorpusEntry> entries;
  std::string line;
  int lineno = 0;
  std::string pending_name;
  int index_in_file = 0;

  auto fail = [&](int at_line, const std::string& reason) {
    if (strict) throw ParseError(filename, at_line, reason);
    if (diagnostics)
      diagnostics->push_back(filename + ":" + std::to_string(at_line) + ": " + reason);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("name:", 0) == 0) pending_name = trim(body.substr(5));
      continue;
    }

    // Start of a table block: the order line.
    const int header_line = lineno;
    std::vector<int> nums;
    if (!parse_int_row(line, nums) || nums.size() != 1 || nums[0] < 1) {
      fail(header_line, "expected a positive order on its own line");
      pending_name.clear();
      continue;
    }
    const int n = nums[0];
    std::vector<std::vector<int>> rows;
    bool bad = false;
    while (static_cast<int>(rows.size()) < n) {
      if (!std::getline(in, line)) {
        fail(header_line, "unexpected end of file inside a table of order " + std::to_string(n));
        bad = true;
        break;
      }
      ++lineno;
      if (is_blank(line)) {
        fail(lineno, "blank line inside a table of order " + std::to_string(n));
        bad = true;
        break;
      }
      if (line[0] == '#') continue;
      if (!parse_int_row(line, nums) || static_cast<int>(nums.size()) != n) {
        fail(lineno, "expected " + std::to_string(n) + " integers");
        bad = true;
        break;
      }
      rows.push_back(nums);
    }
    if (bad) {
      pending_name.clear();
      continue;
    }
    try {
      CayleyTable table = CayleyTable::from_rows(rows);
      CorpusEntry entry{pending_name, std::move(table), filename, index_in_file, header_line};
      entries.push_back(std::move(entry));
      ++index_in_file;
    } catch (const Error& e) {
      fail(header_line, e.what());
    }
    pending_name.clear();
  }
  return entries;
}

Corpus read_corpus(const std::vector<std::string>& paths, bool strict) {
  Corpus corpus;
  std::map<std::string, int> name_count;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<CorpusEntry> entries = parse_tables(in, path, strict, &corpus.diagnostics);
    for (CorpusEntry& entry : entries) {
      if (entry.name.empty()) {
        std::string stem = path;
        const size_t slash = stem.find_last_of('/');
        if (slash != std::string::npos) stem = stem.substr(slash + 1);
        const size_t dot = stem.find_last_of('.');
        if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
        entry.name = stem + "_" + std::to_string(entry.source_index);
      }
      int& count = name_count[entry.name];
      ++count;
      if (count > 1) entry.name += "_" + std::to_string(count);
      corpus.entries.push_back(std::move(entry));
    }
  }
  return corpus;
}

void write_table(std::ostream& out, const CayleyTable& table, const std::string& name) {
  if (!name.empty()) out << "# name: " << name << "\n";
  const int n = table.order();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << table.at(i, j);
    }
    out << "\n";
  }
}

}  // namespace gyroloop
