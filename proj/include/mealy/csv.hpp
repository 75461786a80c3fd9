#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mealy/enumerate.hpp"
#include "mealy/sequence.hpp"

namespace mealy {

/// Growth tables as CSV, LF line endings, one row per n >= 1.
inline std::string growth_csv(const growth_tables& t) {
  std::ostringstream os;
  os << "n,delta,spherical,cumulative\n";
  for (unsigned n = 1; n <= t.levels(); ++n)
    os << n << "," << t.delta[n] << "," << t.spherical[n] << "," << t.cumulative[n] << "\n";
  return os.str();
}

/// Two-column sequence export.
inline std::string sequence_csv(const int_sequence& s, const std::string& value_header) {
  std::ostringstream os;
  os << "n," << value_header << "\n";
  for (long n = s.start; n < s.end(); ++n) os << n << "," << s.at(n).str() << "\n";
  return os.str();
}

/// Tab-separated n<TAB>value lines, ready for plotting tools.
inline std::string sequence_tsv(const int_sequence& s) {
  std::ostringstream os;
  for (long n = s.start; n < s.end(); ++n) os << n << "\t" << s.at(n).str() << "\n";
  return os.str();
}

struct csv_table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline csv_table parse_csv(const std::string& text) {
  csv_table t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      first = false;
      // header iff any cell is non-numeric
      bool numeric = true;
      for (const auto& c : cells) {
        if (c.empty() || c.find_first_not_of("0123456789-") != std::string::npos) numeric = false;
      }
      if (!numeric) {
        t.header = cells;
        continue;
      }
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

/// Read an (n, value) sequence from CSV text.  With several value columns,
/// `column` picks one by header name; otherwise the last column is used.
/// Rows must be contiguous in n.
inline int_sequence sequence_from_csv(const std::string& text, const std::string& column = {}) {
  const csv_table t = parse_csv(text);
  if (t.rows.empty()) throw error("sequence csv: no data rows");
  std::size_t vcol = t.rows[0].size() - 1;
  if (!column.empty()) {
    bool found = false;
    for (std::size_t i = 0; i < t.header.size(); ++i)
      if (t.header[i] == column) {
        vcol = i;
        found = true;
      }
    if (!found) throw error("sequence csv: no column named '" + column + "'");
  }
  int_sequence s;
  bool first = true;
  for (const auto& row : t.rows) {
    if (row.size() <= vcol) throw error("sequence csv: short row");
    const long n = std::stol(row[0]);
    if (first) {
      s.start = n;
      first = false;
    } else if (n != s.end()) {
      throw error("sequence csv: indices must be contiguous");
    }
    s.values.emplace_back(row[vcol]);
  }
  return s;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << content;
}

}  // namespace mealy
