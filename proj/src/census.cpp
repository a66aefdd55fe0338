#include "ccc/census.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

// RFC4180-style fields: optional quotes, "" escapes a quote inside quotes.
std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        cur += ch;
        ++i;
      }
    } else if (ch == '"') {
      if (!cur.empty())
        fail(ErrorKind::malformed_code,
             "line " + std::to_string(lineno) + ": quote inside unquoted field");
      quoted = true;
      ++i;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
      ++i;
    } else {
      cur += ch;
      ++i;
    }
  }
  if (quoted)
    fail(ErrorKind::malformed_code, "line " + std::to_string(lineno) + ": unterminated quote");
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

std::vector<CensusRow> read_census(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;
    header = split_csv_line(line, lineno);
    break;
  }
  for (auto& h : header) h = trimmed(h);
  const std::vector<std::string> want = {"name", "pd", "lspace", "note"};
  if (header.size() < 2 || header.size() > 4)
    fail(ErrorKind::malformed_code, "census header must be name,pd[,lspace][,note]");
  for (size_t k = 0; k < header.size(); ++k)
    if (header[k] != want[k])
      fail(ErrorKind::malformed_code, "unexpected census column '" + header[k] + "'");

  std::vector<CensusRow> rows;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line, lineno);
    if (fields.size() > header.size())
      fail(ErrorKind::malformed_code,
           "line " + std::to_string(lineno) + ": more fields than header columns");
    fields.resize(header.size());
    CensusRow row;
    row.name = trimmed(fields[0]);
    row.pd = trimmed(fields[1]);
    if (header.size() > 2) row.lspace = trimmed(fields[2]);
    if (header.size() > 3) row.note = trimmed(fields[3]);
    if (row.name.empty())
      fail(ErrorKind::malformed_code, "line " + std::to_string(lineno) + ": empty name");
    if (!names.insert(row.name).second)
      fail(ErrorKind::malformed_code, "duplicate census name '" + row.name + "'");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CensusRow> read_census_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::malformed_code, "cannot read census file: " + path);
  return read_census(in);
}

}  // namespace ccc
