#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccc {

/// One row of a census table: CSV header `name,pd[,lspace][,note]`.
struct CensusRow {
  std::string name;
  std::string pd;
  std::string lspace;  // "auto" | "certified" | "unknown" | "" (= auto)
  std::string note;
};

/// Reads a census CSV (quoted fields allowed; PD codes contain commas).
/// Throws malformed_code on header/field problems and duplicate names.
std::vector<CensusRow> read_census(std::istream& in);
std::vector<CensusRow> read_census_file(const std::string& path);

}  // namespace ccc
