// CSV tables (RFC 4180 quoting, '#' comment lines) and the row layouts of
// the roots, walls and heart subcommands.
#pragma once

#include "k3stab/roots.hpp"
#include "k3stab/tilt.hpp"
#include "k3stab/walls.hpp"

#include <string>
#include <vector>

namespace k3stab::io {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;  // without the leading "# "

  /// Index of a header column; ConfigError if absent.
  std::size_t column(const std::string& name) const;
};

std::string write_csv(const CsvTable& t);
CsvTable read_csv(const std::string& text);

CsvTable roots_table(const SurfaceConfig& cfg, const EnumerationResult& res);
std::vector<MukaiVec> roots_from_table(const SurfaceConfig& cfg, const CsvTable& t);

/// kind, witness, partner, locus_<monomial>.., conditions, tolerance,
/// certified, segments. Every wall is a potential wall.
CsvTable walls_table(const std::vector<Wall>& walls);
std::vector<Wall> walls_from_table(const SurfaceConfig& cfg, const CsvTable& t);

/// kind, r, d.., s rows.
MockSheaf mock_sheaf_from_table(const SurfaceConfig& cfg, const CsvTable& t);
CsvTable mock_sheaf_table(const SurfaceConfig& cfg, const MockSheaf& m);

}  // namespace k3stab::io
