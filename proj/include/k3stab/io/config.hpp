// Surface configuration files.
//
//   surface_type = k3
//   rank = 2
//   gram =
//     4  1
//     1 -2
//   ample = 1 0
//   curves =
//     0 1
//
// A key with an empty value owns the indented lines that follow it. '#'
// starts a comment.
#pragma once

#include "k3stab/lattice.hpp"

#include <filesystem>
#include <string>

namespace k3stab::io {

SurfaceConfig parse_config(const std::string& text, const std::string& origin = "<config>");
SurfaceConfig load_config(const std::filesystem::path& path);
std::string config_text(const SurfaceConfig& cfg);

}  // namespace k3stab::io
