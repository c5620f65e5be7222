// SVG drawing of a slice: chamber tint, wall polylines, labelled axes.
#pragma once

#include "k3stab/walls.hpp"

#include <string>
#include <vector>

namespace k3stab::io {

std::string walls_svg(const Slice2D& slice, const std::vector<Wall>& walls, const ChamberMap& chambers);

}  // namespace k3stab::io
