// Command-line literals: rationals p/q, classes, points, windows and words.
#pragma once

#include "k3stab/isometries.hpp"
#include "k3stab/poly.hpp"
#include "k3stab/tilt.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace k3stab::io {

std::vector<Rational> parse_rational_list(std::string_view text, char sep = ',');

/// "r,d1,..,drho,s" with integer entries.
MukaiVec parse_mukai(const SurfaceConfig& cfg, std::string_view text);

/// Either coordinates "a,b" or a sum of multiples of named classes, e.g.
/// "2H", "3H+2C", "-1/2*e2". H is the ample class, C (= C1), C2, .. the
/// configured curves and e1, e2, .. the basis.
Vec<Rational> parse_ns_class(const SurfaceConfig& cfg, std::string_view text);

/// "beta=...; omega=..." with omega^2 > 0.
TubePointQ parse_point(const SurfaceConfig& cfg, std::string_view text);

/// "x0,x1,y0,y1".
Rect parse_window(std::string_view text);

/// "shift,twist:1,refl:1,0,1": a token starting with a letter opens a
/// generator, numeric tokens extend the current one.
IsometryWord parse_word(const SurfaceConfig& cfg, std::string_view text);

std::string to_string(Relation rel);
Relation parse_relation(std::string_view text);

}  // namespace k3stab::io
