#pragma once

#include <string>
#include <string_view>

#include "dessins/dessin.hpp"

namespace dessins {

// degree n
// x = (...)
// y = (...)
// z = (...)
std::string format_dessin_text(const Dessin& d);
// z is optional; when present it must equal (xy)^-1.
Dessin parse_dessin_text(std::string_view text);

std::string dessin_to_json(const Dessin& d);
Dessin dessin_from_json(std::string_view text);

// Black vertices are cycles of x, white vertices cycles of y, one edge per
// point. White vertices of valency <= 2 may be drawn as plain edges.
std::string dessin_to_dot(const Dessin& d, bool suppress_small_white = false);

// Either JSON {"degree": n, "generators": [...]} or text: "degree n" and
// one permutation per further line.
PermGroup parse_group(std::string_view text);
std::string group_to_json(const PermGroup& g);

// Dessin file in either format, detected from the first character.
Dessin parse_dessin(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dessins
