#pragma once

#include <string>

#include "propus/matrix.hpp"

namespace propus {

// Plain PGM (P2), maxval 2, one pixel per entry: -1 -> 0, 0 -> 1, +1 -> 2.
// Header "P2\n<w> <h>\n2\n", then one line per row, values space-separated.
std::string render_pgm(const SignMatrix& m);

// Throws std::runtime_error if the file cannot be written.
void render_image(const SignMatrix& m, const std::string& path);

}  // namespace propus
