#include "propus/render.hpp"

#include <fstream>
#include <stdexcept>

namespace propus {

std::string render_pgm(const SignMatrix& m) {
  const std::size_t n = m.order();
  const std::string size = std::to_string(n);
  std::string out = "P2\n" + size + " " + size + "\n2\n";
  out.reserve(out.size() + 2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += static_cast<char>('1' + m(i, j));
    }
    out += '\n';
  }
  return out;
}

void render_image(const SignMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write image '" + path + "'");
  out << render_pgm(m);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace propus
