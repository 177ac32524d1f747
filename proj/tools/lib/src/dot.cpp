#include <sstream>

#include "eqpos_app/run.hpp"

namespace eqpos::app {

std::string export_gkm_dot(const BsdhVariety& z) {
  std::ostringstream out;
  out << "graph gkm {\n";
  for (const auto& x : fixed_points(z)) out << "  \"" << x.to_string() << "\";\n";
  for (const auto& c : model_curves(z)) {
    const auto degrees = basis_degrees(z, c);
    out << "  \"" << c.endpoint(false).to_string() << "\" -- \"" << c.endpoint(true).to_string() << "\" [label=\""
        << (c.slot + 1) << "; " << format_vec(tangent_weight(z, c).coords) << "; [";
    for (std::size_t m = 0; m < degrees.size(); ++m) out << (m ? "," : "") << degrees[m];
    out << "]\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace eqpos::app
