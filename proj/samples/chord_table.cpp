// Prints the exact chord spectrum and the four aggregates of a polytope.
//   sample_chord_table dodecahedron

#include "polychord/polychord.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace polychord;
  const PolytopeSpec spec = parse_polytope(argc > 1 ? argv[1] : "icosahedron");
  std::cout << spectrum_markdown(spec, compute_spectrum(spec));
}
