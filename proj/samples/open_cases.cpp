// Exact products for the 600-cell and 120-cell, tested against the polygon shapes.

#include "polychord/polychord.hpp"

#include <iostream>

int main() {
  using namespace polychord;
  for (const auto& spec : {PolytopeSpec::cell600(), PolytopeSpec::cell120()}) {
    const ExploreReport r = explore_open_products(spec, /*evaluate=*/true);
    const QuadExt& p = *r.evaluated;
    std::cout << r.polytope << ": product has " << p.rational_part().get_num().get_str().size()
              << "-digit numerator, distinct product " << to_string(r.distinct_product) << "\n";
    for (const auto& s : r.shapes)
      std::cout << "  " << s.shape << ": " << (s.holds ? (*s.holds ? "yes" : "no") : "?") << "\n";
  }
}
