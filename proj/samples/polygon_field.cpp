// Squared chords of the regular heptagon as elements of Q(zeta_7), and the
// rational aggregates they produce.

#include "polychord/polychord.hpp"

#include <iostream>

int main() {
  using namespace polychord;
  const CyclotomicField field(7);
  for (long j = 1; j <= 3; ++j)
    std::cout << "d_" << j << "^2 = " << to_string(field.chord_squared(j)) << "  ~ "
              << to_float(field.chord_squared(j), 64).to_string(12) << "\n";

  const PolygonSpectrum s = polygon_spectrum(7);
  std::cout << "sum       " << to_string(sum_squared(s)) << "\n"
            << "distinct  " << to_string(rational_recognition(sum_squared_distinct(s))) << "\n"
            << "product   " << to_string(rational_recognition(evaluate_product(product_squared(s)))) << "\n"
            << "distinct  " << to_string(rational_recognition(product_squared_distinct(s))) << "\n";
}
