#include "polychord/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace polychord;

namespace {

std::string failures(const Verdict& v) {
  std::string out;
  for (const auto& c : v.clauses)
    if (!c.pass) out += c.name + ": claimed " + c.claimed + ", computed " + c.computed + "\n";
  return out;
}

}  // namespace

TEST(Oracle, Triangle) {
  const FloatSpectrum s = float_spectrum(PolytopeSpec::polygon(3));
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_NEAR(s.entries[0].d_squared.to_double(), 3.0, 1e-15);
  EXPECT_EQ(s.entries[0].count, 3);
  EXPECT_EQ(s.precision_bits, 128);
  EXPECT_EQ(s.grouping_tolerance, std::ldexp(1.0, -64));
}

TEST(Oracle, TwentyFourCell) {
  const FloatSpectrum s = float_spectrum(PolytopeSpec::cell24());
  ASSERT_EQ(s.entries.size(), 4u);
  const double d2[] = {1, 2, 3, 4};
  const long n[] = {96, 72, 96, 12};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.entries[i].d_squared.to_double(), d2[i], 1e-15);
    EXPECT_EQ(s.entries[i].count, n[i]);
  }
  EXPECT_EQ(s.total(), 276);
}

TEST(Oracle, IcosahedronSum) {
  const FloatSpectrum s = float_spectrum(PolytopeSpec::icosahedron());
  EXPECT_EQ(s.entries.size(), 3u);
  EXPECT_NEAR(s.sum().to_double(), 144.0, 1e-12);
  EXPECT_NEAR(s.entries[0].d_squared.to_double(), 2 - 2 / std::sqrt(5.0), 1e-14);
}

TEST(Oracle, HigherPrecisionTightensEntries) {
  const FloatSpectrum s = float_spectrum(PolytopeSpec::dodecahedron(), 256);
  const BigFloat exact = to_float(chord_spectrum(PolytopeSpec::dodecahedron()).entries[0].d_squared, 256);
  const BigFloat rel = abs(s.entries[0].d_squared - exact) / exact;
  EXPECT_LT(rel.to_double(), 1e-60);
}

TEST(Oracle, CrossCheckAgrees) {
  for (const auto& spec : {PolytopeSpec::dodecahedron(), PolytopeSpec::cube(8), PolytopeSpec::polygon(17),
                           PolytopeSpec::simplex(6), PolytopeSpec::cell600()}) {
    const Verdict v = cross_check(spec);
    EXPECT_TRUE(v.pass()) << spec.name() << "\n" << failures(v);
    EXPECT_EQ(v.check, "oracle");
  }
  EXPECT_EQ(cross_check(PolytopeSpec::dodecahedron()).clauses.front().computed, "5");
  EXPECT_EQ(cross_check(PolytopeSpec::cube(8)).clauses.front().computed, "8");
}

TEST(Oracle, PrecisionGuards) {
  EXPECT_THROW(float_spectrum(PolytopeSpec::cube(3), 64, 1e-40), PrecisionError);
  EXPECT_THROW(float_spectrum(PolytopeSpec::cube(3), 32), std::invalid_argument);
  EXPECT_NO_THROW(float_spectrum(PolytopeSpec::cube(3), 64, 1e-12));
}

TEST(Oracle, AmbiguousToleranceIsRejected) {
  // Near the diameter the 200-gon chords differ by about 2.5e-4 relatively,
  // which falls between 1e-4/256 and 1e-4*256.
  EXPECT_THROW(float_spectrum(PolytopeSpec::polygon(200), 128, 1e-4), PrecisionError);
}

TEST(Oracle, MutatedExactSpectrumIsCaught) {
  const PolytopeSpec spec = PolytopeSpec::icosahedron();
  const FloatSpectrum fs = float_spectrum(spec);
  ChordSpectrum exact = chord_spectrum(spec);
  exact.entries[1].d_squared += QuadExt(make_rational(1, 1000000));
  const BigFloat got = fs.entries[1].d_squared;
  const BigFloat want = to_float(exact.entries[1].d_squared, 128);
  EXPECT_GT((abs(got - want) / want).to_double(), 1e-9);
}
