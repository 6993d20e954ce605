#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "hyptube/error.hpp"
#include "hyptube/lifts.hpp"
#include "hyptube/thresholds.hpp"
#include "support.hpp"

namespace hyptube {
namespace {

const double kS3 = std::sqrt(3.0);

Geodesic line(Complex p, Complex q) { return Geodesic(IdealPoint::finite(p), IdealPoint::finite(q)); }
Geodesic vertical(Complex p) { return Geodesic(IdealPoint::finite(p), IdealPoint::infinity()); }

GroupPresentation cyclic() {
  GroupPresentation g;
  g.add_generator('a', Isometry::from_entries(kS3, 0.0, 0.0, 1.0 / kS3));
  return g;
}

GroupPresentation synthetic() {
  GroupPresentation g = cyclic();
  g.add_generator('g', Isometry::from_entries(3.0, -3.0, 1.0, -3.0));
  return g;
}

GroupPresentation schottky() {
  GroupPresentation g;
  g.add_generator('a', Isometry::from_entries(2.0, kS3, kS3, 2.0));
  g.add_generator('b', Isometry::from_entries(2.0, Complex(0, kS3), Complex(0, -kS3), 2.0));
  return g;
}

// Reduced words of length exactly n in a free group of rank r.
std::size_t free_sphere(std::size_t r, int n) {
  return n == 0 ? 1 : 2 * r * static_cast<std::size_t>(std::pow(2 * r - 1, n - 1));
}

TEST(Word, FreeReduction) {
  const Word w({1, 2, -2, -1, 1});
  EXPECT_EQ(w.letters(), std::vector<int>({1}));
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(Word({1, -2}).inverse().letters(), std::vector<int>({2, -1}));
  EXPECT_THROW(Word({0}), Error);
  EXPECT_EQ(Word({1, -2, 2, 2}).to_string("ab"), "ab");
}

TEST(Word, CanonicalOrder) {
  std::vector<Word> words = {Word({2}), Word({-1}), Word({1, 1}), Word({1}), Word(), Word({-2})};
  std::sort(words.begin(), words.end());
  std::vector<std::string> names;
  for (const Word& w : words) names.push_back(w.to_string("ab"));
  EXPECT_EQ(names, (std::vector<std::string>{"", "a", "A", "b", "B", "aa"}));
}

TEST(GroupPresentation, ParseAndFormat) {
  const GroupPresentation g = schottky();
  EXPECT_EQ(g.format_word(g.parse_word("abAB")), "abAB");
  EXPECT_EQ(g.format_word(g.parse_word("aAb")), "b");
  EXPECT_THROW(g.parse_word("aX"), Error);
  try {
    g.parse_word("ax");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownGenerator);
  }
  GroupPresentation h;
  h.add_generator('a', Isometry());
  EXPECT_THROW(h.add_generator('a', Isometry()), Error);
  EXPECT_THROW(h.add_generator('A', Isometry()), Error);
}

TEST(GroupPresentation, ElementMultipliesLetters) {
  const GroupPresentation g = schottky();
  const Isometry a = g.generators()[0].matrix, b = g.generators()[1].matrix;
  EXPECT_TRUE(g.element(g.parse_word("aB")).approx_equal(a * b.inverse()));
  EXPECT_TRUE(g.element(Word()).approx_equal(Isometry()));
}

TEST(Enumerate, FreeGroupCounts) {
  const GroupPresentation g = schottky();
  for (int n = 0; n <= 5; ++n) {
    const ElementBall ball = enumerate_elements(g, n);
    std::size_t expected = 0;
    for (int k = 0; k <= n; ++k) expected += free_sphere(2, k);
    EXPECT_EQ(ball.elements.size(), expected) << n;
    EXPECT_EQ(ball.diagnostics.collisions, 0u);
  }
}

TEST(Enumerate, CanonicalOrderAndShortestWords) {
  const ElementBall ball = enumerate_elements(schottky(), 3);
  EXPECT_TRUE(std::is_sorted(ball.elements.begin(), ball.elements.end(),
                             [](const Element& l, const Element& r) { return l.word < r.word; }));
  EXPECT_TRUE(ball.elements.front().word.empty());
}

TEST(Enumerate, FiniteCyclicGroup) {
  GroupPresentation g;
  const Complex z = std::polar(1.0, std::numbers::pi / 3);  // rotation of order 3
  g.add_generator('r', Isometry::from_entries(z, 0.0, 0.0, std::conj(z)));
  const ElementBall ball = enumerate_elements(g, 5);
  EXPECT_EQ(ball.elements.size(), 3u);
  EXPECT_GT(ball.diagnostics.collisions, 0u);
  EXPECT_FALSE(ball.diagnostics.relations.empty());
}

TEST(Enumerate, CyclicCount) {
  const ElementBall ball = enumerate_elements(cyclic(), 7);
  EXPECT_EQ(ball.elements.size(), 15u);
}

TEST(Lifts, CyclicHasOneLift) {
  for (int n : {0, 1, 3, 6}) {
    const LiftSet lifts = lifts_of_geodesic(cyclic(), Word({1}), n);
    EXPECT_EQ(lifts.lifts.size(), 1u);
    EXPECT_EQ(lifts.stabilizer_count, static_cast<std::size_t>(2 * n + 1));
    EXPECT_TRUE(lifts.base.approx_equal(vertical(0.0)));
  }
}

TEST(Lifts, NotLoxodromic) {
  GroupPresentation g;
  g.add_generator('p', Isometry::from_entries(1.0, 1.0, 0.0, 1.0));
  EXPECT_THROW(lifts_of_geodesic(g, Word({1}), 2), Error);
}

TEST(Lifts, SyntheticHorizonOne) {
  const LiftSet lifts = lifts_of_geodesic(synthetic(), Word({1}), 1);
  ASSERT_EQ(lifts.lifts.size(), 2u);
  EXPECT_TRUE(lifts.lifts[1].geodesic.approx_equal(line(1.0, 3.0)));
  const TubeRadius r = tube_radius(lifts);
  ASSERT_FALSE(r.unbounded());
  EXPECT_NEAR(*r.radius, std::acosh(2.0) / 2.0, 1e-9);
  EXPECT_EQ(r.horizon, 1);
}

TEST(Lifts, SyntheticHorizonTwo) {
  const LiftSet lifts = lifts_of_geodesic(synthetic(), Word({1}), 2);
  ASSERT_EQ(lifts.lifts.size(), 4u);
  for (const Geodesic& expected : {line(1.0, 3.0), line(3.0, 9.0), line(1.0 / 3.0, 1.0)}) {
    EXPECT_TRUE(std::any_of(lifts.lifts.begin(), lifts.lifts.end(),
                            [&](const Lift& l) { return l.geodesic.approx_equal(expected, 1e-9); }));
  }
  const OrthoSpectrum s = ortho_spectrum(lifts, 4.0);
  ASSERT_EQ(s.entries.size(), 3u);
  for (const OrthoEntry& e : s.entries) EXPECT_NEAR(e.distance.d, std::acosh(2.0), 1e-9);
  EXPECT_EQ(ortho_spectrum(lifts, 4.0, 1).entries.size(), 1u);
  EXPECT_EQ(ortho_spectrum(lifts, 4.0, 0).entries.size(), 0u);
}

TEST(Lifts, CutoffFilters) {
  const LiftSet lifts = lifts_of_geodesic(schottky(), Word({1}), 3);
  const OrthoSpectrum all = ortho_spectrum(lifts, 100.0);
  const OrthoSpectrum near = ortho_spectrum(lifts, 3.0);
  EXPECT_LT(near.entries.size(), all.entries.size());
  for (const OrthoEntry& e : near.entries) EXPECT_LE(e.distance.d, 3.0);
  EXPECT_TRUE(std::is_sorted(all.entries.begin(), all.entries.end(),
                             [](const OrthoEntry& l, const OrthoEntry& r) {
                               return l.distance.d < r.distance.d - 1e-9;
                             }));
  EXPECT_THROW(ortho_spectrum(lifts, 0.0), Error);
}

TEST(Lifts, LiftsAreImagesOfTheBase) {
  const GroupPresentation g = schottky();
  const LiftSet lifts = lifts_of_geodesic(g, Word({1, 2}), 3);
  for (const Lift& l : lifts.lifts) {
    EXPECT_TRUE(mobius_apply(g.element(l.word), lifts.base).approx_equal(l.geodesic, 1e-8));
  }
  for (std::size_t i = 0; i < lifts.lifts.size(); ++i) {
    for (std::size_t j = i + 1; j < lifts.lifts.size(); ++j) {
      EXPECT_FALSE(lifts.lifts[i].geodesic.approx_equal(lifts.lifts[j].geodesic, 1e-8));
    }
  }
}

TEST(Lifts, FrontierDisplacement) {
  EXPECT_FALSE(lifts_of_geodesic(schottky(), Word({1}), 0).frontier_displacement.has_value());
  const auto d1 = lifts_of_geodesic(schottky(), Word({1}), 1).frontier_displacement;
  const auto d3 = lifts_of_geodesic(schottky(), Word({1}), 3).frontier_displacement;
  ASSERT_TRUE(d1 && d3);
  EXPECT_GT(*d3, *d1);
}

TEST(Lifts, ConjugationInvariance) {
  std::mt19937_64 rng(67);
  const GroupPresentation g = schottky();
  const LiftSet base = lifts_of_geodesic(g, Word({1}), 3);
  const OrthoSpectrum s = ortho_spectrum(base, 4.0);
  for (int i = 0; i < 5; ++i) {
    const GroupPresentation h = g.conjugated(testing::random_isometry(rng));
    const OrthoSpectrum t = ortho_spectrum(lifts_of_geodesic(h, Word({1}), 3), 4.0);
    ASSERT_EQ(s.entries.size(), t.entries.size());
    for (std::size_t k = 0; k < s.entries.size(); ++k) {
      EXPECT_NEAR(s.entries[k].distance.d, t.entries[k].distance.d, 1e-7);
    }
  }
}

TEST(TubeCheck, HorizonZeroIsInconclusive) {
  const TubeCheck c = check_log3_tube(lifts_of_geodesic(schottky(), Word({1}), 0));
  EXPECT_EQ(c.verdict, TubeVerdict::Inconclusive);
  EXPECT_TRUE(c.radius.unbounded());
}

TEST(TubeCheck, CyclicHolds) {
  const TubeCheck c = check_log3_tube(lifts_of_geodesic(cyclic(), Word({1}), 6));
  EXPECT_EQ(c.verdict, TubeVerdict::Holds);
  EXPECT_TRUE(c.radius.unbounded());
  EXPECT_TRUE(c.stable);
}

TEST(TubeCheck, SyntheticByHorizon) {
  const GroupPresentation g = synthetic();
  EXPECT_EQ(check_log3_tube(lifts_of_geodesic(g, Word({1}), 1)).verdict, TubeVerdict::Inconclusive);
  const TubeCheck two = check_log3_tube(lifts_of_geodesic(g, Word({1}), 2));
  EXPECT_TRUE(two.stable);
  EXPECT_EQ(two.verdict, TubeVerdict::Holds);
  // At word length 3, gAg·(0, ∞) = (4, ∞) is asymptotic to the base.
  const TubeCheck three = check_log3_tube(lifts_of_geodesic(g, Word({1}), 3));
  EXPECT_TRUE(three.degenerate_lifts);
  EXPECT_EQ(three.verdict, TubeVerdict::Fails);
}

TEST(TubeCheck, ExplicitLifts) {
  // Orthodistance log 3 < 2·(log 3)/2 + … : radius exactly (log 3)/2 is not "> (log 3)/2".
  const LiftSet close = LiftSet::from_geodesics(line(-1.0, 1.0), {line(-3.0, 3.0)}, 2, {1});
  const TubeCheck c = check_log3_tube(close);
  EXPECT_NEAR(*c.radius.radius, thresholds::kLog3Half, 1e-12);
  EXPECT_EQ(c.verdict, TubeVerdict::Inconclusive);

  const LiftSet closer = LiftSet::from_geodesics(line(-1.0, 1.0), {line(-2.0, 2.0)}, 2, {1});
  EXPECT_EQ(check_log3_tube(closer).verdict, TubeVerdict::Fails);

  const LiftSet far = LiftSet::from_geodesics(line(-1.0, 1.0), {line(-4.0, 4.0)}, 2, {1});
  EXPECT_EQ(check_log3_tube(far).verdict, TubeVerdict::Holds);

  const LiftSet unstable = LiftSet::from_geodesics(line(-1.0, 1.0), {line(-4.0, 4.0)}, 2, {2});
  EXPECT_EQ(check_log3_tube(unstable).verdict, TubeVerdict::Inconclusive);

  const LiftSet touching = LiftSet::from_geodesics(vertical(0.0), {line(0.0, 5.0), line(-4.0, -8.0)}, 2, {1, 1});
  EXPECT_EQ(check_log3_tube(touching).verdict, TubeVerdict::Fails);
}

TEST(TubeDomain, NearestMidplanesAreFaces) {
  const LiftSet lifts = lifts_of_geodesic(synthetic(), Word({1}), 2);
  const auto faces = tube_domain_faces(lifts, 400);
  EXPECT_EQ(faces.size(), 3u);
}

TEST(TubeDomain, HiddenMidplaneIsNotAFace) {
  // The far lift sits behind the near one, so its midplane is cut off.
  const LiftSet lifts =
      LiftSet::from_geodesics(vertical(0.0), {line(1.0, 3.0), line(1.9, 2.1)}, 1, {1, 1});
  const auto faces = tube_domain_faces(lifts, 400);
  EXPECT_EQ(faces, std::vector<std::size_t>({1}));
  EXPECT_THROW(tube_domain_faces(lifts, 10), Error);
}

}  // namespace
}  // namespace hyptube
