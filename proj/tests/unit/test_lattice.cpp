#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace yangian {
namespace {

using testing::kSeed;

std::vector<std::vector<int>> all_labels(std::size_t endpoints) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << endpoints); ++mask) {
    std::vector<int> l(endpoints);
    for (std::size_t m = 0; m < endpoints; ++m) l[m] = (mask >> m) & 1U ? 2 : 1;
    out.push_back(l);
  }
  return out;
}

std::vector<Rational> rapidities(std::size_t n_lines) {
  const std::vector<Rational> pool{Rational(1, 3), Rational(2, 5), Rational(-7, 4), Rational(5, 6)};
  return {pool.begin(), pool.begin() + static_cast<long>(n_lines)};
}

BaxterLattice six_line_lattice() {
  return BaxterLattice::spin_half({{1, 9}, {2, 10}, {3, 8}, {4, 12}, {5, 6}, {7, 11}},
                                  {Rational(1, 3), Rational(2, 4), Rational(5, 5), Rational(10, 6), Rational(17, 7),
                                   Rational(26, 8)});
}

BaxterLattice triangle() {
  return BaxterLattice::spin_half({{1, 4}, {2, 5}, {3, 6}}, {Rational(1, 3), Rational(2, 5), Rational(-7, 4)});
}

TEST(Lattice, SingleLine) {
  const auto lat = BaxterLattice::spin_half({{1, 2}}, {Rational(3)});
  EXPECT_EQ(contract_partition_function(lat, spin_half_labels({1, 1})), Rational(1));
  EXPECT_EQ(contract_partition_function(lat, spin_half_labels({2, 2})), Rational(1));
  EXPECT_EQ(contract_partition_function(lat, spin_half_labels({1, 2})), Rational(0));
  EXPECT_EQ(perimeter_bethe_z(lat, {2, 2}), Rational(1));
  EXPECT_EQ(perimeter_bethe_z(lat, {1, 1}), Rational(1));
}

TEST(Lattice, SingleVertexByHand) {
  // One crossing; weights (x delta_out,in + exchange)/(x + 1) with x = theta_1 - theta_2.
  const Rational t1(1, 3);
  const Rational t2(-5, 2);
  const auto lat = BaxterLattice::spin_half({{1, 3}, {2, 4}}, {t1, t2});
  const Rational x = t1 - t2;
  for (const auto& l : all_labels(4)) {
    const int in1 = l[2];
    const int out1 = l[0];
    const int in2 = l[3];
    const int out2 = l[1];
    const Rational expected =
        (x * Rational(out1 == in1 && out2 == in2) + Rational(out1 == in2 && out2 == in1)) / (x + 1);
    EXPECT_EQ(contract_partition_function(lat, spin_half_labels(l)), expected);
  }
}

TEST(Lattice, CrossingRule) {
  const auto lat = BaxterLattice::spin_half({{1, 3}, {2, 4}, {5, 6}}, rapidities(3));
  EXPECT_TRUE(lat.crosses(0, 1));
  EXPECT_TRUE(lat.crosses(1, 0));
  EXPECT_FALSE(lat.crosses(0, 2));
  EXPECT_FALSE(lat.crosses(1, 2));
  EXPECT_EQ(lat.line_at(4), (std::pair<std::size_t, bool>{1, false}));
  EXPECT_EQ(lat.line_at(5), (std::pair<std::size_t, bool>{2, true}));
}

TEST(Lattice, IceRuleForcesZero) {
  for (int n_lines = 1; n_lines <= 3; ++n_lines) {
    for (const auto& g : all_matchings(n_lines)) {
      const auto lat = BaxterLattice::spin_half(g, rapidities(static_cast<std::size_t>(n_lines)));
      for (const auto& l : all_labels(2 * static_cast<std::size_t>(n_lines))) {
        if (satisfies_ice_rule(lat, l)) continue;
        EXPECT_EQ(contract_partition_function(lat, spin_half_labels(l)), Rational(0));
        EXPECT_EQ(perimeter_bethe_z(lat, l), Rational(0));
      }
    }
  }
}

TEST(Lattice, PerimeterFormulaExhaustive) {
  for (int n_lines = 1; n_lines <= 3; ++n_lines) {
    for (const auto& g : all_matchings(n_lines)) {
      const auto lat = BaxterLattice::spin_half(g, rapidities(static_cast<std::size_t>(n_lines)));
      const auto pos = default_positions(lat);
      for (const auto& l : all_labels(2 * static_cast<std::size_t>(n_lines))) {
        EXPECT_EQ(perimeter_bethe_z(lat, l), contract_partition_function(lat, spin_half_labels(l), pos)) << lat.str();
      }
      EXPECT_EQ(contract_partition_function(lat, spin_half_labels(std::vector<int>(2 * n_lines, 1)), pos),
                Rational(1));
    }
  }
}

TEST(Lattice, PerimeterFormulaRandomRapidities) {
  std::mt19937_64 rng(kSeed + 50);
  const auto matchings = all_matchings(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> theta(3);
    for (auto& t : theta) t = testing::random_rational(rng);
    if (std::any_of(theta.begin(), theta.end(), [&](const Rational& a) {
          return std::count(theta.begin(), theta.end(), a) > 1 ||
                 std::any_of(theta.begin(), theta.end(), [&](const Rational& b) { return (a - b + 1).is_zero(); });
        })) {
      continue;
    }
    const auto& g = matchings[static_cast<std::size_t>(trial) % matchings.size()];
    const auto lat = BaxterLattice::spin_half(g, theta);
    for (const auto& l : all_labels(6)) {
      Rational direct;
      bool pole = false;
      try {
        direct = contract_partition_function(lat, spin_half_labels(l));
      } catch (const PoleError&) {
        pole = true;
      }
      if (pole) continue;
      EXPECT_EQ(perimeter_bethe_z(lat, l), direct) << lat.str();
    }
  }
}

TEST(Lattice, SixLineLattice) {
  const auto lat = six_line_lattice();
  const std::vector<int> labels{1, 2, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2};
  ASSERT_TRUE(satisfies_ice_rule(lat, labels));
  const Rational z = contract_partition_function(lat, spin_half_labels(labels));
  EXPECT_EQ(z, Rational(4536, 115));
  EXPECT_EQ(perimeter_bethe_z(lat, labels), z);
}

TEST(Lattice, MatchingCounts) {
  EXPECT_EQ(all_matchings(1).size(), 1U);
  EXPECT_EQ(all_matchings(2).size(), 3U);
  EXPECT_EQ(all_matchings(3).size(), 15U);
  EXPECT_EQ(all_matchings(4).size(), 105U);
  for (const auto& g : all_matchings(3)) {
    std::vector<int> seen;
    for (const auto& [i, j] : g) {
      EXPECT_LT(i, j);
      seen.push_back(i);
      seen.push_back(j);
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  }
}

TEST(Lattice, ZInvarianceSpinHalf) {
  const auto lat = triangle();
  const BoundaryPositions moved{{-5, -1, Rational(-1, 2), Rational(1, 2), 1, 5}};
  const auto base = default_positions(lat);
  EXPECT_NE(vertex_orders(lat, base), vertex_orders(lat, moved));
  for (const auto& l : all_labels(6)) {
    const auto report = z_invariance_check(lat, spin_half_labels(l), base, moved);
    EXPECT_TRUE(report.passed()) << report.summary();
  }
}

TEST(Lattice, ZInvarianceTrivialSlide) {
  const auto lat = BaxterLattice::spin_half({{1, 3}, {2, 4}}, rapidities(2));
  const BoundaryPositions a{{-3, -1, 1, 3}};
  const BoundaryPositions b{{-4, Rational(-1, 2), 1, 7}};
  EXPECT_EQ(vertex_orders(lat, a), vertex_orders(lat, b));
  for (const auto& l : all_labels(4)) EXPECT_TRUE(z_invariance_check(lat, spin_half_labels(l), a, b).passed());
}

TEST(Lattice, ZInvarianceGeneralReps) {
  BaxterLattice lat{{{1, 4}, {2, 5}, {3, 6}},
                    {RepLabel::conjugate(2, 2), RepLabel::conjugate(1, 2), RepLabel::conjugate(1, 2)},
                    {Rational(1, 3), Rational(2, 5), Rational(-7, 4)}};
  const BoundaryPositions moved{{-5, -1, Rational(-1, 2), Rational(1, 2), 1, 5}};
  const auto base = default_positions(lat);
  std::size_t nonzero = 0;
  const auto reps = std::vector<RepLabel>{lat.reps[0], lat.reps[1], lat.reps[2], lat.reps[0], lat.reps[1], lat.reps[2]};
  for (const auto& key : tensor_basis(reps)) {
    const auto alpha = split_key(key, reps.size(), 2);
    const auto report = z_invariance_check(lat, alpha, base, moved);
    EXPECT_TRUE(report.passed()) << report.summary();
    nonzero += contract_partition_function(lat, alpha, base).is_zero() ? 0 : 1;
  }
  EXPECT_GT(nonzero, 0U);
}

TEST(Lattice, TriplePointRejected) {
  // Symmetric points make the three diameters concurrent at the centre.
  const auto lat = triangle();
  const BoundaryPositions pos{{-3, -1, Rational(-1, 3), Rational(1, 3), 1, 3}};
  EXPECT_THROW((void)vertex_orders(lat, pos), ConstraintError);
}

TEST(Lattice, InvalidLattices) {
  EXPECT_THROW(BaxterLattice::spin_half({{2, 1}}, {Rational(0)}).validate(), ConstraintError);
  EXPECT_THROW(BaxterLattice::spin_half({{1, 2}, {2, 3}}, rapidities(2)).validate(), ConstraintError);
  EXPECT_THROW(BaxterLattice::spin_half({{1, 2}}, rapidities(2)).validate(), IncompatibleError);
  EXPECT_THROW((void)spin_half_labels({1, 3}), IncompatibleError);
}

TEST(Lattice, WeightPole) {
  const auto lat = BaxterLattice::spin_half({{1, 3}, {2, 4}}, {Rational(0), Rational(1)});
  EXPECT_THROW((void)contract_partition_function(lat, spin_half_labels({1, 1, 1, 1})), PoleError);
}

TEST(LatticeInvariant, SingleLineIsTwoOne) {
  for (int s = 1; s <= 3; ++s) {
    const Rational theta(2, 7);
    const BaxterLattice lat{{{1, 2}}, {RepLabel::conjugate(s, 2)}, {theta}};
    const auto inv = invariant_from_lattice(lat);
    const auto spec = InvariantSpec::two_one(2, s, theta + s + 1);
    EXPECT_EQ(inv.spec, monodromy_of(spec));
    EXPECT_TRUE(projective_ratio(inv.state, build_invariant(spec)).has_value());
  }
}

TEST(LatticeInvariant, CrossingLinesAreFourTwo) {
  for (const auto& [s1, s2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    const Rational t1(1, 3);
    const Rational t2(-5, 2);
    const BaxterLattice lat{{{1, 3}, {2, 4}}, {RepLabel::conjugate(s1, 2), RepLabel::conjugate(s2, 2)}, {t1, t2}};
    const auto inv = invariant_from_lattice(lat);
    const Rational v3 = t1 + s1 + 1;
    const Rational v4 = t2 + s2 + 1;
    const auto spec = InvariantSpec::four_two(2, s1, s2, v3 - v4, v4);
    EXPECT_EQ(inv.spec, monodromy_of(spec));
    const auto r = projective_match("lattice", inv.state, build_invariant(spec));
    EXPECT_TRUE(r.passed) << s1 << "," << s2 << " " << r.witness;
  }
}

TEST(LatticeInvariant, DisjointLinesFactorise) {
  const BaxterLattice lat{{{1, 2}, {3, 4}}, {RepLabel::conjugate(2, 2), RepLabel::conjugate(1, 2)},
                          {Rational(1), Rational(-2, 3)}};
  const auto inv = invariant_from_lattice(lat);
  const auto a = build_invariant(InvariantSpec::two_one(2, 2, Rational(1) + 3));
  const auto b = build_invariant(InvariantSpec::two_one(2, 1, Rational(-2, 3) + 2));
  EXPECT_TRUE(projective_ratio(inv.state, tensor_product(a, b)).has_value());
}

TEST(LatticeInvariant, LatticeVectorsAreInvariant) {
  for (int n_lines = 1; n_lines <= 3; ++n_lines) {
    for (const auto& g : all_matchings(n_lines)) {
      const auto lat = BaxterLattice::spin_half(g, rapidities(static_cast<std::size_t>(n_lines)));
      const auto inv = invariant_from_lattice(lat);
      const auto report = check_invariance(inv.spec, inv.state);
      EXPECT_TRUE(report.passed()) << lat.str() << " " << report.summary();
    }
  }
}

TEST(LatticeInvariant, GeneralRepsAreInvariant) {
  const BaxterLattice lat{{{1, 4}, {2, 5}, {3, 6}},
                          {RepLabel::conjugate(2, 2), RepLabel::conjugate(1, 2), RepLabel::conjugate(1, 2)},
                          {Rational(1, 3), Rational(2, 5), Rational(-7, 4)}};
  const auto inv = invariant_from_lattice(lat);
  EXPECT_FALSE(inv.state.is_zero());
  EXPECT_TRUE(check_invariance(inv.spec, inv.state).passed());
}

TEST(LatticeInvariant, StringsPerLine) {
  const BaxterLattice lat{{{1, 4}, {2, 5}, {3, 6}},
                          {RepLabel::conjugate(2, 2), RepLabel::conjugate(1, 2), RepLabel::conjugate(3, 2)},
                          {Rational(1, 3), Rational(2, 5), Rational(-7, 4)}};
  const auto inv = invariant_from_lattice(lat);
  std::vector<Rational> expected;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const Rational end = lat.theta[k] + lat.reps[k].s + 1;
    for (int m = 1; m <= lat.reps[k].s; ++m) expected.push_back(end - m);
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(solve_q(vacuum_eigenvalues(inv.spec).delta(), 16).roots(), expected);
}

TEST(LatticeInvariant, RejectsSymmetricLines) {
  const BaxterLattice lat{{{1, 2}}, {RepLabel::symmetric(1, 2)}, {Rational(0)}};
  EXPECT_THROW((void)invariant_from_lattice(lat), ConstraintError);
}

}  // namespace
}  // namespace yangian
