#include <gtest/gtest.h>

#include "support.hpp"

namespace yangian {
namespace {

const std::vector<Rational> kZ{Rational(5, 2), Rational(7, 3), Rational(-9, 4)};

// n = 2 specs of every family at small labels, with a few nonzero base values.
std::vector<InvariantSpec> grid(int n, int max_s) {
  std::vector<InvariantSpec> out;
  for (int s = 0; s <= std::min(max_s + 1, 3); ++s) out.push_back(InvariantSpec::two_one(n, s, Rational(s, 3)));
  for (int a = 0; a <= max_s; ++a) {
    for (int b = 0; b <= max_s; ++b) {
      out.push_back(InvariantSpec::three_one(n, a, b, Rational(-1, 2)));
      out.push_back(InvariantSpec::three_two(n, a, b, Rational(2)));
      for (const auto& z : kZ) out.push_back(InvariantSpec::four_two(n, a, b, z, Rational(1, 5)));
    }
  }
  return out;
}

BasisKey key(std::initializer_list<int> occ) {
  BasisKey k;
  for (int x : occ) k.push_back(static_cast<std::uint8_t>(x));
  return k;
}

TEST(Invariants, TwoOneSpinHalf) {
  const auto psi = build_invariant(InvariantSpec::two_one(2, 1, 0));
  StateVector expected({RepLabel::conjugate(1, 2), RepLabel::symmetric(1, 2)});
  expected.add(key({1, 0, 1, 0}), 1);
  expected.add(key({0, 1, 0, 1}), 1);
  EXPECT_EQ(psi, expected);
}

TEST(Invariants, TwoOneIsBilinearPower) {
  // (b-bar . a-bar)^s |0>: multinomial coefficients s!/prod m_a! on |m; m>.
  for (int s = 0; s <= 4; ++s) {
    const auto psi = build_invariant(InvariantSpec::two_one(3, s, 0));
    const RepLabel rep = RepLabel::symmetric(s, 3);
    EXPECT_EQ(psi.size(), static_cast<std::size_t>(rep.dimension()));
    for (const auto& st : basis(rep)) {
      const auto k = make_key(std::vector<FockState>{st, st});
      EXPECT_EQ(psi.coefficient(k), factorial(s) / st.norm_squared());
    }
  }
}

TEST(Invariants, ThreeTwoTrivialIsVacuum) {
  const auto spec = InvariantSpec::three_two(2, 0, 0, Rational(4));
  EXPECT_EQ(build_invariant(spec), reference_state(monodromy_of(spec).reps()));
}

TEST(Invariants, FourTwoCoefficientRatio) {
  const auto psi = build_invariant(InvariantSpec::four_two(2, 1, 1, Rational(5, 2)));
  // Sites b1, b2, a3, a4. k = 0 couples (1,3)(2,4); k = 1 couples (1,4)(2,3).
  const Rational d0 = psi.coefficient(key({1, 0, 0, 1, 1, 0, 0, 1}));
  const Rational d1 = psi.coefficient(key({1, 0, 0, 1, 0, 1, 1, 0}));
  EXPECT_EQ(d0, Rational(1));
  EXPECT_EQ(d0 / d1, Rational(5, 2));
  EXPECT_EQ(psi.coefficient(key({1, 0, 1, 0, 1, 0, 1, 0})), d0 + d1);
}

TEST(Invariants, FourTwoRecursion) {
  // d_k / d_{k+1} = (k+1)(z - s3 + k + 1) / ((s3 - k)(s4 - k)).
  const Rational z(7, 3);
  for (int s3 = 0; s3 <= 3; ++s3) {
    for (int s4 = 0; s4 <= 3; ++s4) {
      for (int k = 0; k < std::min(s3, s4); ++k) {
        const Rational dk = four_two_coefficient(s3, s4, k)(z);
        const Rational dk1 = four_two_coefficient(s3, s4, k + 1)(z);
        EXPECT_EQ(dk / dk1, Rational(k + 1) * (z - s3 + k + 1) / Rational((s3 - k) * (s4 - k)));
      }
      EXPECT_EQ(four_two_coefficient(s3, s4, 0), RationalFunction(1));
    }
  }
}

TEST(Invariants, FourTwoDecouplesAtLargeZ) {
  for (int s = 1; s <= 3; ++s) {
    const auto ratio = four_two_coefficient(s, s, 1) / four_two_coefficient(s, s, 0);
    EXPECT_LT(ratio.num().degree(), ratio.den().degree());
  }
}

TEST(Invariants, MonodromyShapes) {
  const auto two = monodromy_of(InvariantSpec::two_one(2, 2, Rational(1)));
  ASSERT_EQ(two.length(), 2U);
  EXPECT_EQ(two.sites[0], (SiteSpec{RepLabel::conjugate(2, 2), Rational(1) - 2 - 2 + 1}));
  EXPECT_EQ(two.sites[1], (SiteSpec{RepLabel::symmetric(2, 2), Rational(1)}));
  const auto three = monodromy_of(InvariantSpec::three_one(3, 1, 2, 0));
  EXPECT_EQ(three.conjugate_count(), 1U);
  EXPECT_EQ(three.sites[0].rep, RepLabel::conjugate(3, 3));
  EXPECT_EQ(three.sites[1].v, Rational(3 + 1 + 2 - 1));
  EXPECT_EQ(three.sites[2].v, Rational(3 + 2 - 1));
  const auto four = monodromy_of(InvariantSpec::four_two(2, 1, 2, Rational(5, 2)));
  EXPECT_EQ(four.conjugate_count(), 2U);
  EXPECT_EQ(four.sites[2].v - four.sites[3].v, Rational(5, 2));
}

TEST(Invariants, ConstraintRoundTrip) {
  for (const auto& spec : grid(2, 2)) {
    const auto mono = monodromy_of(spec);
    EXPECT_EQ(invariant_spec_from(spec.family, mono), spec) << spec.str();
    auto broken = mono;
    broken.sites.back().v += Rational(1, 2);
    if (spec.family == Family::FourTwo) broken.sites[1].v += Rational(1, 3);
    EXPECT_THROW((void)invariant_spec_from(spec.family, broken), ConstraintError) << spec.str();
  }
}

TEST(Invariants, InvalidSpecsAreRejected) {
  EXPECT_THROW(InvariantSpec::two_one(2, -1).validate(), Error);
  EXPECT_THROW(InvariantSpec::two_one(1, 1).validate(), Error);
  EXPECT_THROW((void)build_invariant(InvariantSpec{Family::ThreeOne, 2, {1}, 0, 0}), Error);
  EXPECT_THROW((void)parse_family("FiveOne"), Error);
}

TEST(Invariants, InvarianceGridRankTwo) {
  for (const auto& spec : grid(2, 2)) {
    const auto report = check_invariance(monodromy_of(spec), build_invariant(spec));
    EXPECT_TRUE(report.passed()) << spec.str() << " " << report.summary();
  }
}

TEST(Invariants, InvarianceGridRankThree) {
  for (const auto& spec : grid(3, 1)) {
    const auto report = check_invariance(monodromy_of(spec), build_invariant(spec));
    EXPECT_TRUE(report.passed()) << spec.str() << " " << report.summary();
  }
}

TEST(Invariants, GrassmannianResidueTwoOne) {
  // Residue of c^{-3} exp(-c X) is X^2/2, times the prefactor s! (-1)^s = 2.
  const auto spec = InvariantSpec::two_one(2, 2, 0);
  const auto ratio = projective_ratio(grassmannian_eval(spec), build_invariant(spec));
  ASSERT_TRUE(ratio.has_value());
  EXPECT_EQ(*ratio, Rational(1));
}

TEST(Invariants, GrassmannianGridRankTwo) {
  for (const auto& spec : grid(2, 2)) {
    const auto r = projective_match("grassmannian", grassmannian_eval(spec), build_invariant(spec));
    EXPECT_TRUE(r.passed) << spec.str() << " " << r.witness;
  }
}

TEST(Invariants, GrassmannianSymbolicInZ) {
  const auto spec = InvariantSpec::four_two(2, 2, 1, Rational(7, 3));
  const auto integral = grassmannian_eval_symbolic(spec);
  const auto closed = build_invariant_symbolic(spec);
  for (const auto& z : kZ) {
    EXPECT_TRUE(projective_ratio(evaluate(integral, z), evaluate(closed, z)).has_value()) << z;
  }
}

TEST(Invariants, SpecialPoints) {
  for (int s3 = 1; s3 <= 2; ++s3) {
    for (int s4 = 0; s4 <= 2; ++s4) {
      for (int m = 1; m <= s3; ++m) {
        const auto spec = InvariantSpec::four_two(2, s3, s4, Rational(s3 - m));
        const auto report = check_special_point(spec);
        EXPECT_TRUE(report.passed()) << spec.str() << " " << report.summary();
        // Only k >= m survives.
        if (m > std::min(s3, s4)) EXPECT_TRUE(special_point_invariant(spec).is_zero());
      }
    }
  }
  EXPECT_THROW((void)special_point_invariant(InvariantSpec::four_two(2, 1, 1, Rational(5, 2))), Error);
}

TEST(Invariants, BilinearProductRejectsWrongSites) {
  const std::vector<RepLabel> sites{RepLabel::symmetric(1, 2), RepLabel::symmetric(1, 2)};
  EXPECT_THROW((void)bilinear_product(sites, {{0, 1, 1}}), IncompatibleError);
}

}  // namespace
}  // namespace yangian
