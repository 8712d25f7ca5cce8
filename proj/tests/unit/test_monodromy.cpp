#include <gtest/gtest.h>

#include "support.hpp"

namespace yangian {
namespace {

using testing::kSeed;

const std::vector<Rational> kU{Rational(13, 3), Rational(-7, 2), Rational(9, 5)};
const std::vector<Rational> kUp{Rational(5, 7), Rational(-1, 4)};

// P_ab(u) v by explicit index contraction over single-site Lax entries, right to left.
StateVector oracle_element(const MonodromySpec& spec, int a, int b, const StateVector& v, const Rational& u) {
  const int n = spec.n;
  std::function<StateVector(std::size_t, int, const StateVector&)> chain = [&](std::size_t i, int c,
                                                                                const StateVector& w) {
    // Entry (c, b) of the product of sites i..L-1.
    if (i + 1 == spec.length()) return apply_lax_entry(spec.sites[i].rep, c, b, w, i, u - spec.sites[i].v);
    StateVector out(w.sites());
    for (int d = 1; d <= n; ++d) {
      out += apply_lax_entry(spec.sites[i].rep, c, d, chain(i + 1, d, w), i, u - spec.sites[i].v);
    }
    return out;
  };
  return chain(0, a, v);
}

std::vector<MonodromySpec> small_chains() {
  const auto sym = [](int s, int n) { return RepLabel::symmetric(s, n); };
  const auto conj = [](int s, int n) { return RepLabel::conjugate(s, n); };
  return {
      {2, {{sym(1, 2), Rational(1, 3)}}},
      {2, {{conj(2, 2), Rational(-1, 2)}}},
      {2, {{conj(1, 2), Rational(0)}, {sym(2, 2), Rational(5, 3)}}},
      {3, {{sym(1, 3), Rational(2)}, {conj(1, 3), Rational(-3, 4)}}},
      {2, {{conj(1, 2), Rational(1)}, {sym(1, 2), Rational(2, 7)}, {sym(2, 2), Rational(-1)}}},
  };
}

TEST(Monodromy, SingleSiteIsLaxOperator) {
  for (int s = 0; s <= 3; ++s) {
    const auto rep = RepLabel::symmetric(s, 2);
    const MonodromySpec spec{2, {{rep, Rational(3, 2)}}};
    const auto hw = highest_weight_state(rep);
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        EXPECT_EQ(monodromy_element(spec, a, b, hw), apply_lax(LaxOperator{rep, Rational(3, 2)}, a, b, hw, 0));
      }
    }
  }
}

TEST(Monodromy, ElementsMatchContractionOracle) {
  std::mt19937_64 rng(kSeed + 30);
  for (const auto& spec : small_chains()) {
    const auto v = testing::random_state(rng, spec.reps());
    for (int a = 1; a <= spec.n; ++a) {
      for (int b = 1; b <= spec.n; ++b) {
        const auto sym = monodromy_element(spec, a, b, v);
        for (const auto& u : kU) {
          const auto expected = oracle_element(spec, a, b, v, u);
          EXPECT_EQ(monodromy_element_at(spec, a, b, v, u), expected) << spec.str();
          EXPECT_EQ(evaluate(sym, u), expected) << spec.str();
        }
        for (const auto& [k, p] : sym.terms()) EXPECT_LE(p.degree(), static_cast<int>(spec.length()));
      }
    }
  }
}

TEST(Monodromy, ColumnAndDenseMatricesAgree) {
  std::mt19937_64 rng(kSeed + 31);
  const auto spec = small_chains()[3];
  const auto v = testing::random_state(rng, spec.reps());
  const Rational u(11, 6);
  for (int b = 1; b <= spec.n; ++b) {
    const auto col = monodromy_column_at(spec, b, v, u);
    for (int a = 1; a <= spec.n; ++a) EXPECT_EQ(col[static_cast<std::size_t>(a - 1)], oracle_element(spec, a, b, v, u));
  }
  const auto mats = monodromy_matrices(spec, u);
  ASSERT_EQ(mats.size(), 9U);
  const auto m12 = operator_matrix(spec.reps(), [&](const StateVector& s) { return oracle_element(spec, 1, 2, s, u); });
  EXPECT_EQ(mats[1], m12);
}

TEST(Monodromy, TwoOneOffDiagonalAnnihilates) {
  const auto spec = InvariantSpec::two_one(2, 1, 0);
  const auto mono = monodromy_of(spec);
  const auto psi = build_invariant(spec);
  EXPECT_TRUE(monodromy_element(mono, 1, 2, psi).is_zero());
  EXPECT_TRUE(monodromy_element(mono, 2, 1, psi).is_zero());
  const auto den = mono.denominator();
  for (int a = 1; a <= 2; ++a) {
    EXPECT_EQ(monodromy_element(mono, a, a, psi), to_polynomial(psi) * den);
  }
}

TEST(Monodromy, Rtt) {
  for (const auto& spec : small_chains()) {
    const auto report = check_rtt(spec, kU, kUp);
    EXPECT_TRUE(report.passed()) << spec.str() << " " << report.summary();
  }
}

TEST(Monodromy, RttCoincidentSamples) {
  // a = c, b = d, u = u': both sides vanish identically.
  const auto spec = small_chains()[2];
  const auto report = check_rtt(spec, {Rational(2)}, {Rational(2)});
  EXPECT_TRUE(report.passed()) << report.summary();
}

TEST(Monodromy, LevelOneGeneratorIsTotalSpin) {
  std::mt19937_64 rng(kSeed + 32);
  for (const auto& spec : small_chains()) {
    const auto v = testing::random_state(rng, spec.reps());
    for (int a = 1; a <= spec.n; ++a) {
      for (int b = 1; b <= spec.n; ++b) {
        StateVector expected(spec.reps());
        for (std::size_t i = 0; i < spec.length(); ++i) expected += apply_generator(v, i, b, a);
        EXPECT_EQ(apply_yangian_generator(spec, 1, a, b, v), expected);
      }
    }
  }
}

TEST(Monodromy, LevelTwoGenerator) {
  std::mt19937_64 rng(kSeed + 33);
  for (const auto& spec : small_chains()) {
    const auto v = testing::random_state(rng, spec.reps());
    for (int a = 1; a <= spec.n; ++a) {
      for (int b = 1; b <= spec.n; ++b) {
        StateVector expected(spec.reps());
        for (std::size_t i = 0; i < spec.length(); ++i) {
          for (std::size_t j = i + 1; j < spec.length(); ++j) {
            for (int c = 1; c <= spec.n; ++c) expected += apply_generator(apply_generator(v, j, b, c), i, c, a);
          }
          expected += apply_generator(v, i, b, a) * spec.sites[i].v;
        }
        EXPECT_EQ(apply_yangian_generator(spec, 2, a, b, v), expected) << spec.str();
      }
    }
  }
}

TEST(Monodromy, LevelZeroIsIdentity) {
  std::mt19937_64 rng(kSeed + 34);
  const auto spec = small_chains()[4];
  const auto v = testing::random_state(rng, spec.reps());
  EXPECT_EQ(apply_yangian_generator(spec, 0, 1, 1, v), v);
  EXPECT_TRUE(apply_yangian_generator(spec, 0, 1, 2, v).is_zero());
}

TEST(Monodromy, YangianGeneratorStructure) {
  for (const auto& spec : small_chains()) {
    const auto report = check_yangian_generators(spec, kU);
    EXPECT_TRUE(report.passed()) << spec.str() << " " << report.summary();
  }
}

TEST(Monodromy, InvarianceExamples) {
  const auto two_one = InvariantSpec::two_one(2, 1, 0);
  EXPECT_TRUE(check_invariance(monodromy_of(two_one), build_invariant(two_one)).passed());
  const auto four_two = InvariantSpec::four_two(2, 1, 1, Rational(5, 2));
  EXPECT_TRUE(check_invariance(monodromy_of(four_two), build_invariant(four_two)).passed());
}

TEST(Monodromy, ReferenceStateIsNotInvariant) {
  const auto mono = monodromy_of(InvariantSpec::two_one(2, 1, 0));
  const auto report = check_invariance(mono, reference_state(mono.reps()));
  EXPECT_FALSE(report.passed());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_FALSE(report.first_failure()->witness.empty());
}

TEST(Monodromy, InvarianceNeedsEnoughSamples) {
  const auto spec = InvariantSpec::two_one(2, 1, 0);
  const auto mono = monodromy_of(spec);
  const auto report = check_invariance(mono, build_invariant(spec), {Rational(5)});
  EXPECT_FALSE(report.find("sample count")->passed);
  EXPECT_THROW((void)check_invariance(mono, build_invariant(spec), {Rational(0), Rational(1), Rational(2)}),
               ConstraintError);
}

TEST(Monodromy, InvarianceImpliesGeneratorsAnnihilate) {
  for (const auto& spec : {InvariantSpec::two_one(3, 2, 0), InvariantSpec::three_two(2, 1, 1, Rational(1, 2)),
                           InvariantSpec::four_two(2, 1, 1, Rational(7, 3))}) {
    const auto mono = monodromy_of(spec);
    const auto psi = build_invariant(spec);
    ASSERT_TRUE(check_invariance(mono, psi).passed());
    for (int r = 1; r <= 2; ++r) {
      for (int a = 1; a <= spec.n; ++a) {
        for (int b = 1; b <= spec.n; ++b) EXPECT_TRUE(apply_yangian_generator(mono, r, a, b, psi).is_zero());
      }
    }
  }
}

TEST(Monodromy, TransferMatrixEigenvalue) {
  const auto spec = InvariantSpec::three_one(3, 1, 1, Rational(2, 3));
  const auto mono = monodromy_of(spec);
  const auto psi = build_invariant(spec);
  for (const auto& u : kU) EXPECT_EQ(transfer_matrix_at(mono, psi, u), psi * (Rational(3) * mono.denominator(u)));
}

TEST(Monodromy, DefaultSamplesSkipInhomogeneities) {
  EXPECT_EQ(default_samples(2, 3, {}), (std::vector<Rational>{4, 5, 6}));
  EXPECT_EQ(default_samples(2, 3, {Rational(5)}), (std::vector<Rational>{4, 6, 7}));
}

TEST(Monodromy, ConjugateCount) {
  EXPECT_EQ(monodromy_of(InvariantSpec::four_two(2, 1, 2, Rational(5, 2))).conjugate_count(), 2U);
  EXPECT_EQ(monodromy_of(InvariantSpec::three_one(2, 1, 1)).conjugate_count(), 1U);
}

TEST(Intertwiner, TwoOneIsFactorialTimesIdentity) {
  for (int s = 0; s <= 3; ++s) {
    const auto spec = InvariantSpec::two_one(2, s, 0);
    const auto mono = monodromy_of(spec);
    const auto o = make_intertwiner(mono, 1, build_invariant(spec));
    Rational c;
    ASSERT_TRUE(o.matrix().is_scalar_multiple_of_identity(&c));
    EXPECT_EQ(c, factorial(s));
    EXPECT_TRUE(check_intertwiner(mono, 1, build_invariant(spec)).passed());
  }
}

TEST(Intertwiner, Bootstrap) {
  const auto spec = InvariantSpec::three_two(2, 1, 1, 0);
  const auto report = check_intertwiner(monodromy_of(spec), 2, build_invariant(spec));
  EXPECT_TRUE(report.passed()) << report.summary();
  const auto spec31 = InvariantSpec::three_one(2, 1, 1, 0);
  EXPECT_TRUE(check_intertwiner(monodromy_of(spec31), 1, build_invariant(spec31)).passed());
}

TEST(Intertwiner, FourTwoIsHoppingRMatrix) {
  for (const auto& [s3, s4, z] : {std::tuple{1, 1, Rational(5, 2)}, std::tuple{2, 1, Rational(7, 3)},
                                  std::tuple{2, 2, Rational(-9, 4)}}) {
    const auto spec = InvariantSpec::four_two(2, s3, s4, z);
    const auto mono = monodromy_of(spec);
    const auto psi = build_invariant(spec);
    EXPECT_TRUE(check_intertwiner(mono, 2, psi).passed());
    const DenseMatrix o = make_intertwiner(mono, 2, psi).matrix();
    const DenseMatrix r = hopping_rmatrix(s3, s4, 2).matrix(z);
    ASSERT_EQ(o.rows(), r.rows());
    const Rational ratio = o(0, 0) / r(0, 0);
    EXPECT_EQ(o, ratio * r) << "s3=" << s3 << " s4=" << s4;
  }
}

TEST(Intertwiner, RejectsNonInvariant) {
  const auto spec = InvariantSpec::two_one(2, 2, 0);
  const auto mono = monodromy_of(spec);
  auto bad = build_invariant(spec);
  bad.add(bad.terms().begin()->first, Rational(1));
  EXPECT_FALSE(check_intertwiner(mono, 1, bad).passed());
}

}  // namespace
}  // namespace yangian
