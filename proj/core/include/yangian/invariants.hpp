#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yangian/fock.hpp"
#include "yangian/monodromy.hpp"
#include "yangian/report.hpp"
#include "yangian/scalar/laurent_series.hpp"

namespace yangian {

enum class Family { TwoOne, ThreeOne, ThreeTwo, FourTwo };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Parameters of one of the sample invariants.
//   TwoOne:   s = {s},       base = v2
//   ThreeOne: s = {s2, s3},  base = v1
//   ThreeTwo: s = {s1, s2},  base = v3
//   FourTwo:  s = {s3, s4},  base = v4, v3 = v4 + z
struct InvariantSpec {
  Family family = Family::TwoOne;
  int n = 2;
  std::vector<int> s;
  Rational base = 0;
  Rational z = 0;

  static InvariantSpec two_one(int n, int s, Rational v2 = 0);
  static InvariantSpec three_one(int n, int s2, int s3, Rational v1 = 0);
  static InvariantSpec three_two(int n, int s1, int s2, Rational v3 = 0);
  static InvariantSpec four_two(int n, int s3, int s4, Rational z, Rational v4 = 0);

  void validate() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const InvariantSpec&, const InvariantSpec&) = default;
};

// Constrained monodromy with conjugate sites to the left.
MonodromySpec monodromy_of(const InvariantSpec& spec);

// Reads the family parameters back from a monodromy; throws ConstraintError if
// the representation labels or inhomogeneities violate the family constraints.
InvariantSpec invariant_spec_from(Family family, const MonodromySpec& mono);

// One product of bilinears (b-bar^k . a-bar^i)^power, sites 0-based.
struct Bilinear {
  std::size_t conjugate_site;
  std::size_t symmetric_site;
  int power;
};

// prod (b-bar^k . a-bar^i)^p |0> expanded in the monomial basis.
StateVector bilinear_product(const std::vector<RepLabel>& sites, const std::vector<Bilinear>& factors);

// Closed-form invariant. FourTwo uses d_k = s3! s4! e_k(z) / ((s3-k)! (s4-k)! k!^2), so d_0 = 1.
StateVector build_invariant(const InvariantSpec& spec);
// Same with the coefficients kept as rational functions of z.
RationalFunctionStateVector build_invariant_symbolic(const InvariantSpec& spec);
// d_k(z) of the four-site invariant in the normalisation above.
RationalFunction four_two_coefficient(int s3, int s4, int k);

// Residue evaluation of the link-variable integral forms via truncated series.
StateVector grassmannian_eval(const InvariantSpec& spec);
RationalFunctionStateVector grassmannian_eval_symbolic(const InvariantSpec& spec);
// The integrand Laurent series over link variables c_ki and bilinear markers x_ki.
LaurentSeries grassmannian_integrand(const InvariantSpec& spec);

// Four-site invariant at z with s3 - z = m a positive integer, with the exact
// gamma-function coefficients k!/(k-m)! (zero for k < m).
StateVector special_point_invariant(const InvariantSpec& spec);
// lim_{z -> z0} (z - z0)^order v(z), coefficientwise.
StateVector regularized_limit(const RationalFunctionStateVector& v, const Rational& z0, int order);
// Compares the special-point form with the regularised generic closed form and
// integral form, and checks its invariance when nonzero.
CheckReport check_special_point(const InvariantSpec& spec);

// Projective comparison report: one global ratio across all components.
template <class C>
CheckResult projective_match(const std::string& name, const BasicStateVector<C>& a, const BasicStateVector<C>& b) {
  const auto ratio = projective_ratio(a, b);
  if (!ratio) return {name, false, "not proportional (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " terms)"};
  return {name, true, "ratio " + ratio->str()};
}

}  // namespace yangian
