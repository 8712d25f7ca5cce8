#pragma once

#include <vector>

#include "yangian/fock.hpp"
#include "yangian/invariants.hpp"
#include "yangian/monodromy.hpp"
#include "yangian/report.hpp"
#include "yangian/scalar/rational_function.hpp"

namespace yangian {

// Eigenvalues mu_a(u) of the diagonal cleared-normalised monodromy elements on the reference state.
struct VacuumEigenvalues {
  std::vector<RationalFunction> mu;

  [[nodiscard]] int n() const { return static_cast<int>(mu.size()); }
  [[nodiscard]] const RationalFunction& alpha() const;  // gl(2) only
  [[nodiscard]] const RationalFunction& delta() const;  // gl(2) only

  friend VacuumEigenvalues operator*(const VacuumEigenvalues& a, const VacuumEigenvalues& b);
  friend bool operator==(const VacuumEigenvalues&, const VacuumEigenvalues&) = default;
};

// Q(u) = prod (u - u_k).
class QFunction {
 public:
  QFunction() = default;
  explicit QFunction(std::vector<Rational> roots);

  [[nodiscard]] const std::vector<Rational>& roots() const { return roots_; }
  [[nodiscard]] const Polynomial& polynomial() const { return poly_; }
  [[nodiscard]] int degree() const { return static_cast<int>(roots_.size()); }
  [[nodiscard]] Rational operator()(const Rational& u) const { return poly_(u); }

  friend QFunction operator*(const QFunction& a, const QFunction& b);
  friend bool operator==(const QFunction& a, const QFunction& b) { return a.poly_ == b.poly_; }

 private:
  std::vector<Rational> roots_;  // ascending
  Polynomial poly_ = Polynomial(1);
};

// mu_a(u) = prod_i (u - v_i + xi_i^(a)) / (u - v_i); symmetric sites have xi = (s,0,...,0),
// conjugate sites xi = (0,...,0,-s).
VacuumEigenvalues vacuum_eigenvalues(const MonodromySpec& spec);

// 1 = alpha Q(u-1)/Q(u), 1 = delta Q(u+1)/Q(u), 1 = alpha(u) delta(u-1), Q(u)/Q(u+1) = delta(u).
// Samples on a pole are moved to the next regular point.
CheckReport check_functional_relations_gl2(const VacuumEigenvalues& ev, const QFunction& q,
                                           std::vector<Rational> samples = {});

// The nested relations, the telescoped mu product and the per-level Q ratios.
CheckReport check_functional_relations_gln(const std::vector<RationalFunction>& mu, const std::vector<QFunction>& qs,
                                           std::vector<Rational> samples = {});

// Monic Q of least degree <= bound with Q(u) = ratio(u) Q(u+1); throws SolveError when no such
// Q exists, when its solution space is not one-dimensional, or when it has non-rational roots.
QFunction solve_q(const RationalFunction& ratio, int degree_bound);

// Q_k from Q_k(u)/Q_k(u+1) = prod_{a>k} mu_a(u - a + k + 1), level by level.
std::vector<QFunction> solve_q_levels(const std::vector<RationalFunction>& mu, int degree_bound);

// Catalogued gl(2) string roots of a sample invariant, in the labelling order of the strings.
std::vector<Rational> catalogue_string_roots(const InvariantSpec& spec);

struct BetheConstruction {
  StateVector state;
  std::vector<Rational> singular_roots;  // roots that coincide with an inhomogeneity
  std::vector<int> singular_orders;      // vanishing order removed at each singular root
};

// B(u_1)...B(u_P)|Omega> with cleared B(u) = P_12(u). Regular roots are inserted first; each
// singular root is applied with symbolic u and replaced by the leading Taylor coefficient at
// the root, which removes the zero of the cleared normalisation.
BetheConstruction bethe_construction(const MonodromySpec& spec, const std::vector<Rational>& roots);
StateVector bethe_vector(const MonodromySpec& spec, const std::vector<Rational>& roots);

// Both terms alpha(u_k) Q(u_k - 1) and delta(u_k) Q(u_k + 1) at each root. The report carries
// "regularity", "summed" and "degenerate" entries.
CheckReport check_bethe_equations(const VacuumEigenvalues& ev, const std::vector<Rational>& roots);

struct WaveFunctionInput {
  std::vector<Rational> w;
  std::vector<Rational> u;
  std::vector<int> x;  // 1-based, strictly increasing
};

// Inhomogeneous coordinate Bethe wave function summed over root permutations.
Rational wave_function(const WaveFunctionInput& inp);

// Two-site lowering-operator expansion for the line invariant with label s: the insertion
// coefficients against binomial(s, m), the full product, and the ordered replacement.
CheckReport line_lowering_identity(int s);

}  // namespace yangian
