#pragma once

#include <functional>
#include <vector>

#include "yangian/fock.hpp"
#include "yangian/report.hpp"
#include "yangian/scalar/gamma.hpp"
#include "yangian/scalar/matrix.hpp"

namespace yangian {

// Materialises a linear map on the tensor product of `sites` in its monomial basis.
// Column j holds the image of tensor_basis(sites)[j].
DenseMatrix operator_matrix(const std::vector<RepLabel>& sites,
                            const std::function<StateVector(const StateVector&)>& op);

enum class Orientation { FundamentalFirst, QuantumFirst };

// Shift relating the quantum-first Lax operator to the fundamental-first one:
// -s+1 for symmetric, n+s-1 for conjugate sites.
Rational orientation_shift(const RepLabel& rep);
// Crossing parameter: s-1 for symmetric, -s+1-n for conjugate sites.
Rational crossing_parameter(const RepLabel& rep);

// Lax operator with cleared denominator, entry (a,b) = x delta_ab + J_ba.
// The argument x is u - v (fundamental first) or v - u + shift (quantum first).
struct LaxOperator {
  RepLabel rep;
  Rational v;
  Orientation orientation = Orientation::FundamentalFirst;

  [[nodiscard]] Polynomial argument() const;
  [[nodiscard]] Rational argument(const Rational& u) const { return argument()(u); }
};

// Entry (a,b) of the cleared Lax operator at argument x, acting on one site.
template <class C>
BasicStateVector<C> apply_lax_entry(const RepLabel& rep, int a, int b, const BasicStateVector<C>& v,
                                    std::size_t site, const C& x) {
  if (site >= v.sites().size() || v.sites()[site] != rep) {
    throw IncompatibleError("Lax operator representation does not match the site");
  }
  auto out = apply_generator(v, site, b, a);
  if (a == b) out += v * x;
  return out;
}

// Entry (a,b) with polynomial dependence on u.
PolyStateVector apply_lax(const LaxOperator& lax, int a, int b, const StateVector& v, std::size_t site);
// Entry (a,b) at a fixed spectral parameter.
StateVector apply_lax_at(const LaxOperator& lax, int a, int b, const StateVector& v, std::size_t site,
                         const Rational& u);

// Cleared R_{box,rep}(x) on C^n (x) V_rep, index a * dim + alpha.
DenseMatrix lax_matrix(const RepLabel& rep, const Rational& x);

// Closed-form unitarity scalar of the f = 1 operators:
// (u(u+s-1)-s)/(u(u+s-1)) for symmetric sites, 1 for conjugate sites.
Rational unitarity_scalar(const RepLabel& rep, const Rational& u);

CheckReport check_unitarity(const RepLabel& rep, const std::vector<Rational>& samples);
CheckReport check_crossing(const RepLabel& rep, const std::vector<Rational>& samples);
CheckReport lax_shift_symmetry(const RepLabel& rep, const std::vector<Rational>& samples);
// Diagonal sum of the cleared Lax entries equals n x + sum_a J_aa.
CheckReport check_lax_trace(const RepLabel& rep, const std::vector<Rational>& samples);

// Hop_k on sites (i, j): exchanges k oscillators between two symmetric sites.
template <class C>
BasicStateVector<C> apply_hop(const BasicStateVector<C>& v, std::size_t i, std::size_t j, int k);

// R_{s3 s4}(z) = sum_k e_k(z) Hop_k with e_k(z) = k!/prod_{j=1..k}(z-s3+j).
struct HoppingRMatrix {
  int s3 = 0;
  int s4 = 0;
  int n = 2;

  [[nodiscard]] int max_hops() const { return std::min(s3, s4); }
  [[nodiscard]] RationalFunction coefficient(int k) const;
  [[nodiscard]] Rational coefficient(int k, const Rational& z) const;  // PoleError at e_k poles
  // Applies R(z) to sites (i, j) of v; sites must be Symmetric(s3), Symmetric(s4).
  [[nodiscard]] StateVector apply(const StateVector& v, std::size_t i, std::size_t j, const Rational& z) const;
  [[nodiscard]] RationalFunctionStateVector apply(const StateVector& v, std::size_t i, std::size_t j) const;
  [[nodiscard]] DenseMatrix matrix(const Rational& z) const;
  [[nodiscard]] std::vector<RepLabel> sites() const;
};

HoppingRMatrix hopping_rmatrix(int s3, int s4, int n);

CheckReport check_ybe_hopping(int s3, int s4, int n, const std::vector<Rational>& u_samples,
                              const std::vector<Rational>& z_samples);

// Normalisation f_s(u) as a ratio of gamma functions.
HighFloat gamma_normalization(int s, int n, const HighFloat& u);
// Unitarity, conjugate unitarity and additivity of f_s at the given points.
CheckReport check_gamma_normalization(int n, int s, const std::vector<HighFloat>& samples,
                                      const HighFloat& tolerance);

// ---- template implementation ----

namespace detail {

// All occupation vectors with total k bounded componentwise by `bound`.
void bounded_compositions(const std::vector<int>& bound, int k, std::vector<std::vector<int>>& out);

}  // namespace detail

template <class C>
BasicStateVector<C> apply_hop(const BasicStateVector<C>& v, std::size_t i, std::size_t j, int k) {
  if (i >= v.sites().size() || j >= v.sites().size() || i == j) throw IncompatibleError("invalid hop sites");
  if (v.sites()[i].is_conjugate() || v.sites()[j].is_conjugate()) {
    throw IncompatibleError("hopping operators act on symmetric sites");
  }
  const auto n = static_cast<std::size_t>(v.rank());
  BasicStateVector<C> out(v.sites());
  for (const auto& [key, c] : v.terms()) {
    std::vector<int> mi(n);
    std::vector<int> mj(n);
    for (std::size_t a = 0; a < n; ++a) {
      mi[a] = key[i * n + a];
      mj[a] = key[j * n + a];
    }
    std::vector<std::vector<int>> betas;
    std::vector<std::vector<int>> alphas;
    detail::bounded_compositions(mi, k, betas);
    detail::bounded_compositions(mj, k, alphas);
    for (const auto& beta : betas) {
      for (const auto& alpha : alphas) {
        Rational w = 1;
        BasisKey nk = key;
        for (std::size_t a = 0; a < n; ++a) {
          w *= binomial(mi[a], beta[a]) * binomial(mj[a], alpha[a]);
          nk[i * n + a] = static_cast<std::uint8_t>(mi[a] - beta[a] + alpha[a]);
          nk[j * n + a] = static_cast<std::uint8_t>(mj[a] - alpha[a] + beta[a]);
        }
        out.add(nk, c * C(w));
      }
    }
  }
  return out;
}

}  // namespace yangian
