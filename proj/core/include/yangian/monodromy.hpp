#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangian/fock.hpp"
#include "yangian/lax.hpp"
#include "yangian/report.hpp"
#include "yangian/scalar/matrix.hpp"

namespace yangian {

struct SiteSpec {
  RepLabel rep;
  Rational v;

  friend bool operator==(const SiteSpec&, const SiteSpec&) = default;
};

// Ordered chain of Lax operators sharing one fundamental auxiliary space; site 1 is leftmost.
struct MonodromySpec {
  int n = 2;
  std::vector<SiteSpec> sites;

  [[nodiscard]] std::size_t length() const { return sites.size(); }
  [[nodiscard]] std::size_t conjugate_count() const;  // K
  [[nodiscard]] std::vector<RepLabel> reps() const;
  // prod_i (u - v_i)
  [[nodiscard]] Polynomial denominator() const;
  [[nodiscard]] Rational denominator(const Rational& u) const;
  [[nodiscard]] std::string str() const;
  void validate() const;

  friend bool operator==(const MonodromySpec&, const MonodromySpec&) = default;
};

// One Lax factor of a chain: the tensor slot it acts on and its representation.
struct ChainFactor {
  std::size_t slot;
  RepLabel rep;
};

// Computes (sum over contracted indices of) L^1_{a c1} ... L^m_{c b} v for every a at once.
// args[i] is the Lax argument of factors[i]; factors[0] is leftmost.
template <class C>
std::vector<BasicStateVector<C>> chain_column(const std::vector<ChainFactor>& factors, const std::vector<C>& args,
                                              int n, int b, const BasicStateVector<C>& v) {
  std::vector<BasicStateVector<C>> col(static_cast<std::size_t>(n), BasicStateVector<C>(v.sites()));
  col[static_cast<std::size_t>(b - 1)] = v;
  for (std::size_t f = factors.size(); f-- > 0;) {
    std::vector<BasicStateVector<C>> next(static_cast<std::size_t>(n), BasicStateVector<C>(v.sites()));
    for (int y = 1; y <= n; ++y) {
      const auto& in = col[static_cast<std::size_t>(y - 1)];
      if (in.is_zero()) continue;
      for (int x = 1; x <= n; ++x) {
        next[static_cast<std::size_t>(x - 1)] += apply_lax_entry(factors[f].rep, x, y, in, factors[f].slot, args[f]);
      }
    }
    col = std::move(next);
  }
  return col;
}

// Cleared P_ab(u) = prod(u - v_i) M_ab(u) with symbolic u.
PolyStateVector monodromy_element(const MonodromySpec& spec, int a, int b, const StateVector& v);
// P_ab(u) at a fixed u.
StateVector monodromy_element_at(const MonodromySpec& spec, int a, int b, const StateVector& v, const Rational& u);
// P_ab(u) v for all a, at a fixed u.
std::vector<StateVector> monodromy_column_at(const MonodromySpec& spec, int b, const StateVector& v,
                                             const Rational& u);
// Cleared transfer matrix sum_a P_aa(u) applied to v.
StateVector transfer_matrix_at(const MonodromySpec& spec, const StateVector& v, const Rational& u);
// Dense P_ab(u) on the full tensor product, index (a-1)*n + (b-1).
std::vector<DenseMatrix> monodromy_matrices(const MonodromySpec& spec, const Rational& u);

// M^{(r)}_ab v from the expansion M(u) = sum_r M^{(r)} u^{-r} at infinity.
StateVector apply_yangian_generator(const MonodromySpec& spec, int r, int a, int b, const StateVector& v);

// Default points L+2, L+3, ... skipping values in `avoid`, `count` of them.
std::vector<Rational> default_samples(std::size_t length, std::size_t count, const std::vector<Rational>& avoid);

CheckReport check_rtt(const MonodromySpec& spec, const std::vector<Rational>& u_samples,
                      const std::vector<Rational>& up_samples);

// M^(0) = delta, M^(1) and M^(2) against their oscillator forms, level-one commutators,
// and the adjoint action of M^(1) on P(u) at the given samples.
CheckReport check_yangian_generators(const MonodromySpec& spec, const std::vector<Rational>& u_samples);

// P_ab(u) Psi = delta_ab prod(u - v_i) Psi for all a, b at every sample, plus the
// transfer matrix eigenvalue n prod(u - v_i). Empty samples select the defaults.
CheckReport check_invariance(const MonodromySpec& spec, const StateVector& candidate,
                             std::vector<Rational> u_samples = {});

// O|m> = sum_rest c(m, rest) N(m) |rest>: the first K sites turned into symmetric inputs.
struct Intertwiner {
  std::vector<RepLabel> inputs;   // Symmetric(s_k) for k = 1..K
  std::vector<RepLabel> outputs;  // sites K+1..L
  std::map<BasisKey, StateVector> images;

  [[nodiscard]] StateVector apply(const StateVector& in) const;
  [[nodiscard]] DenseMatrix matrix() const;
};

Intertwiner make_intertwiner(const MonodromySpec& spec, std::size_t k, const StateVector& candidate);

// M_{K+1..L}(u) O = O M'(u) with M' built from Symmetric(s_k) at v_k + s_k - 1 + n in
// reversed order K..1, compared with f = 1 uncleared Lax operators.
CheckReport check_intertwiner(const MonodromySpec& spec, std::size_t k, const StateVector& candidate,
                              std::vector<Rational> u_samples = {});

}  // namespace yangian
