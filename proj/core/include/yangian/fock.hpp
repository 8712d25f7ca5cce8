#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "yangian/error.hpp"
#include "yangian/scalar/polynomial.hpp"
#include "yangian/scalar/rational.hpp"
#include "yangian/scalar/rational_function.hpp"

namespace yangian {

enum class RepKind { Symmetric, Conjugate };

// Totally symmetric rep (s,0,...,0) built from a-oscillators, or its conjugate
// (0,...,0,-s) built from b-oscillators.
struct RepLabel {
  RepKind kind = RepKind::Symmetric;
  int s = 0;
  int n = 2;

  static RepLabel symmetric(int s, int n) { return {RepKind::Symmetric, s, n}; }
  static RepLabel conjugate(int s, int n) { return {RepKind::Conjugate, s, n}; }

  [[nodiscard]] bool is_conjugate() const { return kind == RepKind::Conjugate; }
  [[nodiscard]] long dimension() const;
  [[nodiscard]] std::string str() const;  // "s=2" or "sbar=2"
  void validate() const;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
  friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

// Oscillator occupation numbers of one site, flavours 1..n stored at 0..n-1.
struct FockState {
  std::vector<int> occupations;

  [[nodiscard]] int total() const;
  // Squared norm of the unnormalised monomial: prod m_a!.
  [[nodiscard]] Rational norm_squared() const;

  friend bool operator==(const FockState&, const FockState&) = default;
  friend auto operator<=>(const FockState&, const FockState&) = default;
};

// All occupation vectors of a rep, in lexicographically descending order.
std::vector<FockState> basis(const RepLabel& rep);

// Flattened occupations of every site, site-major.
using BasisKey = std::vector<std::uint8_t>;

std::vector<BasisKey> tensor_basis(std::span<const RepLabel> sites);
BasisKey make_key(std::span<const FockState> states);
std::vector<FockState> split_key(const BasisKey& key, std::size_t site_count, int n);
Rational key_norm_squared(const BasisKey& key);

// Sparse linear combination of oscillator monomials over a tensor product.
template <class C>
class BasicStateVector {
 public:
  using Coefficient = C;
  using Terms = std::map<BasisKey, C>;

  BasicStateVector() = default;
  explicit BasicStateVector(std::vector<RepLabel> sites) : sites_(std::move(sites)) { validate_sites(); }

  [[nodiscard]] const std::vector<RepLabel>& sites() const { return sites_; }
  [[nodiscard]] int rank() const { return sites_.empty() ? 0 : sites_.front().n; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] C coefficient(const BasisKey& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? C() : it->second;
  }

  void add(const BasisKey& key, const C& c) {
    if (yangian::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (yangian::is_zero(it->second)) terms_.erase(it);
    }
  }

  void check_key(const BasisKey& key) const {
    if (key.size() != sites_.size() * static_cast<std::size_t>(rank())) {
      throw IncompatibleError("basis key length does not match the sites");
    }
    const auto n = static_cast<std::size_t>(rank());
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      int total = 0;
      for (std::size_t a = 0; a < n; ++a) total += key[i * n + a];
      if (total != sites_[i].s) throw IncompatibleError("occupancy mismatch at site " + std::to_string(i + 1));
    }
  }

  BasicStateVector& operator+=(const BasicStateVector& o) {
    check_same_space(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  BasicStateVector& operator-=(const BasicStateVector& o) {
    check_same_space(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  BasicStateVector& operator*=(const C& s) {
    if (yangian::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    std::erase_if(terms_, [](const auto& kv) { return yangian::is_zero(kv.second); });
    return *this;
  }

  friend BasicStateVector operator+(BasicStateVector a, const BasicStateVector& b) { return a += b; }
  friend BasicStateVector operator-(BasicStateVector a, const BasicStateVector& b) { return a -= b; }
  friend BasicStateVector operator*(BasicStateVector a, const C& s) { return a *= s; }
  friend BasicStateVector operator*(const C& s, BasicStateVector a) { return a *= s; }
  friend bool operator==(const BasicStateVector&, const BasicStateVector&) = default;

  // Applies f to every coefficient, producing a vector over another ring.
  template <class D, class F>
  [[nodiscard]] BasicStateVector<D> map(F&& f) const {
    BasicStateVector<D> out(sites_);
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    if (terms_.empty()) return "0";
    bool first = true;
    const auto n = static_cast<std::size_t>(rank());
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coefficient_str(c) << ")|";
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i > 0 && i % n == 0) os << ";";
        else if (i > 0) os << ",";
        os << static_cast<int>(k[i]);
      }
      os << ">";
    }
    return os.str();
  }

  void check_same_space(const BasicStateVector& o) const {
    if (sites_ != o.sites_) throw IncompatibleError("state vectors live on different tensor products");
  }

 private:
  static std::string coefficient_str(const C& c) {
    if constexpr (requires { c.str(); }) {
      return c.str();
    } else {
      std::ostringstream os;
      os << c;
      return os.str();
    }
  }

  void validate_sites() const {
    for (const auto& r : sites_) {
      r.validate();
      if (r.n != sites_.front().n) throw IncompatibleError("all sites must share the algebra rank");
    }
  }

  std::vector<RepLabel> sites_;
  Terms terms_;
};

using StateVector = BasicStateVector<Rational>;
using PolyStateVector = BasicStateVector<Polynomial>;
using RationalFunctionStateVector = BasicStateVector<RationalFunction>;

// Creation operator of flavour a (1-based) times annihilation of flavour b on one site:
// maps the coefficient of m to m_b times the coefficient of m - e_b + e_a.
template <class C>
BasicStateVector<C> apply_bilinear(const BasicStateVector<C>& v, std::size_t site, int a, int b) {
  if (site >= v.sites().size()) throw IncompatibleError("site index out of range");
  const int n = v.rank();
  if (a < 1 || a > n || b < 1 || b > n) throw IncompatibleError("oscillator flavour out of range");
  const std::size_t ia = site * static_cast<std::size_t>(n) + static_cast<std::size_t>(a - 1);
  const std::size_t ib = site * static_cast<std::size_t>(n) + static_cast<std::size_t>(b - 1);
  BasicStateVector<C> out(v.sites());
  for (const auto& [k, c] : v.terms()) {
    const int mb = k[ib];
    if (mb == 0) continue;
    BasisKey nk = k;
    --nk[ib];
    ++nk[ia];
    out.add(nk, c * C(Rational(mb)));
  }
  return out;
}

// gl(n) generator J_ab on a site: a-bar_a a_b (symmetric) or -b-bar_b b_a (conjugate).
template <class C>
BasicStateVector<C> apply_generator(const BasicStateVector<C>& v, std::size_t site, int a, int b) {
  if (site >= v.sites().size()) throw IncompatibleError("site index out of range");
  if (!v.sites()[site].is_conjugate()) return apply_bilinear(v, site, a, b);
  auto out = apply_bilinear(v, site, b, a);
  out *= C(Rational(-1));
  return out;
}

StateVector highest_weight_state(const RepLabel& rep);
// Tensor product of highest-weight states.
StateVector reference_state(std::vector<RepLabel> sites);
StateVector basis_vector(std::vector<RepLabel> sites, const BasisKey& key);
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Coefficient of the orthonormalised basis element divided by its norm, i.e.
// the monomial coefficient; throws on an occupancy mismatch.
Rational pairing(std::span<const FockState> bra, const StateVector& v);

// Fock inner product with the monomial norms prod m!.
Rational inner_product(const StateVector& a, const StateVector& b);

// lambda with a = lambda * b, if it exists and b is nonzero.
template <class C>
std::optional<C> projective_ratio(const BasicStateVector<C>& a, const BasicStateVector<C>& b) {
  if (a.sites() != b.sites() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const auto& [k0, c0] = *b.terms().begin();
  const C lambda = a.coefficient(k0) / c0;
  if (yangian::is_zero(lambda)) return std::nullopt;
  for (const auto& [k, c] : b.terms()) {
    if (a.coefficient(k) != lambda * c) return std::nullopt;
  }
  return lambda;
}

// Evaluates polynomial coefficients at a point.
StateVector evaluate(const PolyStateVector& v, const Rational& u);
StateVector evaluate(const RationalFunctionStateVector& v, const Rational& z);
PolyStateVector to_polynomial(const StateVector& v);

}  // namespace yangian
