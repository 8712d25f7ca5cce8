#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "yangian/scalar/rational_function.hpp"

namespace yangian {

// Multivariate truncated Laurent series with coefficients rational in z.
//
// Exactness window: a coefficient with exponent tuple e is known exactly iff
// e[v] <= truncation(v) for every variable v. Every unknown term violates at
// least one bound. valuation(v) is a lower bound on the exponent of v over all
// terms of the underlying exact series (kNegInf when there is none).
class LaurentSeries {
 public:
  using Exponents = std::vector<int>;
  static constexpr int kInf = INT_MAX;
  static constexpr int kNegInf = INT_MIN;

  LaurentSeries() = default;
  explicit LaurentSeries(std::vector<std::string> variables);

  // Single exact term c * prod v^e[v].
  static LaurentSeries monomial(std::vector<std::string> variables, Exponents exponents, RationalFunction c);

  [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
  [[nodiscard]] std::size_t index_of(const std::string& var) const;
  [[nodiscard]] const std::map<Exponents, RationalFunction>& terms() const { return terms_; }
  [[nodiscard]] int truncation(std::size_t v) const { return trunc_[v]; }
  [[nodiscard]] int valuation(std::size_t v) const { return low_[v]; }
  [[nodiscard]] int known_valuation(std::size_t v) const;  // kInf when no terms are stored
  [[nodiscard]] bool is_exact() const;
  [[nodiscard]] bool in_window(const Exponents& e) const;

  void set_truncation(std::size_t v, int t);
  void set_valuation(std::size_t v, int low);
  // Adds c to the coefficient of e; e must lie inside the window.
  void add_term(const Exponents& e, const RationalFunction& c);

  // Coefficient of the full exponent tuple; throws TruncationError outside the window.
  [[nodiscard]] RationalFunction extract(const Exponents& e) const;
  // Fixes the listed variables and returns the series in the remaining ones.
  [[nodiscard]] LaurentSeries extract_partial(const std::map<std::string, int>& fixed) const;
  // Residue (coefficient of v^-1) in every listed variable.
  [[nodiscard]] LaurentSeries residue(const std::vector<std::string>& vars) const;

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

 private:
  void check_compatible(const LaurentSeries& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, RationalFunction> terms_;
  std::vector<int> trunc_;
  std::vector<int> low_;
};

// exp(-c * x) = sum_{m <= order} (-1)^m c^m x^m / m!, exact up to c^order.
// The marker variable x records the power of the bilinear that multiplies c.
LaurentSeries exp_bilinear(const std::vector<std::string>& variables, const std::string& c, const std::string& x,
                           int order);

}  // namespace yangian
