#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "yangian/scalar/rational.hpp"

namespace yangian {

// Dense univariate polynomial over the rationals, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial variable();
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial linear(const Rational& root);  // u - root
  static Polynomial from_roots(std::span<const Rational> roots);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  [[nodiscard]] Rational coefficient(int k) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] Polynomial shifted(const Rational& c) const;  // p(u + c)
  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial derivative() const;
  // Exponent of (u - x) dividing p; the zero polynomial reports -1.
  [[nodiscard]] int order_at(const Rational& x) const;
  // Rational roots with multiplicity, ascending; non-rational factors are left out.
  [[nodiscard]] std::vector<Rational> rational_roots() const;
  [[nodiscard]] std::string str(const std::string& var = "u") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Euclidean division; throws on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& p, int exponent);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

}  // namespace yangian
