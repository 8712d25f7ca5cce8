#pragma once

#include <string>

#include "yangian/scalar/polynomial.hpp"

namespace yangian {

// Reduced quotient num/den with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Rational constant) : RationalFunction(Polynomial(std::move(constant))) {}  // NOLINT
  template <std::integral I>
  RationalFunction(I constant) : RationalFunction(Rational(constant)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
  [[nodiscard]] bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  [[nodiscard]] bool has_pole_at(const Rational& x) const { return den_(x).is_zero(); }
  // Throws PoleError at a pole.
  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] RationalFunction shifted(const Rational& c) const;  // r(u + c)
  [[nodiscard]] RationalFunction inverse() const;
  // Order of vanishing at x: positive for zeros, negative for poles.
  [[nodiscard]] int order_at(const Rational& x) const;
  [[nodiscard]] std::string str(const std::string& var = "u") const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& r, int exponent);

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

}  // namespace yangian
