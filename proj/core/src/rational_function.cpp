#include "yangian/scalar/rational_function.hpp"

#include "yangian/error.hpp"

namespace yangian {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw PoleError("rational function evaluated at its pole " + x.str());
  return num_(x) / d;
}

RationalFunction RationalFunction::shifted(const Rational& c) const {
  return RationalFunction(num_.shifted(c), den_.shifted(c));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw PoleError("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

int RationalFunction::order_at(const Rational& x) const {
  if (is_zero()) throw Error("order of the zero rational function");
  return num_.order_at(x) - den_.order_at(x);
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction pow(const RationalFunction& r, int exponent) {
  if (exponent < 0) return pow(r.inverse(), -exponent);
  RationalFunction result(1);
  for (int k = 0; k < exponent; ++k) result *= r;
  return result;
}

}  // namespace yangian
