#include "yangian/scalar/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "yangian/error.hpp"

namespace yangian {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1000000;

// Prime factorisation by trial division; a large cofactor is kept as one factor.
std::map<mpz_class, int> factorize(mpz_class n) {
  std::map<mpz_class, int> factors;
  if (n < 0) n = -n;
  for (unsigned long p = 2; p <= kTrialDivisionLimit && mpz_class(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++factors[mpz_class(p)];
      n /= p;
    }
  }
  if (n > 1) ++factors[n];
  return factors;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t count = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Synthetic division by (u - r); assumes r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    carry = c[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw Error("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(std::vector<Rational>{-root, 1}); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial p(1);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // Horner in the shifted variable: p(u + c) = (...(a_d (u+c) + a_{d-1})(u+c) ...).
  Polynomial acc;
  const Polynomial step(std::vector<Rational>{c, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

int Polynomial::order_at(const Rational& x) const {
  if (is_zero()) return -1;
  int order = 0;
  std::vector<Rational> c = c_;
  while (c.size() > 1) {
    Rational value = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * x + *it;
    if (!value.is_zero()) break;
    c = deflate(c, x);
    ++order;
  }
  return order;
}

std::vector<Rational> Polynomial::rational_roots() const {
  if (is_zero()) throw Error("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  std::vector<Rational> c = c_;
  while (c.size() > 1 && c.front().is_zero()) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  if (c.size() > 1) {
    mpz_class lcm = 1;
    for (const auto& a : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.denominator().get_mpz_t());
    const mpz_class a0 = (c.front() * Rational(lcm, mpz_class(1))).numerator();
    const mpz_class ad = (c.back() * Rational(lcm, mpz_class(1))).numerator();
    const auto ps = divisors(a0);
    const auto qs = divisors(ad);
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int sgn : {1, -1}) {
          const Rational r(mpz_class(sgn * p), q);
          if (r.denominator() != q) continue;  // visited through a smaller q
          for (;;) {
            if (c.size() <= 1) break;
            Rational value = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * r + *it;
            if (!value.is_zero()) break;
            c = deflate(c, r);
            roots.push_back(r);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= s;
  return *this;
}

Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PoleError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational lead_inv = b.leading().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    const Rational factor = rem[top] * lead_inv;
    quo[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= factor * b.c_[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow(const Polynomial& p, int exponent) {
  if (exponent < 0) throw Error("negative polynomial power");
  Polynomial result(1);
  for (int k = 0; k < exponent; ++k) result *= p;
  return result;
}

}  // namespace yangian
