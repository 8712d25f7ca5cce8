#include "yangian/bethe.hpp"

#include <algorithm>
#include <numeric>

#include "yangian/scalar/matrix.hpp"

namespace yangian {

namespace {

std::vector<Rational> default_relation_samples() {
  return {Rational(2, 3), Rational(9, 7), Rational(-11, 5), Rational(17, 4)};
}

// Moves u forward in steps of 1/7 until r is regular there.
Rational regular_sample(const RationalFunction& r, Rational u) {
  for (int i = 0; i < 1000 && r.has_pole_at(u); ++i) u += Rational(1, 7);
  if (r.has_pole_at(u)) throw PoleError("no regular sample near " + u.str());
  return u;
}

// Adds an exact identity verdict for lhs == 1 plus one verdict per sample.
void add_unit_relation(CheckReport& report, const std::string& name, const RationalFunction& expr,
                       const std::vector<Rational>& samples) {
  report.add(name + " identity", expr == RationalFunction(1), expr == RationalFunction(1) ? "" : "reduced form " + expr.str());
  for (const auto& s : samples) {
    const Rational u = regular_sample(expr, s);
    const Rational value = expr(u);
    report.add(name + " at u=" + u.str(), value == Rational(1), "value " + value.str());
  }
}

RationalFunction q_ratio(const QFunction& q, int shift) {
  return RationalFunction(q.polynomial().shifted(Rational(shift)), q.polynomial());
}

// Multiplies each basis coefficient by f(occupation at index).
template <class F>
StateVector scale_by_occupation(const StateVector& v, std::size_t index, F f) {
  StateVector out(v.sites());
  for (const auto& [k, c] : v.terms()) out.add(k, c * f(k[index]));
  return out;
}

}  // namespace

const RationalFunction& VacuumEigenvalues::alpha() const {
  if (mu.size() != 2) throw IncompatibleError("alpha is defined for gl(2) only");
  return mu[0];
}

const RationalFunction& VacuumEigenvalues::delta() const {
  if (mu.size() != 2) throw IncompatibleError("delta is defined for gl(2) only");
  return mu[1];
}

VacuumEigenvalues operator*(const VacuumEigenvalues& a, const VacuumEigenvalues& b) {
  if (a.mu.size() != b.mu.size()) throw IncompatibleError("eigenvalue rank mismatch");
  VacuumEigenvalues out = a;
  for (std::size_t i = 0; i < out.mu.size(); ++i) out.mu[i] *= b.mu[i];
  return out;
}

QFunction::QFunction(std::vector<Rational> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  poly_ = Polynomial::from_roots(roots_);
}

QFunction operator*(const QFunction& a, const QFunction& b) {
  std::vector<Rational> roots = a.roots_;
  roots.insert(roots.end(), b.roots_.begin(), b.roots_.end());
  return QFunction(std::move(roots));
}

VacuumEigenvalues vacuum_eigenvalues(const MonodromySpec& spec) {
  spec.validate();
  VacuumEigenvalues ev{std::vector<RationalFunction>(static_cast<std::size_t>(spec.n), RationalFunction(1))};
  for (const auto& site : spec.sites) {
    for (int a = 1; a <= spec.n; ++a) {
      Rational xi = 0;
      if (!site.rep.is_conjugate() && a == 1) xi = site.rep.s;
      if (site.rep.is_conjugate() && a == spec.n) xi = -site.rep.s;
      ev.mu[static_cast<std::size_t>(a - 1)] *= RationalFunction(Polynomial::linear(site.v - xi), Polynomial::linear(site.v));
    }
  }
  return ev;
}

CheckReport check_functional_relations_gl2(const VacuumEigenvalues& ev, const QFunction& q,
                                           std::vector<Rational> samples) {
  if (samples.empty()) samples = default_relation_samples();
  CheckReport report("gl(2) functional relations, Q degree " + std::to_string(q.degree()));
  const RationalFunction& alpha = ev.alpha();
  const RationalFunction& delta = ev.delta();
  add_unit_relation(report, "alpha relation", alpha * q_ratio(q, -1), samples);
  add_unit_relation(report, "delta relation", delta * q_ratio(q, 1), samples);
  add_unit_relation(report, "decoupled alpha-delta", alpha * delta.shifted(Rational(-1)), samples);
  add_unit_relation(report, "q ratio", q_ratio(q, 1) * delta, samples);
  return report;
}

CheckReport check_functional_relations_gln(const std::vector<RationalFunction>& mu, const std::vector<QFunction>& qs,
                                           std::vector<Rational> samples) {
  const std::size_t n = mu.size();
  if (n < 1 || qs.size() + 1 != n) throw IncompatibleError("need n-1 Q-functions for n eigenvalues");
  if (samples.empty()) samples = default_relation_samples();
  CheckReport report("gl(" + std::to_string(n) + ") functional relations");
  for (std::size_t a = 1; a <= n; ++a) {
    RationalFunction expr = mu[a - 1];
    if (a > 1) expr *= q_ratio(qs[a - 2], 1);
    if (a < n) expr *= q_ratio(qs[a - 1], -1);
    add_unit_relation(report, "level " + std::to_string(a) + " relation", expr, samples);
  }
  RationalFunction product = 1;
  for (std::size_t a = 1; a <= n; ++a) product *= mu[a - 1].shifted(Rational(1) - Rational(static_cast<long>(a)));
  add_unit_relation(report, "telescoped mu product", product, samples);
  for (std::size_t k = 1; k < n; ++k) {
    RationalFunction expr = q_ratio(qs[k - 1], 1);
    for (std::size_t a = k + 1; a <= n; ++a) {
      expr *= mu[a - 1].shifted(Rational(static_cast<long>(k) + 1) - Rational(static_cast<long>(a)));
    }
    add_unit_relation(report, "q ratio level " + std::to_string(k), expr, samples);
  }
  return report;
}

QFunction solve_q(const RationalFunction& ratio, int degree_bound) {
  if (ratio.is_zero()) throw SolveError("Q-ratio must be nonzero");
  const Polynomial& num = ratio.num();
  const Polynomial& den = ratio.den();
  const int base = std::max(num.degree(), den.degree());
  for (int d = 0; d <= degree_bound; ++d) {
    // den(u) Q(u) - num(u) Q(u+1) = 0 over the coefficients q_0..q_d.
    DenseMatrix m(static_cast<std::size_t>(base + d + 1), static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) {
      const Polynomial uj = Polynomial::monomial(1, j);
      const Polynomial col = den * uj - num * uj.shifted(1);
      for (int r = 0; r <= col.degree(); ++r) m(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) = col.coefficient(r);
    }
    const auto basis = m.nullspace();
    if (basis.empty()) continue;
    if (basis.size() > 1) {
      throw SolveError("Q-function not unique at degree " + std::to_string(d) + " (" + std::to_string(basis.size()) +
                       "-dimensional solution space)");
    }
    const Polynomial q = Polynomial(basis.front()).monic();
    if (q.degree() != d) throw SolveError("degenerate Q-function solution at degree " + std::to_string(d));
    auto roots = q.rational_roots();
    if (static_cast<int>(roots.size()) != d) {
      throw SolveError("Q-function " + q.str() + " has non-rational roots");
    }
    QFunction out(std::move(roots));
    if (out.polynomial() != q) throw SolveError("root deflation of " + q.str() + " failed");
    return out;
  }
  throw SolveError("no polynomial Q of degree <= " + std::to_string(degree_bound) + " solves Q(u) = (" + ratio.str() +
                   ") Q(u+1)");
}

std::vector<QFunction> solve_q_levels(const std::vector<RationalFunction>& mu, int degree_bound) {
  const std::size_t n = mu.size();
  std::vector<QFunction> qs;
  for (std::size_t k = 1; k < n; ++k) {
    RationalFunction ratio = 1;
    for (std::size_t a = k + 1; a <= n; ++a) {
      ratio *= mu[a - 1].shifted(Rational(static_cast<long>(k) + 1) - Rational(static_cast<long>(a)));
    }
    qs.push_back(solve_q(ratio, degree_bound));
  }
  return qs;
}

std::vector<Rational> catalogue_string_roots(const InvariantSpec& spec) {
  spec.validate();
  if (spec.n != 2) throw ConstraintError("string roots are catalogued for gl(2)");
  const auto string = [](const Rational& end, int length, int step) {
    std::vector<Rational> r;
    for (int k = 1; k <= length; ++k) r.push_back(end + Rational(step * k));
    return r;
  };
  const auto& s = spec.s;
  switch (spec.family) {
    case Family::TwoOne:
      return string(spec.base, s[0], -1);
    case Family::ThreeOne:
      return string(spec.base, s[0] + s[1], 1);
    case Family::ThreeTwo:
      return string(spec.base, s[0] + s[1], -1);
    case Family::FourTwo: {
      auto r = string(spec.base + spec.z, s[0], -1);
      const auto r4 = string(spec.base, s[1], -1);
      r.insert(r.end(), r4.begin(), r4.end());
      return r;
    }
  }
  throw Error("unknown family");
}

BetheConstruction bethe_construction(const MonodromySpec& spec, const std::vector<Rational>& roots) {
  spec.validate();
  if (spec.n != 2) throw ConstraintError("Bethe vectors are built for gl(2) only");
  std::vector<Rational> regular;
  BetheConstruction out{reference_state(spec.reps()), {}, {}};
  for (const auto& r : roots) {
    const bool singular = std::any_of(spec.sites.begin(), spec.sites.end(), [&](const SiteSpec& s) { return s.v == r; });
    (singular ? out.singular_roots : regular).push_back(r);
  }
  for (const auto& r : regular) out.state = monodromy_element_at(spec, 1, 2, out.state, r);
  for (const auto& r : out.singular_roots) {
    const PolyStateVector p = monodromy_element(spec, 1, 2, out.state);
    int order = -1;
    for (const auto& [k, c] : p.terms()) {
      const int o = c.order_at(r);
      if (order < 0 || o < order) order = o;
    }
    out.singular_orders.push_back(order);
    StateVector next(out.state.sites());
    if (order >= 0) {
      const Polynomial factor = pow(Polynomial::linear(r), order);
      for (const auto& [k, c] : p.terms()) next.add(k, Polynomial::divmod(c, factor).first(r));
    }
    out.state = std::move(next);
  }
  return out;
}

StateVector bethe_vector(const MonodromySpec& spec, const std::vector<Rational>& roots) {
  return bethe_construction(spec, roots).state;
}

CheckReport check_bethe_equations(const VacuumEigenvalues& ev, const std::vector<Rational>& roots) {
  CheckReport report("Bethe equations, " + std::to_string(roots.size()) + " roots");
  const QFunction q(roots);
  bool regular = true;
  bool summed = true;
  bool degenerate = true;
  std::string reg_witness;
  std::string sum_witness;
  std::string deg_witness;
  for (const auto& u : roots) {
    if (ev.alpha().has_pole_at(u) || ev.delta().has_pole_at(u)) {
      regular = false;
      if (reg_witness.empty()) reg_witness = "eigenvalue pole at root " + u.str();
      continue;
    }
    const Rational t1 = ev.alpha()(u) * q(u - 1);
    const Rational t2 = ev.delta()(u) * q(u + 1);
    if (!(t1 + t2).is_zero()) {
      summed = false;
      if (sum_witness.empty()) sum_witness = "root " + u.str() + " sum " + (t1 + t2).str();
    }
    if (!t1.is_zero() || !t2.is_zero()) {
      degenerate = false;
      if (deg_witness.empty()) deg_witness = "root " + u.str() + " terms " + t1.str() + ", " + t2.str();
    }
  }
  report.add("regularity", regular, reg_witness);
  report.add("summed", regular && summed, sum_witness);
  report.add("degenerate", regular && degenerate, deg_witness);
  return report;
}

Rational wave_function(const WaveFunctionInput& inp) {
  const std::size_t length = inp.w.size();
  const std::size_t p = inp.u.size();
  if (inp.x.size() != p) throw IncompatibleError("need one magnon position per Bethe root");
  for (std::size_t k = 0; k < p; ++k) {
    if (inp.x[k] < 1 || static_cast<std::size_t>(inp.x[k]) > length || (k > 0 && inp.x[k] <= inp.x[k - 1])) {
      throw IncompatibleError("magnon positions must be strictly increasing in 1..L");
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (inp.u[k] == inp.u[l]) throw IncompatibleError("coincident Bethe roots " + inp.u[k].str());
    }
  }
  const auto phi = [&](int x, const Rational& u) {
    Rational r = 1;
    for (int j = 1; j <= static_cast<int>(length); ++j) {
      const Rational& wj = inp.w[static_cast<std::size_t>(j - 1)];
      if (j < x) r *= u - wj + 1;
      if (j > x) r *= u - wj;
    }
    return r;
  };
  std::vector<std::size_t> rho(p);
  std::iota(rho.begin(), rho.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t l = k + 1; l < p; ++l) {
        const Rational d = inp.u[rho[k]] - inp.u[rho[l]];
        term *= (d + 1) / d;
      }
      term *= phi(inp.x[k], inp.u[rho[k]]);
    }
    total += term;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return total;
}

CheckReport line_lowering_identity(int s) {
  if (s < 0) throw ConstraintError("label must be non-negative");
  CheckReport report("two-site lowering identity s=" + std::to_string(s));

  // Insertion coefficients sum_{j_1<...<j_m} prod_k (2 j_k - s + m - k) / m! against binomial(s, m).
  bool coefficients_ok = true;
  std::string witness;
  for (int m = 0; m <= s; ++m) {
    Rational sum = 0;
    std::vector<bool> pick(static_cast<std::size_t>(s), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
      Rational term = 1;
      int k = 0;
      for (int j = 1; j <= s; ++j) {
        if (!pick[static_cast<std::size_t>(j - 1)]) continue;
        ++k;
        term *= Rational(2 * j - s + m - k);
      }
      sum += term / factorial(m);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    const Rational binom = factorial(s) / (factorial(m) * factorial(s - m));
    if (sum != binom && coefficients_ok) {
      coefficients_ok = false;
      witness = "m=" + std::to_string(m) + ": " + sum.str() + " vs " + binom.str();
    }
  }
  report.add("insertion coefficients", coefficients_ok, witness);

  // Conjugate site 0 carries b-oscillators, symmetric site 1 carries a-oscillators.
  const int n = 2;
  const std::vector<RepLabel> reps{RepLabel::conjugate(s, n), RepLabel::symmetric(s, n)};
  const StateVector omega = reference_state(reps);
  const std::size_t b1 = 0;  // b-bar_1 b_1 on site 0
  const std::size_t a2 = 3;  // a-bar_2 a_2 on site 1
  const auto alpha = [&](int k, const StateVector& v) {
    StateVector hop = apply_bilinear(v, 1, 2, 1);
    return scale_by_occupation(hop, b1, [&](int m) { return -(Rational(1) - Rational(m) / Rational(s + 1 - k)) / Rational(k); });
  };
  const auto beta = [&](int k, const StateVector& v) {
    StateVector hop = apply_bilinear(v, 0, 1, 2);
    return scale_by_occupation(hop, a2, [&](int m) { return -(Rational(1) - Rational(m) / Rational(k)) / Rational(s + 1 - k); });
  };
  StateVector expected = bilinear_product(reps, {{0, 1, s}});
  if (s % 2 == 1) expected *= Rational(-1);

  StateVector full = omega;
  for (int k = s; k >= 1; --k) full = alpha(k, full) + beta(k, full);
  report.add("full product", full == expected, full == expected ? "" : full.str());

  StateVector ordered(reps);
  for (int m = 0; m <= s; ++m) {
    StateVector v = omega;
    for (int k = s; k > s - m; --k) v = beta(k, v);
    for (int k = s - m; k >= 1; --k) v = alpha(k, v);
    ordered += v;
  }
  report.add("ordered replacement", ordered == expected, ordered == expected ? "" : ordered.str());

  // The same product from the monodromy, with the cleared normalisation divided out.
  const MonodromySpec mono = monodromy_of(InvariantSpec::two_one(n, s));
  const auto roots = catalogue_string_roots(InvariantSpec::two_one(n, s));
  StateVector bethe = bethe_vector(mono, roots);
  Rational norm = 1;
  for (const auto& u : roots) norm *= mono.denominator(u);
  bethe *= Rational(1) / norm;
  report.add("Bethe vector", bethe == expected, bethe == expected ? "" : bethe.str());
  return report;
}

}  // namespace yangian
