#include "yangian/lax.hpp"

#include <map>

namespace yangian {

namespace detail {

void bounded_compositions(const std::vector<int>& bound, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(bound.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == bound.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int m = std::min(left, bound[pos]); m >= 0; --m) {
      cur[pos] = m;
      rec(pos + 1, left - m);
    }
    cur[pos] = 0;
  };
  rec(0, k);
}

}  // namespace detail

namespace {

std::string sample_str(const Rational& u) { return u.str(); }

// Uncleared operator R(x) = R_hat(x) / x.
DenseMatrix uncleared(const RepLabel& rep, const Rational& x) {
  if (x.is_zero()) throw PoleError("Lax operator evaluated at its pole");
  return x.inverse() * lax_matrix(rep, x);
}

std::string element_str(std::size_t r, std::size_t c, const Rational& lhs, const Rational& rhs) {
  return "element (" + std::to_string(r) + "," + std::to_string(c) + "): " + lhs.str() + " vs " + rhs.str();
}

// First differing element of two equally shaped matrices, if any.
std::optional<std::string> first_difference(const DenseMatrix& a, const DenseMatrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) return element_str(r, c, a(r, c), b(r, c));
    }
  }
  return std::nullopt;
}

}  // namespace

DenseMatrix operator_matrix(const std::vector<RepLabel>& sites,
                            const std::function<StateVector(const StateVector&)>& op) {
  const auto keys = tensor_basis(sites);
  std::map<BasisKey, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  DenseMatrix m(keys.size(), keys.size());
  for (std::size_t col = 0; col < keys.size(); ++col) {
    const StateVector image = op(basis_vector(sites, keys[col]));
    for (const auto& [k, c] : image.terms()) m(index.at(k), col) = c;
  }
  return m;
}

Rational orientation_shift(const RepLabel& rep) {
  return rep.is_conjugate() ? Rational(rep.n + rep.s - 1) : Rational(1 - rep.s);
}

Rational crossing_parameter(const RepLabel& rep) {
  return rep.is_conjugate() ? Rational(1 - rep.s - rep.n) : Rational(rep.s - 1);
}

Polynomial LaxOperator::argument() const {
  if (orientation == Orientation::FundamentalFirst) return Polynomial::linear(v);
  return Polynomial(std::vector<Rational>{v + orientation_shift(rep), -1});
}

PolyStateVector apply_lax(const LaxOperator& lax, int a, int b, const StateVector& v, std::size_t site) {
  return apply_lax_entry(lax.rep, a, b, to_polynomial(v), site, lax.argument());
}

StateVector apply_lax_at(const LaxOperator& lax, int a, int b, const StateVector& v, std::size_t site,
                         const Rational& u) {
  return apply_lax_entry(lax.rep, a, b, v, site, lax.argument(u));
}

DenseMatrix lax_matrix(const RepLabel& rep, const Rational& x) {
  const std::vector<RepLabel> sites{rep};
  const auto d = static_cast<std::size_t>(rep.dimension());
  const auto n = static_cast<std::size_t>(rep.n);
  DenseMatrix m(n * d, n * d);
  for (int a = 1; a <= rep.n; ++a) {
    for (int b = 1; b <= rep.n; ++b) {
      const DenseMatrix block = operator_matrix(
          sites, [&](const StateVector& s) { return apply_lax_entry(rep, a, b, s, 0, x); });
      const auto ra = static_cast<std::size_t>(a - 1);
      const auto cb = static_cast<std::size_t>(b - 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(ra * d + i, cb * d + j) = block(i, j);
      }
    }
  }
  return m;
}

Rational unitarity_scalar(const RepLabel& rep, const Rational& u) {
  if (rep.is_conjugate()) return 1;
  const Rational p = u * (u + rep.s - 1);
  return (p - rep.s) / p;
}

CheckReport check_unitarity(const RepLabel& rep, const std::vector<Rational>& samples) {
  CheckReport report("unitarity " + rep.str() + " n=" + std::to_string(rep.n));
  for (const auto& u : samples) {
    const std::string name = "u=" + sample_str(u);
    // R_{rep,box}(-u) is the fundamental-first operator at -u + shift.
    const DenseMatrix product = uncleared(rep, u) * uncleared(rep, -u + orientation_shift(rep));
    Rational c;
    if (!product.is_scalar_multiple_of_identity(&c)) {
      report.add(name, false, "product is not proportional to the identity");
      continue;
    }
    const Rational expected = unitarity_scalar(rep, u);
    report.add(name, c == expected, "c(u)=" + c.str() + " closed form " + expected.str());
  }
  return report;
}

CheckReport check_crossing(const RepLabel& rep, const std::vector<Rational>& samples) {
  CheckReport report("crossing " + rep.str() + " n=" + std::to_string(rep.n));
  const RepLabel conj{rep.is_conjugate() ? RepKind::Symmetric : RepKind::Conjugate, rep.s, rep.n};
  // The b -> a relabelling identifies basis(conj)[i] with basis(rep)[i].
  const auto states = basis(rep);
  const auto conj_states = basis(conj);
  const std::size_t d = states.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (states[i] != conj_states[i]) throw Error("conjugate basis bijection broken");
  }
  std::vector<Rational> norm(d);
  for (std::size_t i = 0; i < d; ++i) norm[i] = states[i].norm_squared();
  const auto n = static_cast<std::size_t>(rep.n);
  for (const auto& x : samples) {
    const std::string name = "x=" + sample_str(x);
    const DenseMatrix lhs = uncleared(conj, x + crossing_parameter(rep));
    const DenseMatrix rhs = uncleared(rep, -x + orientation_shift(rep));
    std::string witness;
    for (std::size_t c = 0; c < n && witness.empty(); ++c) {
      for (std::size_t dd = 0; dd < n && witness.empty(); ++dd) {
        for (std::size_t beta = 0; beta < d && witness.empty(); ++beta) {
          for (std::size_t alpha = 0; alpha < d && witness.empty(); ++alpha) {
            // Orthonormal matrix elements of monomial-basis operators carry norm ratios.
            const Rational l = norm[beta] * lhs(c * d + beta, dd * d + alpha);
            const Rational r = norm[alpha] * rhs(c * d + alpha, dd * d + beta);
            if (l != r) {
              witness = "c=" + std::to_string(c + 1) + " d=" + std::to_string(dd + 1) + " beta=" +
                        std::to_string(beta) + " alpha=" + std::to_string(alpha) + ": " + l.str() + " vs " + r.str();
            }
          }
        }
      }
    }
    report.add(name, witness.empty(), witness.empty() ? "all elements agree" : witness);
  }
  const Rational double_shift = crossing_parameter(rep) + crossing_parameter(conj);
  report.add("double crossing shift", double_shift == -rep.n, "kappa + kappa_bar = " + double_shift.str());
  return report;
}

CheckReport lax_shift_symmetry(const RepLabel& rep, const std::vector<Rational>& samples) {
  CheckReport report("lax shift symmetry " + rep.str() + " n=" + std::to_string(rep.n));
  for (const auto& x : samples) {
    const std::string name = "x=" + sample_str(x);
    // Unitarity defines R_{rep,box}(x) as the inverse of R_{box,rep}(-x) up to the f-factor.
    const DenseMatrix from_inverse = uncleared(rep, -x).inverse();
    const DenseMatrix shifted = unitarity_scalar(rep, -x).inverse() * uncleared(rep, x + orientation_shift(rep));
    const auto diff = first_difference(from_inverse, shifted);
    report.add(name, !diff, diff.value_or("element tables agree"));
  }
  return report;
}

CheckReport check_lax_trace(const RepLabel& rep, const std::vector<Rational>& samples) {
  CheckReport report("lax trace " + rep.str() + " n=" + std::to_string(rep.n));
  const std::vector<RepLabel> sites{rep};
  for (const auto& x : samples) {
    std::string witness;
    for (const auto& key : tensor_basis(sites)) {
      const StateVector e = basis_vector(sites, key);
      StateVector lhs(sites);
      StateVector rhs = e * Rational(rep.n) * x;
      for (int a = 1; a <= rep.n; ++a) {
        lhs += apply_lax_entry(rep, a, a, e, 0, x);
        rhs += apply_generator(e, 0, a, a);
      }
      if (lhs != rhs) {
        witness = "basis state " + e.str();
        break;
      }
    }
    report.add("x=" + sample_str(x), witness.empty(), witness);
  }
  return report;
}

RationalFunction HoppingRMatrix::coefficient(int k) const {
  Polynomial den(1);
  for (int j = 1; j <= k; ++j) den *= Polynomial::linear(Rational(s3 - j));
  return RationalFunction(Polynomial(factorial(k)), den);
}

Rational HoppingRMatrix::coefficient(int k, const Rational& z) const {
  Rational den = 1;
  for (int j = 1; j <= k; ++j) den *= z - s3 + j;
  if (den.is_zero()) throw PoleError("hopping coefficient e_" + std::to_string(k) + " has a pole at z=" + z.str());
  return factorial(k) / den;
}

std::vector<RepLabel> HoppingRMatrix::sites() const {
  return {RepLabel::symmetric(s3, n), RepLabel::symmetric(s4, n)};
}

StateVector HoppingRMatrix::apply(const StateVector& v, std::size_t i, std::size_t j, const Rational& z) const {
  if (v.sites().at(i) != RepLabel::symmetric(s3, n) || v.sites().at(j) != RepLabel::symmetric(s4, n)) {
    throw IncompatibleError("R-matrix sites do not match");
  }
  StateVector out(v.sites());
  for (int k = 0; k <= max_hops(); ++k) out += apply_hop(v, i, j, k) * coefficient(k, z);
  return out;
}

RationalFunctionStateVector HoppingRMatrix::apply(const StateVector& v, std::size_t i, std::size_t j) const {
  if (v.sites().at(i) != RepLabel::symmetric(s3, n) || v.sites().at(j) != RepLabel::symmetric(s4, n)) {
    throw IncompatibleError("R-matrix sites do not match");
  }
  const auto lifted = v.map<RationalFunction>([](const Rational& c) { return RationalFunction(c); });
  RationalFunctionStateVector out(v.sites());
  for (int k = 0; k <= max_hops(); ++k) out += apply_hop(lifted, i, j, k) * coefficient(k);
  return out;
}

DenseMatrix HoppingRMatrix::matrix(const Rational& z) const {
  return operator_matrix(sites(), [&](const StateVector& s) { return apply(s, 0, 1, z); });
}

HoppingRMatrix hopping_rmatrix(int s3, int s4, int n) {
  HoppingRMatrix r{s3, s4, n};
  for (const auto& rep : r.sites()) rep.validate();
  return r;
}

CheckReport check_ybe_hopping(int s3, int s4, int n, const std::vector<Rational>& u_samples,
                              const std::vector<Rational>& z_samples) {
  CheckReport report("hopping Yang-Baxter s3=" + std::to_string(s3) + " s4=" + std::to_string(s4) +
                     " n=" + std::to_string(n));
  const HoppingRMatrix r = hopping_rmatrix(s3, s4, n);
  const auto sites = r.sites();
  for (const auto& z : z_samples) {
    const DenseMatrix rm = r.matrix(z);
    const Rational v3 = z;
    const Rational v4 = 0;
    for (const auto& u : u_samples) {
      std::string witness;
      for (int a = 1; a <= n && witness.empty(); ++a) {
        for (int b = 1; b <= n && witness.empty(); ++b) {
          const auto left = [&](const StateVector& s) {
            StateVector out(sites);
            for (int c = 1; c <= n; ++c) {
              out += apply_lax_entry(sites[0], a, c, apply_lax_entry(sites[1], c, b, s, 1, u - v4), 0, u - v3);
            }
            return out;
          };
          const auto right = [&](const StateVector& s) {
            StateVector out(sites);
            for (int c = 1; c <= n; ++c) {
              out += apply_lax_entry(sites[1], a, c, apply_lax_entry(sites[0], c, b, s, 0, u - v3), 1, u - v4);
            }
            return out;
          };
          const auto diff = first_difference(operator_matrix(sites, left) * rm, rm * operator_matrix(sites, right));
          if (diff) witness = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " " + *diff;
        }
      }
      report.add("z=" + z.str() + " u=" + u.str(), witness.empty(), witness);
    }
  }
  return report;
}

HighFloat gamma_normalization(int s, int n, const HighFloat& u) {
  const HighFloat nn = n;
  return gamma_float((1 - u) / nn) * gamma_float((nn + u) / nn) /
         (gamma_float((1 - s - u) / nn) * gamma_float((nn + s + u) / nn));
}

CheckReport check_gamma_normalization(int n, int s, const std::vector<HighFloat>& samples,
                                      const HighFloat& tolerance) {
  CheckReport report("gamma normalisation s=" + std::to_string(s) + " n=" + std::to_string(n));
  const auto rel = [](const HighFloat& a, const HighFloat& b) {
    const HighFloat scale = boost::multiprecision::abs(b) > 0 ? boost::multiprecision::abs(b) : HighFloat(1);
    return HighFloat(boost::multiprecision::abs(a - b) / scale);
  };
  const auto add = [&](const std::string& name, const HighFloat& err) {
    report.add(name, err <= tolerance, "relative error " + err.str(3, std::ios_base::scientific));
  };
  for (const auto& u : samples) {
    const std::string at = " u=" + u.str(8);
    const HighFloat uu = u * (u + s - 1);
    add("unitarity" + at, rel(gamma_normalization(s, n, u) * gamma_normalization(s, n, -u - s + 1), uu / (uu - s)));
    // Conjugate normalisation f_sbar(u) = f_s(-u).
    add("conjugate unitarity" + at,
        rel(gamma_normalization(s, n, -u) * gamma_normalization(s, n, u - s + 1 - n), HighFloat(1)));
    add("trivial weight" + at, rel(gamma_normalization(0, n, u), HighFloat(1)));
    for (int sp = 0; sp <= 3; ++sp) {
      add("additivity s'=" + std::to_string(sp) + at,
          rel(gamma_normalization(s, n, u) * gamma_normalization(sp, n, u + s), gamma_normalization(s + sp, n, u)));
    }
  }
  return report;
}

}  // namespace yangian
