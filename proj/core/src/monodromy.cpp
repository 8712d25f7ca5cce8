#include "yangian/monodromy.hpp"

#include <algorithm>
#include <sstream>

namespace yangian {

namespace {

std::vector<ChainFactor> natural_factors(const MonodromySpec& spec) {
  std::vector<ChainFactor> f;
  for (std::size_t i = 0; i < spec.sites.size(); ++i) f.push_back({i, spec.sites[i].rep});
  return f;
}

std::vector<Rational> arguments_at(const MonodromySpec& spec, const Rational& u) {
  std::vector<Rational> args;
  for (const auto& s : spec.sites) args.push_back(u - s.v);
  return args;
}

std::string leading_term(const StateVector& v) {
  if (v.is_zero()) return "0";
  const auto& [k, c] = *v.terms().begin();
  StateVector single(v.sites());
  single.add(k, c);
  return single.str() + (v.size() > 1 ? " + ..." : "");
}

std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

void check_spec_vector(const MonodromySpec& spec, const StateVector& v) {
  if (v.sites() != spec.reps()) throw IncompatibleError("state vector does not live on the monodromy sites");
}

}  // namespace

std::size_t MonodromySpec::conjugate_count() const {
  return static_cast<std::size_t>(
      std::count_if(sites.begin(), sites.end(), [](const SiteSpec& s) { return s.rep.is_conjugate(); }));
}

std::vector<RepLabel> MonodromySpec::reps() const {
  std::vector<RepLabel> r;
  for (const auto& s : sites) r.push_back(s.rep);
  return r;
}

Polynomial MonodromySpec::denominator() const {
  Polynomial p(1);
  for (const auto& s : sites) p *= Polynomial::linear(s.v);
  return p;
}

Rational MonodromySpec::denominator(const Rational& u) const {
  Rational p = 1;
  for (const auto& s : sites) p *= u - s.v;
  return p;
}

std::string MonodromySpec::str() const {
  std::ostringstream os;
  os << "n=" << n << " [";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i > 0) os << ", ";
    os << sites[i].rep.str() << "@" << sites[i].v;
  }
  os << "]";
  return os.str();
}

void MonodromySpec::validate() const {
  if (n < 2) throw ConstraintError("algebra rank must be at least 2");
  for (const auto& s : sites) {
    s.rep.validate();
    if (s.rep.n != n) throw ConstraintError("site rank differs from the monodromy rank");
  }
}

PolyStateVector monodromy_element(const MonodromySpec& spec, int a, int b, const StateVector& v) {
  check_spec_vector(spec, v);
  std::vector<Polynomial> args;
  for (const auto& s : spec.sites) args.push_back(Polynomial::linear(s.v));
  auto col = chain_column(natural_factors(spec), args, spec.n, b, to_polynomial(v));
  return col.at(static_cast<std::size_t>(a - 1));
}

std::vector<StateVector> monodromy_column_at(const MonodromySpec& spec, int b, const StateVector& v,
                                             const Rational& u) {
  check_spec_vector(spec, v);
  return chain_column(natural_factors(spec), arguments_at(spec, u), spec.n, b, v);
}

StateVector monodromy_element_at(const MonodromySpec& spec, int a, int b, const StateVector& v, const Rational& u) {
  return monodromy_column_at(spec, b, v, u).at(static_cast<std::size_t>(a - 1));
}

StateVector transfer_matrix_at(const MonodromySpec& spec, const StateVector& v, const Rational& u) {
  StateVector out(v.sites());
  for (int a = 1; a <= spec.n; ++a) out += monodromy_element_at(spec, a, a, v, u);
  return out;
}

std::vector<DenseMatrix> monodromy_matrices(const MonodromySpec& spec, const Rational& u) {
  const auto reps = spec.reps();
  const auto keys = tensor_basis(reps);
  std::map<BasisKey, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<DenseMatrix> mats(n * n, DenseMatrix(keys.size(), keys.size()));
  for (std::size_t col = 0; col < keys.size(); ++col) {
    const StateVector e = basis_vector(reps, keys[col]);
    for (int b = 1; b <= spec.n; ++b) {
      const auto column = monodromy_column_at(spec, b, e, u);
      for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [k, c] : column[a].terms()) mats[a * n + static_cast<std::size_t>(b - 1)](index.at(k), col) = c;
      }
    }
  }
  return mats;
}

StateVector apply_yangian_generator(const MonodromySpec& spec, int r, int a, int b, const StateVector& v) {
  if (r < 0) throw Error("negative Yangian level");
  const PolyStateVector p = monodromy_element(spec, a, b, v);
  const int length = static_cast<int>(spec.length());
  // h_j(v): complete homogeneous symmetric polynomials, from 1/prod(1 - v_i t).
  std::vector<Rational> h(static_cast<std::size_t>(r) + 1, 0);
  h[0] = 1;
  for (const auto& s : spec.sites) {
    for (std::size_t j = 1; j < h.size(); ++j) h[j] += s.v * h[j - 1];
  }
  StateVector out(v.sites());
  for (int j = 0; j <= r; ++j) {
    const int degree = length - j;
    if (degree < 0) continue;
    StateVector pk = p.map<Rational>([&](const Polynomial& c) { return c.coefficient(degree); });
    out += pk * h[static_cast<std::size_t>(r - j)];
  }
  return out;
}

std::vector<Rational> default_samples(std::size_t length, std::size_t count, const std::vector<Rational>& avoid) {
  std::vector<Rational> out;
  Rational u = static_cast<long>(length) + 2;
  while (out.size() < count) {
    if (std::find(avoid.begin(), avoid.end(), u) == avoid.end()) out.push_back(u);
    u += 1;
  }
  return out;
}

CheckReport check_rtt(const MonodromySpec& spec, const std::vector<Rational>& u_samples,
                      const std::vector<Rational>& up_samples) {
  spec.validate();
  CheckReport report("RTT " + spec.str());
  const auto n = static_cast<std::size_t>(spec.n);
  for (const auto& u : u_samples) {
    const auto pu = monodromy_matrices(spec, u);
    for (const auto& up : up_samples) {
      const auto pv = monodromy_matrices(spec, up);
      std::string witness;
      for (std::size_t a = 0; a < n && witness.empty(); ++a) {
        for (std::size_t b = 0; b < n && witness.empty(); ++b) {
          for (std::size_t c = 0; c < n && witness.empty(); ++c) {
            for (std::size_t d = 0; d < n && witness.empty(); ++d) {
              const DenseMatrix lhs = (up - u) * (pu[a * n + b] * pv[c * n + d] - pv[c * n + d] * pu[a * n + b]);
              const DenseMatrix rhs = pu[c * n + b] * pv[a * n + d] - pv[c * n + b] * pu[a * n + d];
              if (lhs != rhs) {
                witness = "(a,b,c,d)=(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                          std::to_string(c + 1) + "," + std::to_string(d + 1) + ")";
              }
            }
          }
        }
      }
      report.add("u=" + u.str() + " u'=" + up.str(), witness.empty(), witness);
    }
  }
  return report;
}

CheckReport check_yangian_generators(const MonodromySpec& spec, const std::vector<Rational>& u_samples) {
  spec.validate();
  CheckReport report("Yangian generators " + spec.str());
  const auto reps = spec.reps();
  const auto keys = tensor_basis(reps);
  const int n = spec.n;
  const std::size_t length = spec.length();

  std::string w0;
  std::string w1;
  std::string w2;
  std::string wc;
  for (const auto& key : keys) {
    const StateVector e = basis_vector(reps, key);
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const StateVector m0 = apply_yangian_generator(spec, 0, a, b, e);
        if (w0.empty() && m0 != (a == b ? e : StateVector(reps))) w0 = "ab=" + idx(a, b) + " on " + e.str();

        StateVector expect1(reps);
        for (std::size_t i = 0; i < length; ++i) expect1 += apply_generator(e, i, b, a);
        const StateVector m1 = apply_yangian_generator(spec, 1, a, b, e);
        if (w1.empty() && m1 != expect1) w1 = "ab=" + idx(a, b) + " on " + e.str();

        StateVector expect2(reps);
        for (std::size_t i = 0; i < length; ++i) {
          for (std::size_t j = i + 1; j < length; ++j) {
            for (int c = 1; c <= n; ++c) expect2 += apply_generator(apply_generator(e, j, b, c), i, c, a);
          }
          expect2 += apply_generator(e, i, b, a) * spec.sites[i].v;
        }
        if (w2.empty() && apply_yangian_generator(spec, 2, a, b, e) != expect2) w2 = "ab=" + idx(a, b) + " on " + e.str();

        for (int c = 1; c <= n && wc.empty(); ++c) {
          for (int d = 1; d <= n && wc.empty(); ++d) {
            const StateVector lhs = apply_yangian_generator(spec, 1, a, b, apply_yangian_generator(spec, 1, c, d, e)) -
                                    apply_yangian_generator(spec, 1, c, d, apply_yangian_generator(spec, 1, a, b, e));
            StateVector rhs(reps);
            if (a == d) rhs += apply_yangian_generator(spec, 1, c, b, e);
            if (c == b) rhs -= apply_yangian_generator(spec, 1, a, d, e);
            if (lhs != rhs) wc = "abcd=" + idx(a, b) + idx(c, d) + " on " + e.str();
          }
        }
      }
    }
  }
  report.add("M0 = delta", w0.empty(), w0);
  report.add("M1 = sum J", w1.empty(), w1);
  report.add("M2 bilocal form", w2.empty(), w2);
  report.add("level-one commutators", wc.empty(), wc);

  for (const auto& u : u_samples) {
    std::string wa;
    for (const auto& key : keys) {
      if (!wa.empty()) break;
      const StateVector e = basis_vector(reps, key);
      for (int a = 1; a <= n && wa.empty(); ++a) {
        for (int b = 1; b <= n && wa.empty(); ++b) {
          for (int c = 1; c <= n && wa.empty(); ++c) {
            for (int d = 1; d <= n && wa.empty(); ++d) {
              const StateVector lhs =
                  apply_yangian_generator(spec, 1, a, b, monodromy_element_at(spec, c, d, e, u)) -
                  monodromy_element_at(spec, c, d, apply_yangian_generator(spec, 1, a, b, e), u);
              StateVector rhs(reps);
              if (a == d) rhs += monodromy_element_at(spec, c, b, e, u);
              if (c == b) rhs -= monodromy_element_at(spec, a, d, e, u);
              if (lhs != rhs) wa = "abcd=" + idx(a, b) + idx(c, d) + " on " + e.str();
            }
          }
        }
      }
    }
    report.add("adjoint action u=" + u.str(), wa.empty(), wa);
  }
  return report;
}

CheckReport check_invariance(const MonodromySpec& spec, const StateVector& candidate, std::vector<Rational> u_samples) {
  spec.validate();
  check_spec_vector(spec, candidate);
  std::vector<Rational> vs;
  for (const auto& s : spec.sites) vs.push_back(s.v);
  if (u_samples.empty()) u_samples = default_samples(spec.length(), spec.length() + 1, vs);
  CheckReport report("invariance " + spec.str());
  if (candidate.is_zero()) {
    report.add("nonzero candidate", false, "candidate is the zero vector");
    return report;
  }
  for (const auto& u : u_samples) {
    if (std::find(vs.begin(), vs.end(), u) != vs.end()) throw ConstraintError("sample coincides with an inhomogeneity");
  }
  const std::size_t needed = spec.length() + 1;
  report.add("sample count", u_samples.size() >= needed,
             std::to_string(u_samples.size()) + " samples for degree " + std::to_string(spec.length()));
  std::string witness;
  std::string transfer_witness;
  for (const auto& u : u_samples) {
    const StateVector expected = candidate * spec.denominator(u);
    StateVector transfer(candidate.sites());
    for (int b = 1; b <= spec.n; ++b) {
      const auto column = monodromy_column_at(spec, b, candidate, u);
      for (int a = 1; a <= spec.n; ++a) {
        const auto& got = column[static_cast<std::size_t>(a - 1)];
        if (a == b) transfer += got;
        if (!witness.empty()) continue;
        const StateVector residual = a == b ? got - expected : got;
        if (!residual.is_zero()) {
          witness = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " u=" + u.str() +
                    " residual " + leading_term(residual);
        }
      }
    }
    if (transfer_witness.empty() && transfer != expected * Rational(spec.n)) {
      transfer_witness = "u=" + u.str() + " residual " + leading_term(transfer - expected * Rational(spec.n));
    }
  }
  report.add("P_ab(u) = delta_ab prod(u - v_i)", witness.empty(),
             witness.empty() ? std::to_string(u_samples.size()) + " samples" : witness);
  report.add("transfer eigenvalue n prod(u - v_i)", transfer_witness.empty(), transfer_witness);
  return report;
}

StateVector Intertwiner::apply(const StateVector& in) const {
  if (in.sites() != inputs) throw IncompatibleError("intertwiner input space mismatch");
  StateVector out(outputs);
  for (const auto& [k, c] : in.terms()) {
    const auto it = images.find(k);
    if (it != images.end()) out += it->second * c;
  }
  return out;
}

DenseMatrix Intertwiner::matrix() const {
  const auto in_keys = tensor_basis(inputs);
  const auto out_keys = tensor_basis(outputs);
  std::map<BasisKey, std::size_t> index;
  for (std::size_t i = 0; i < out_keys.size(); ++i) index.emplace(out_keys[i], i);
  DenseMatrix m(out_keys.size(), in_keys.size());
  for (std::size_t col = 0; col < in_keys.size(); ++col) {
    const auto it = images.find(in_keys[col]);
    if (it == images.end()) continue;
    for (const auto& [k, c] : it->second.terms()) m(index.at(k), col) = c;
  }
  return m;
}

Intertwiner make_intertwiner(const MonodromySpec& spec, std::size_t k, const StateVector& candidate) {
  check_spec_vector(spec, candidate);
  if (k > spec.length()) throw ConstraintError("split point beyond the chain");
  Intertwiner o;
  for (std::size_t i = 0; i < spec.length(); ++i) {
    const auto& rep = spec.sites[i].rep;
    if (i < k) {
      if (!rep.is_conjugate()) throw ConstraintError("the first K sites must carry conjugate representations");
      o.inputs.push_back(RepLabel::symmetric(rep.s, rep.n));
    } else {
      o.outputs.push_back(rep);
    }
  }
  const std::size_t split = k * static_cast<std::size_t>(spec.n);
  for (const auto& [key, c] : candidate.terms()) {
    const BasisKey in(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(split));
    const BasisKey out(key.begin() + static_cast<std::ptrdiff_t>(split), key.end());
    auto [it, inserted] = o.images.try_emplace(in, StateVector(o.outputs));
    it->second.add(out, c * key_norm_squared(in));
  }
  return o;
}

CheckReport check_intertwiner(const MonodromySpec& spec, std::size_t k, const StateVector& candidate,
                              std::vector<Rational> u_samples) {
  spec.validate();
  const Intertwiner o = make_intertwiner(spec, k, candidate);
  const std::size_t length = spec.length();
  std::vector<ChainFactor> left;
  std::vector<Rational> left_v;
  for (std::size_t i = k; i < length; ++i) {
    left.push_back({i - k, spec.sites[i].rep});
    left_v.push_back(spec.sites[i].v);
  }
  std::vector<ChainFactor> right;
  std::vector<Rational> right_w;
  for (std::size_t i = k; i-- > 0;) {
    const auto& s = spec.sites[i];
    right.push_back({i, o.inputs[i]});
    right_w.push_back(s.v + s.rep.s - 1 + spec.n);
  }
  std::vector<Rational> avoid = left_v;
  avoid.insert(avoid.end(), right_w.begin(), right_w.end());
  if (u_samples.empty()) u_samples = default_samples(length, length + 1, avoid);

  CheckReport report("intertwiner K=" + std::to_string(k) + " " + spec.str());
  const auto in_keys = tensor_basis(o.inputs);
  for (const auto& u : u_samples) {
    std::vector<Rational> largs;
    Rational lden = 1;
    for (const auto& v : left_v) {
      largs.push_back(u - v);
      lden *= u - v;
    }
    std::vector<Rational> rargs;
    Rational rden = 1;
    for (const auto& w : right_w) {
      rargs.push_back(u - w);
      rden *= u - w;
    }
    if (lden.is_zero() || rden.is_zero()) throw PoleError("intertwiner sample hits a pole");
    std::string witness;
    for (const auto& key : in_keys) {
      if (!witness.empty()) break;
      const StateVector e = basis_vector(o.inputs, key);
      const StateVector oe = o.apply(e);
      for (int b = 1; b <= spec.n && witness.empty(); ++b) {
        const auto lcol = chain_column(left, largs, spec.n, b, oe);
        const auto rcol = chain_column(right, rargs, spec.n, b, e);
        for (int a = 1; a <= spec.n && witness.empty(); ++a) {
          const StateVector lhs = lcol[static_cast<std::size_t>(a - 1)] * lden.inverse();
          const StateVector rhs = o.apply(rcol[static_cast<std::size_t>(a - 1)]) * rden.inverse();
          if (lhs != rhs) witness = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " on " + e.str();
        }
      }
    }
    report.add("u=" + u.str(), witness.empty(), witness);
  }
  return report;
}

}  // namespace yangian
