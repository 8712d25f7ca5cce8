#include "yangian/fock.hpp"

namespace yangian {

namespace {

void enumerate(int n, int remaining, std::vector<int>& prefix, std::vector<FockState>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    prefix.push_back(remaining);
    out.push_back(FockState{prefix});
    prefix.pop_back();
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    prefix.push_back(m);
    enumerate(n, remaining - m, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

long RepLabel::dimension() const { return binomial(s + n - 1, n - 1).to_long(); }

std::string RepLabel::str() const { return (is_conjugate() ? "sbar=" : "s=") + std::to_string(s); }

void RepLabel::validate() const {
  if (n < 2) throw ConstraintError("algebra rank must be at least 2");
  if (s < 0) throw ConstraintError("representation label must be non-negative");
  if (s > 255) throw ConstraintError("representation label too large");
}

int FockState::total() const {
  int t = 0;
  for (int m : occupations) t += m;
  return t;
}

Rational FockState::norm_squared() const {
  Rational r = 1;
  for (int m : occupations) r *= factorial(m);
  return r;
}

std::vector<FockState> basis(const RepLabel& rep) {
  rep.validate();
  std::vector<FockState> out;
  std::vector<int> prefix;
  enumerate(rep.n, rep.s, prefix, out);
  return out;
}

std::vector<BasisKey> tensor_basis(std::span<const RepLabel> sites) {
  std::vector<BasisKey> keys{BasisKey{}};
  for (const auto& rep : sites) {
    const auto local = basis(rep);
    std::vector<BasisKey> next;
    next.reserve(keys.size() * local.size());
    for (const auto& k : keys) {
      for (const auto& st : local) {
        BasisKey nk = k;
        for (int m : st.occupations) nk.push_back(static_cast<std::uint8_t>(m));
        next.push_back(std::move(nk));
      }
    }
    keys = std::move(next);
  }
  return keys;
}

BasisKey make_key(std::span<const FockState> states) {
  BasisKey k;
  for (const auto& st : states) {
    for (int m : st.occupations) {
      if (m < 0 || m > 255) throw IncompatibleError("occupation number out of range");
      k.push_back(static_cast<std::uint8_t>(m));
    }
  }
  return k;
}

std::vector<FockState> split_key(const BasisKey& key, std::size_t site_count, int n) {
  std::vector<FockState> out(site_count);
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < site_count; ++i) {
    out[i].occupations.resize(un);
    for (std::size_t a = 0; a < un; ++a) out[i].occupations[a] = key.at(i * un + a);
  }
  return out;
}

Rational key_norm_squared(const BasisKey& key) {
  Rational r = 1;
  for (auto m : key) r *= factorial(m);
  return r;
}

StateVector highest_weight_state(const RepLabel& rep) {
  rep.validate();
  FockState st{std::vector<int>(static_cast<std::size_t>(rep.n), 0)};
  // a-bar_1^s on the symmetric side, b-bar_n^s on the conjugate side.
  if (rep.is_conjugate()) {
    st.occupations.back() = rep.s;
  } else {
    st.occupations.front() = rep.s;
  }
  StateVector v({rep});
  v.add(make_key(std::span<const FockState>(&st, 1)), 1);
  return v;
}

StateVector reference_state(std::vector<RepLabel> sites) {
  StateVector v(std::vector<RepLabel>{});
  v.add(BasisKey{}, 1);
  for (const auto& rep : sites) v = tensor_product(v, highest_weight_state(rep));
  return v;
}

StateVector basis_vector(std::vector<RepLabel> sites, const BasisKey& key) {
  StateVector v(std::move(sites));
  v.check_key(key);
  v.add(key, 1);
  return v;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<RepLabel> sites = a.sites();
  sites.insert(sites.end(), b.sites().begin(), b.sites().end());
  StateVector out(std::move(sites));
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      BasisKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(k, ca * cb);
    }
  }
  return out;
}

Rational pairing(std::span<const FockState> bra, const StateVector& v) {
  if (bra.size() != v.sites().size()) throw IncompatibleError("bra has the wrong number of sites");
  for (std::size_t i = 0; i < bra.size(); ++i) {
    if (static_cast<int>(bra[i].occupations.size()) != v.rank() || bra[i].total() != v.sites()[i].s) {
      throw IncompatibleError("bra occupancy does not match site " + std::to_string(i + 1));
    }
  }
  return v.coefficient(make_key(bra));
}

Rational inner_product(const StateVector& a, const StateVector& b) {
  a.check_same_space(b);
  Rational acc = 0;
  for (const auto& [k, c] : a.terms()) {
    const Rational d = b.coefficient(k);
    if (!d.is_zero()) acc += c * d * key_norm_squared(k);
  }
  return acc;
}

StateVector evaluate(const PolyStateVector& v, const Rational& u) {
  return v.map<Rational>([&](const Polynomial& p) { return p(u); });
}

StateVector evaluate(const RationalFunctionStateVector& v, const Rational& z) {
  return v.map<Rational>([&](const RationalFunction& r) { return r(z); });
}

PolyStateVector to_polynomial(const StateVector& v) {
  return v.map<Polynomial>([](const Rational& c) { return Polynomial(c); });
}

}  // namespace yangian
