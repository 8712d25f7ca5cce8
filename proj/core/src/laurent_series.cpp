#include "yangian/scalar/laurent_series.hpp"

#include <algorithm>

#include "yangian/error.hpp"

namespace yangian {

namespace {

constexpr int kInf = LaurentSeries::kInf;
constexpr int kNegInf = LaurentSeries::kNegInf;

// Window arithmetic: an infinite truncation absorbs everything.
int window_add(int t, int low) {
  if (t == kInf || low == kInf) return kInf;
  if (t == kNegInf || low == kNegInf) return kNegInf;
  return t + low;
}

int valuation_add(int a, int b) {
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return a + b;
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] < b[v]) return false;
  }
  return true;
}

long count_neg_inf(const std::vector<int>& a) { return std::count(a.begin(), a.end(), kNegInf); }

}  // namespace

LaurentSeries::LaurentSeries(std::vector<std::string> variables)
    : vars_(std::move(variables)), trunc_(vars_.size(), kInf), low_(vars_.size(), kNegInf) {}

LaurentSeries LaurentSeries::monomial(std::vector<std::string> variables, Exponents exponents, RationalFunction c) {
  if (exponents.size() != variables.size()) throw IncompatibleError("monomial exponent arity mismatch");
  LaurentSeries s(std::move(variables));
  s.low_ = exponents;
  if (!c.is_zero()) s.terms_.emplace(std::move(exponents), std::move(c));
  return s;
}

std::size_t LaurentSeries::index_of(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw IncompatibleError("unknown series variable '" + var + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

int LaurentSeries::known_valuation(std::size_t v) const {
  int low = kInf;
  for (const auto& [e, c] : terms_) low = std::min(low, e[v]);
  return low;
}

bool LaurentSeries::is_exact() const {
  return std::all_of(trunc_.begin(), trunc_.end(), [](int t) { return t == kInf; });
}

bool LaurentSeries::in_window(const Exponents& e) const {
  if (e.size() != vars_.size()) throw IncompatibleError("exponent arity mismatch");
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] > trunc_[v]) return false;
  }
  return true;
}

void LaurentSeries::set_truncation(std::size_t v, int t) {
  trunc_.at(v) = t;
  std::erase_if(terms_, [&](const auto& kv) { return kv.first[v] > t; });
}

void LaurentSeries::set_valuation(std::size_t v, int low) { low_.at(v) = low; }

void LaurentSeries::add_term(const Exponents& e, const RationalFunction& c) {
  if (!in_window(e)) throw TruncationError("term lies outside the exactness window");
  if (c.is_zero()) return;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (low_[v] != kNegInf && e[v] < low_[v]) low_[v] = e[v];
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalFunction LaurentSeries::extract(const Exponents& e) const {
  if (!in_window(e)) throw TruncationError("requested coefficient lies outside the exactness window");
  const auto it = terms_.find(e);
  return it == terms_.end() ? RationalFunction() : it->second;
}

LaurentSeries LaurentSeries::extract_partial(const std::map<std::string, int>& fixed) const {
  std::vector<bool> is_fixed(vars_.size(), false);
  std::vector<int> value(vars_.size(), 0);
  for (const auto& [name, e] : fixed) {
    const std::size_t v = index_of(name);
    if (e > trunc_[v]) throw TruncationError("requested exponent of '" + name + "' lies outside the exactness window");
    is_fixed[v] = true;
    value[v] = e;
  }
  LaurentSeries out;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (is_fixed[v]) continue;
    out.vars_.push_back(vars_[v]);
    out.trunc_.push_back(trunc_[v]);
    out.low_.push_back(low_[v]);
  }
  for (const auto& [e, c] : terms_) {
    bool match = true;
    Exponents reduced;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (is_fixed[v]) {
        match = match && e[v] == value[v];
      } else {
        reduced.push_back(e[v]);
      }
    }
    if (match) out.terms_.emplace(std::move(reduced), c);
  }
  return out;
}

LaurentSeries LaurentSeries::residue(const std::vector<std::string>& vars) const {
  std::map<std::string, int> fixed;
  for (const auto& v : vars) fixed[v] = -1;
  return extract_partial(fixed);
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const {
  if (vars_ != o.vars_) throw IncompatibleError("series over different variable lists");
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  a.check_compatible(b);
  const std::size_t nv = a.vars_.size();
  std::vector<int> d1(nv);
  std::vector<int> d2(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    d1[v] = std::min(window_add(a.trunc_[v], b.low_[v]), window_add(b.trunc_[v], a.known_valuation(v)));
    d2[v] = std::min(window_add(b.trunc_[v], a.low_[v]), window_add(a.trunc_[v], b.known_valuation(v)));
  }
  const std::vector<int>* pick = &d1;
  if (!dominates(d1, d2)) {
    if (dominates(d2, d1) || count_neg_inf(d2) < count_neg_inf(d1)) pick = &d2;
  }
  LaurentSeries out(a.vars_);
  out.trunc_ = *pick;
  for (std::size_t v = 0; v < nv; ++v) out.low_[v] = valuation_add(a.low_[v], b.low_[v]);
  LaurentSeries::Exponents e(nv);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool inside = true;
      for (std::size_t v = 0; v < nv; ++v) {
        e[v] = ea[v] + eb[v];
        inside = inside && e[v] <= out.trunc_[v];
      }
      if (!inside) continue;
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  a.check_compatible(b);
  LaurentSeries out(a.vars_);
  for (std::size_t v = 0; v < a.vars_.size(); ++v) {
    out.trunc_[v] = std::min(a.trunc_[v], b.trunc_[v]);
    out.low_[v] = std::min(a.low_[v], b.low_[v]);
  }
  for (const auto* s : {&a, &b}) {
    for (const auto& [e, c] : s->terms_) {
      if (!out.in_window(e)) continue;
      auto [it, inserted] = out.terms_.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LaurentSeries exp_bilinear(const std::vector<std::string>& variables, const std::string& c, const std::string& x,
                           int order) {
  LaurentSeries s(variables);
  const std::size_t ic = s.index_of(c);
  const std::size_t ix = s.index_of(x);
  for (std::size_t v = 0; v < variables.size(); ++v) s.set_valuation(v, 0);
  LaurentSeries::Exponents e(variables.size(), 0);
  for (int m = 0; m <= order; ++m) {
    e[ic] = m;
    e[ix] = m;
    s.add_term(e, RationalFunction((m % 2 == 0 ? Rational(1) : Rational(-1)) / factorial(m)));
  }
  s.set_truncation(ic, order);
  return s;
}

}  // namespace yangian
