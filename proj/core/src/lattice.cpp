#include "yangian/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "yangian/bethe.hpp"
#include "yangian/lax.hpp"

namespace yangian {

namespace {

struct Point {
  Rational x;
  Rational y;
};

Point circle_point(const Rational& t) {
  const Rational d = Rational(1) + t * t;
  return {(Rational(1) - t * t) / d, Rational(2) * t / d};
}

// One line's parameter at its crossing with another, 0 at the j-end and 1 at the i-end.
Rational crossing_parameter(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  const Rational dax = a1.x - a0.x;
  const Rational day = a1.y - a0.y;
  const Rational dbx = b1.x - b0.x;
  const Rational dby = b1.y - b0.y;
  const Rational det = dax * dby - day * dbx;
  if (det.is_zero()) throw ConstraintError("parallel crossing lines");
  return ((b0.x - a0.x) * dby - (b0.y - a0.y) * dbx) / det;
}

bool strictly_between(int a, int lo, int hi) { return lo < a && a < hi; }

// Weights <out_k, out_l| R |in_k, in_l> of one vertex, line k first.
class VertexWeights {
 public:
  VertexWeights(const RepLabel& rk, const RepLabel& rl, const Rational& theta_k, const Rational& theta_l)
      : dk_(static_cast<std::size_t>(rk.dimension())), dl_(static_cast<std::size_t>(rl.dimension())) {
    const Rational x = theta_k - theta_l;
    if (rk.n == 2 && rk.s == 1 && rl.s == 1) {
      if ((x + 1).is_zero()) throw PoleError("six-vertex weight pole at rapidity difference -1");
      table_.assign(16, Rational(0));
      const Rational norm = Rational(1) / (x + 1);
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          at(a, b, a, b) += x * norm;
          at(b, a, a, b) += norm;
        }
      }
      return;
    }
    const HoppingRMatrix r{rk.s, rl.s, rk.n};
    const DenseMatrix m = r.matrix(x + Rational(rk.s - rl.s));
    const auto sites = r.sites();
    const auto tb = tensor_basis(sites);
    const auto bk = basis(RepLabel::symmetric(rk.s, rk.n));
    const auto bl = basis(RepLabel::symmetric(rl.s, rl.n));
    std::map<BasisKey, std::size_t> index;
    for (std::size_t i = 0; i < tb.size(); ++i) index[tb[i]] = i;
    const auto pos = [&](std::size_t a, std::size_t b) {
      const std::vector<FockState> st{bk[a], bl[b]};
      return index.at(make_key(st));
    };
    table_.assign(dk_ * dl_ * dk_ * dl_, Rational(0));
    for (std::size_t ok = 0; ok < dk_; ++ok) {
      for (std::size_t ol = 0; ol < dl_; ++ol) {
        for (std::size_t ik = 0; ik < dk_; ++ik) {
          for (std::size_t il = 0; il < dl_; ++il) at(ok, ol, ik, il) = m(pos(ok, ol), pos(ik, il));
        }
      }
    }
  }

  [[nodiscard]] const Rational& operator()(std::size_t ok, std::size_t ol, std::size_t ik, std::size_t il) const {
    return table_[((ok * dl_ + ol) * dk_ + ik) * dl_ + il];
  }

 private:
  Rational& at(std::size_t ok, std::size_t ol, std::size_t ik, std::size_t il) {
    return table_[((ok * dl_ + ol) * dk_ + ik) * dl_ + il];
  }

  std::size_t dk_;
  std::size_t dl_;
  std::vector<Rational> table_;
};

std::size_t label_index(const RepLabel& rep, const FockState& state) {
  const auto b = basis(RepLabel::symmetric(rep.s, rep.n));
  const auto it = std::find(b.begin(), b.end(), state);
  if (it == b.end()) throw IncompatibleError("boundary state outside the line representation " + rep.str());
  return static_cast<std::size_t>(it - b.begin());
}

}  // namespace

BaxterLattice BaxterLattice::spin_half(std::vector<std::pair<int, int>> endpoints, std::vector<Rational> theta) {
  BaxterLattice lat{std::move(endpoints), {}, std::move(theta)};
  lat.reps.assign(lat.endpoints.size(), RepLabel::conjugate(1, 2));
  return lat;
}

bool BaxterLattice::crosses(std::size_t k, std::size_t l) const {
  const auto [ik, jk] = endpoints.at(k);
  const auto [il, jl] = endpoints.at(l);
  return strictly_between(il, ik, jk) != strictly_between(jl, ik, jk);
}

bool BaxterLattice::is_spin_half() const {
  return std::all_of(reps.begin(), reps.end(), [](const RepLabel& r) { return r.n == 2 && r.s == 1; });
}

std::pair<std::size_t, bool> BaxterLattice::line_at(int endpoint) const {
  for (std::size_t k = 0; k < endpoints.size(); ++k) {
    if (endpoints[k].first == endpoint) return {k, true};
    if (endpoints[k].second == endpoint) return {k, false};
  }
  throw IncompatibleError("no line ends at " + std::to_string(endpoint));
}

void BaxterLattice::validate() const {
  const std::size_t n_lines = endpoints.size();
  if (reps.size() != n_lines || theta.size() != n_lines) {
    throw IncompatibleError("lattice needs one representation and one rapidity per line");
  }
  std::set<int> seen;
  for (const auto& [i, j] : endpoints) {
    if (!(1 <= i && i < j && j <= static_cast<int>(2 * n_lines))) {
      throw ConstraintError("endpoints (" + std::to_string(i) + "," + std::to_string(j) + ") violate 1 <= i < j <= 2N");
    }
    if (!seen.insert(i).second || !seen.insert(j).second) throw ConstraintError("endpoints must be distinct");
  }
  for (const auto& r : reps) {
    r.validate();
    if (r.n != reps.front().n) throw IncompatibleError("all lines must share the algebra rank");
  }
}

std::string BaxterLattice::str() const {
  std::string out = "G=(";
  for (std::size_t k = 0; k < endpoints.size(); ++k) {
    out += (k > 0 ? "," : "") + std::string("(") + std::to_string(endpoints[k].first) + "," +
           std::to_string(endpoints[k].second) + ")";
  }
  out += ") theta=(";
  for (std::size_t k = 0; k < theta.size(); ++k) out += (k > 0 ? "," : "") + theta[k].str();
  out += ") reps=(";
  for (std::size_t k = 0; k < reps.size(); ++k) out += (k > 0 ? "," : "") + reps[k].str();
  return out + ")";
}

BoundaryLabels spin_half_labels(const std::vector<int>& labels) {
  BoundaryLabels out;
  for (int a : labels) {
    if (a != 1 && a != 2) throw IncompatibleError("spin-1/2 labels are 1 or 2");
    out.push_back(FockState{a == 1 ? std::vector<int>{1, 0} : std::vector<int>{0, 1}});
  }
  return out;
}

BoundaryPositions default_positions(const BaxterLattice& lat) {
  const auto m = static_cast<long>(2 * lat.size());
  // Spread the points over an arc and perturb them until no three chords meet.
  for (long p = 0; p < 64; ++p) {
    BoundaryPositions pos;
    for (long k = 0; k < m; ++k) pos.t.push_back(Rational(k - m / 2) + Rational(k * k % (p + 3), 5 * (p + 3) * (m + 1)));
    try {
      vertex_orders(lat, pos);
      return pos;
    } catch (const ConstraintError&) {
    }
  }
  throw ConstraintError("no generic boundary realisation found");
}

std::vector<std::vector<std::size_t>> vertex_orders(const BaxterLattice& lat, const BoundaryPositions& pos) {
  lat.validate();
  if (pos.t.size() != 2 * lat.size()) throw IncompatibleError("need one boundary position per endpoint");
  for (std::size_t m = 1; m < pos.t.size(); ++m) {
    if (!(pos.t[m - 1] < pos.t[m])) throw ConstraintError("boundary positions must increase");
  }
  const auto point = [&](int endpoint) { return circle_point(pos.t[static_cast<std::size_t>(endpoint - 1)]); };
  std::vector<std::vector<std::size_t>> orders(lat.size());
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const Point a0 = point(lat.endpoints[k].second);
    const Point a1 = point(lat.endpoints[k].first);
    std::vector<std::pair<Rational, std::size_t>> hits;
    for (std::size_t l = 0; l < lat.size(); ++l) {
      if (l == k || !lat.crosses(k, l)) continue;
      hits.emplace_back(crossing_parameter(a0, a1, point(lat.endpoints[l].second), point(lat.endpoints[l].first)), l);
    }
    std::sort(hits.begin(), hits.end());
    for (std::size_t h = 1; h < hits.size(); ++h) {
      if (hits[h].first == hits[h - 1].first) throw ConstraintError("boundary positions realise a triple intersection");
    }
    for (const auto& hit : hits) orders[k].push_back(hit.second);
  }
  return orders;
}

Rational contract_partition_function(const BaxterLattice& lat, const BoundaryLabels& alpha) {
  return contract_partition_function(lat, alpha, default_positions(lat));
}

Rational contract_partition_function(const BaxterLattice& lat, const BoundaryLabels& alpha,
                                     const BoundaryPositions& pos) {
  const auto orders = vertex_orders(lat, pos);
  const std::size_t n_lines = lat.size();
  if (alpha.size() != 2 * n_lines) throw IncompatibleError("need one boundary label per endpoint");

  // Edges of line k: 0 leaves the j-end, orders[k].size() reaches the i-end.
  std::vector<std::size_t> offset(n_lines + 1, 0);
  for (std::size_t k = 0; k < n_lines; ++k) offset[k + 1] = offset[k] + orders[k].size() + 1;
  const std::size_t n_edges = offset[n_lines];
  std::vector<int> fixed(n_edges, -1);
  for (std::size_t k = 0; k < n_lines; ++k) {
    const auto [i, j] = lat.endpoints[k];
    const auto in = static_cast<int>(label_index(lat.reps[k], alpha[static_cast<std::size_t>(j - 1)]));
    const auto out = static_cast<int>(label_index(lat.reps[k], alpha[static_cast<std::size_t>(i - 1)]));
    if (orders[k].empty()) {
      if (in != out) return 0;
      continue;
    }
    fixed[offset[k]] = in;
    fixed[offset[k + 1] - 1] = out;
  }

  struct Vertex {
    std::size_t k;
    std::size_t l;
    std::size_t pk;  // position along line k
    std::size_t pl;
  };
  std::vector<Vertex> vertices;
  for (std::size_t k = 0; k < n_lines; ++k) {
    for (std::size_t p = 0; p < orders[k].size(); ++p) {
      const std::size_t l = orders[k][p];
      if (lat.endpoints[k].first > lat.endpoints[l].first) continue;  // counted from the line with the smaller i
      const auto& ol = orders[l];
      const auto q = static_cast<std::size_t>(std::find(ol.begin(), ol.end(), k) - ol.begin());
      vertices.push_back({k, l, p, q});
    }
  }
  // Sweep line by line along the orientation.
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    return std::pair(a.k, a.pk) < std::pair(b.k, b.pk);
  });

  // Internal edges become free once both adjacent vertices are processed.
  std::vector<int> pending(n_edges, 0);
  for (std::size_t k = 0; k < n_lines; ++k) {
    for (std::size_t e = offset[k] + 1; e + 1 < offset[k + 1]; ++e) pending[e] = 2;
  }

  std::map<std::vector<int>, Rational> frontier{{fixed, Rational(1)}};
  for (const auto& v : vertices) {
    const VertexWeights w(lat.reps[v.k], lat.reps[v.l], lat.theta[v.k], lat.theta[v.l]);
    const std::size_t ek_in = offset[v.k] + v.pk;
    const std::size_t el_in = offset[v.l] + v.pl;
    const std::size_t ek_out = ek_in + 1;
    const std::size_t el_out = el_in + 1;
    const auto dk = static_cast<int>(lat.reps[v.k].dimension());
    const auto dl = static_cast<int>(lat.reps[v.l].dimension());
    std::vector<std::size_t> release;
    for (const std::size_t e : {ek_in, el_in, ek_out, el_out}) {
      if (pending[e] > 0 && --pending[e] == 0) release.push_back(e);
    }
    std::map<std::vector<int>, Rational> next;
    const auto range = [](int assigned, int dim) {
      return assigned >= 0 ? std::pair(assigned, assigned + 1) : std::pair(0, dim);
    };
    for (const auto& [key, c] : frontier) {
      const auto [a0, a1] = range(key[ek_in], dk);
      const auto [b0, b1] = range(key[el_in], dl);
      const auto [c0, c1] = range(key[ek_out], dk);
      const auto [d0, d1] = range(key[el_out], dl);
      for (int a = a0; a < a1; ++a) {
        for (int b = b0; b < b1; ++b) {
          for (int co = c0; co < c1; ++co) {
            for (int d = d0; d < d1; ++d) {
              const Rational& weight = w(static_cast<std::size_t>(co), static_cast<std::size_t>(d),
                                         static_cast<std::size_t>(a), static_cast<std::size_t>(b));
              if (weight.is_zero()) continue;
              std::vector<int> nk = key;
              nk[ek_in] = a;
              nk[el_in] = b;
              nk[ek_out] = co;
              nk[el_out] = d;
              for (const std::size_t e : release) nk[e] = -1;
              next[nk] += c * weight;
            }
          }
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    frontier = std::move(next);
  }
  Rational total = 0;
  for (const auto& [key, c] : frontier) total += c;
  return total;
}

bool satisfies_ice_rule(const BaxterLattice& lat, const std::vector<int>& labels) {
  int i_ones = 0;
  int j_ones = 0;
  for (const auto& [i, j] : lat.endpoints) {
    i_ones += labels.at(static_cast<std::size_t>(i - 1)) == 1;
    j_ones += labels.at(static_cast<std::size_t>(j - 1)) == 1;
  }
  return i_ones == j_ones;
}

Rational perimeter_bethe_z(const BaxterLattice& lat, const std::vector<int>& labels) {
  lat.validate();
  if (!lat.is_spin_half()) throw ConstraintError("the perimeter formula needs spin-1/2 lines");
  const std::size_t n_lines = lat.size();
  if (labels.size() != 2 * n_lines) throw IncompatibleError("need one boundary label per endpoint");
  if (!satisfies_ice_rule(lat, labels)) return 0;
  WaveFunctionInput inp{std::vector<Rational>(2 * n_lines), {}, {}};
  std::vector<int> x0;
  int k_count = 0;
  for (std::size_t k = 0; k < n_lines; ++k) {
    const auto [i, j] = lat.endpoints[k];
    inp.w[static_cast<std::size_t>(i - 1)] = lat.theta[k] + 1;
    inp.w[static_cast<std::size_t>(j - 1)] = lat.theta[k] + 2;
    inp.u.push_back(lat.theta[k] + 1);
    x0.push_back(i);
    if (labels[static_cast<std::size_t>(i - 1)] == 1) inp.x.push_back(i);
    if (labels[static_cast<std::size_t>(j - 1)] == 2) inp.x.push_back(j);
    if (labels[static_cast<std::size_t>(i - 1)] == 2) ++k_count;
  }
  std::sort(inp.x.begin(), inp.x.end());
  std::sort(x0.begin(), x0.end());
  const Rational phi = wave_function(inp);
  inp.x = x0;
  const Rational c = wave_function(inp);
  if (c.is_zero()) throw PoleError("vanishing perimeter normalisation");
  return (k_count % 2 == 0 ? phi : -phi) / c;
}

CheckReport z_invariance_check(const BaxterLattice& lat, const BoundaryLabels& alpha, const BoundaryPositions& before,
                               const BoundaryPositions& after) {
  CheckReport report("Z-invariance " + lat.str());
  const bool moved = vertex_orders(lat, before) != vertex_orders(lat, after);
  const Rational z0 = contract_partition_function(lat, alpha, before);
  const Rational z1 = contract_partition_function(lat, alpha, after);
  report.add("partition function", z0 == z1,
             std::string(moved ? "vertex order changed" : "vertex order unchanged") + ", Z=" + z0.str() + " vs " +
                 z1.str());
  return report;
}

LatticeInvariant invariant_from_lattice(const BaxterLattice& lat) {
  lat.validate();
  const std::size_t n_lines = lat.size();
  if (n_lines == 0) throw ConstraintError("empty lattice");
  const int n = lat.reps.front().n;
  MonodromySpec spec{n, std::vector<SiteSpec>(2 * n_lines)};
  for (std::size_t k = 0; k < n_lines; ++k) {
    const RepLabel& r = lat.reps[k];
    if (!r.is_conjugate()) throw ConstraintError("lattice invariants need conjugate lines, got " + r.str());
    const auto [i, j] = lat.endpoints[k];
    spec.sites[static_cast<std::size_t>(i - 1)] = {RepLabel::conjugate(r.s, n), lat.theta[k]};
    spec.sites[static_cast<std::size_t>(j - 1)] = {RepLabel::symmetric(r.s, n), lat.theta[k] + r.s - 1 + n};
  }
  const auto reps = spec.reps();
  const auto positions = default_positions(lat);
  StateVector state(reps);
  for (const auto& key : tensor_basis(reps)) {
    const auto alpha = split_key(key, reps.size(), n);
    const Rational z = contract_partition_function(lat, alpha, positions);
    if (z.is_zero()) continue;
    Rational norm = 1;
    for (const auto& [i, j] : lat.endpoints) norm *= alpha[static_cast<std::size_t>(j - 1)].norm_squared();
    state.add(key, z / norm);
  }
  return {std::move(spec), std::move(state)};
}

std::vector<std::vector<std::pair<int, int>>> all_matchings(int n_lines) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(static_cast<std::size_t>(2 * n_lines + 1), false);
  const auto recurse = [&](const auto& self) -> void {
    int first = 1;
    while (first <= 2 * n_lines && used[static_cast<std::size_t>(first)]) ++first;
    if (first > 2 * n_lines) {
      out.push_back(current);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j <= 2 * n_lines; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      current.emplace_back(first, j);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  recurse(recurse);
  return out;
}

}  // namespace yangian
