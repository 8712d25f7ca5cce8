#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yangian/fock.hpp"
#include "yangian/monodromy.hpp"
#include "yangian/report.hpp"

namespace yangian {

// N chords of a disk with endpoints (i_k, j_k), 1 <= i_k < j_k <= 2N, labelled counterclockwise.
// Line k is oriented from j_k towards i_k and carries a representation and a rapidity.
struct BaxterLattice {
  std::vector<std::pair<int, int>> endpoints;
  std::vector<RepLabel> reps;
  std::vector<Rational> theta;

  // All lines in the two-dimensional representation of gl(2).
  static BaxterLattice spin_half(std::vector<std::pair<int, int>> endpoints, std::vector<Rational> theta);

  [[nodiscard]] std::size_t size() const { return endpoints.size(); }
  [[nodiscard]] bool crosses(std::size_t k, std::size_t l) const;
  [[nodiscard]] bool is_spin_half() const;
  // Line owning the endpoint, and whether the endpoint is its i-end.
  [[nodiscard]] std::pair<std::size_t, bool> line_at(int endpoint) const;
  void validate() const;
  [[nodiscard]] std::string str() const;
};

// One state per endpoint 1..2N, in the representation of the line owning it.
using BoundaryLabels = std::vector<FockState>;

// Spin-1/2 labels: 1 -> (1,0), 2 -> (0,1).
BoundaryLabels spin_half_labels(const std::vector<int>& labels);

// Endpoint m sits at the rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) of the unit circle,
// t strictly increasing in m.
struct BoundaryPositions {
  std::vector<Rational> t;
};

BoundaryPositions default_positions(const BaxterLattice& lat);

// For every line the crossing lines in the order met from j_k towards i_k. Throws
// ConstraintError when the positions realise a triple intersection.
std::vector<std::vector<std::size_t>> vertex_orders(const BaxterLattice& lat, const BoundaryPositions& pos);

// Sum over internal edge states of the product of vertex weights. Spin-1/2 vertices use
// R(x) = (x + P)/(x + 1); other vertices use the hopping R-matrix at
// theta_k - theta_l + s_k - s_l with the monomial basis, k being the line with the smaller i.
Rational contract_partition_function(const BaxterLattice& lat, const BoundaryLabels& alpha);
Rational contract_partition_function(const BaxterLattice& lat, const BoundaryLabels& alpha,
                                     const BoundaryPositions& pos);

// Global ice rule: as many i-ends as j-ends carry label 1.
bool satisfies_ice_rule(const BaxterLattice& lat, const std::vector<int>& labels);

// Closed form C^{-1} (-1)^K Phi(w, u, x) at half filling; spin-1/2 lattices only.
Rational perimeter_bethe_z(const BaxterLattice& lat, const std::vector<int>& labels);

// Compares contractions for two boundary realisations of the same lattice.
CheckReport z_invariance_check(const BaxterLattice& lat, const BoundaryLabels& alpha, const BoundaryPositions& before,
                               const BoundaryPositions& after);

struct LatticeInvariant {
  MonodromySpec spec;
  StateVector state;
};

// Conjugate(s) lines: site i_k is Conjugate(s) at theta_k and site j_k is Symmetric(s) at
// theta_k + s - 1 + n. Components are Z(alpha) divided by the monomial norms of the j-end states.
LatticeInvariant invariant_from_lattice(const BaxterLattice& lat);

// Every perfect matching of 1..2N as sorted endpoint pairs.
std::vector<std::vector<std::pair<int, int>>> all_matchings(int n_lines);

}  // namespace yangian
