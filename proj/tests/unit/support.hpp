#pragma once

#include <random>
#include <vector>

#include "yangian/yangian.hpp"

namespace yangian::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2024'0001ULL;

inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 7) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = random_rational(rng);
  return Polynomial(c);
}

inline Polynomial nonzero_polynomial(std::mt19937_64& rng, int max_degree = 3) {
  Polynomial p;
  do {
    p = random_polynomial(rng, max_degree);
  } while (p.is_zero());
  return p;
}

// Sum over a dense basis of a random state with small coefficients.
inline StateVector random_state(std::mt19937_64& rng, const std::vector<RepLabel>& sites) {
  StateVector v(sites);
  for (const auto& key : tensor_basis(sites)) v.add(key, random_rational(rng, 4, 3));
  return v;
}

}  // namespace yangian::testing
