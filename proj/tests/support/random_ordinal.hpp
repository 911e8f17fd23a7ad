#pragma once

#include <algorithm>
#include <random>

#include "slowcon/ordinal.hpp"

namespace slowcon::testing {

// Random CNF notation of height <= depth and coefficients in [1, max_coeff].
inline Ordinal random_ordinal(std::mt19937_64& rng, int depth, int max_coeff = 9, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(1, max_coeff);
  int m = nterms(rng);
  if (depth == 0) return Ordinal::natural(m == 0 ? 0 : coeff(rng));
  std::vector<Ordinal> exps;
  for (int i = 0; i < m; ++i) exps.push_back(random_ordinal(rng, depth - 1, max_coeff, max_terms));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> terms;
  for (auto& e : exps) terms.push_back({e, coeff(rng)});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace slowcon::testing
