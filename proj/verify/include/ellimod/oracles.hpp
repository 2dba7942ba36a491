#pragma once

// Reference computations used to cross-check the library. Each one takes a
// different route from the production code: roots by alpha-strings instead
// of reflection closure, comarks from root lengths, exponents from the
// height partition, orbits by plain breadth-first search.

#include <cstdint>
#include <random>
#include <vector>

#include "ellimod/elltorus.hpp"

namespace ellimod::oracle {

IntMatrix cartan(Kind kind, int rank);

struct RootData {
  std::vector<IntVector> positive;  // simple-root coordinates
  IntVector highest;
  std::vector<Rational> lengths;  // squared lengths of simple roots, alpha_1 = 1
};

RootData positive_roots(Kind kind, int rank);

IntVector comarks(Kind kind, int rank);
IntVector wp_weights(Kind kind, int rank);  // 1 followed by the comarks
IntVector exponents(Kind kind, int rank);   // ascending
std::int64_t dimension(Kind kind, int rank);
std::int64_t determinant(Kind kind, int rank);
// Closed formulas: (r+1)!, 2^r r!, 2^(r-1) r!, and the exceptional orders.
std::uint64_t weyl_order(Kind kind, int rank);

// Number of roots alpha with alpha(mu) = 0, by direct evaluation.
std::int64_t vanishing_count(const ELambdaPoint& mu);

// Dimension of {X : J_b X = X J_a} for nilpotent Jordan blocks J_a, J_b,
// by rational Gaussian elimination.
std::int64_t unipotent_hom_dimension(int a, int b);

// dim End(V) for V = sum of I_{d_i}(lambda_i), summed block by block.
std::int64_t end_dimension(const std::vector<std::pair<std::int64_t, EPoint>>& blocks);

struct BruteOrbit {
  std::vector<EPoint> minimum;  // lexicographically least orbit point
  std::uint64_t size = 0;
};

// Whole W-orbit by breadth-first search over simple reflections.
BruteOrbit brute_orbit(const ELambdaPoint& mu);

// #{g in weights : d | g}.
std::int64_t divisibility_count(const IntVector& weights, std::int64_t d);

// All (kind, rank) pairs with rank <= max_rank.
std::vector<std::pair<Kind, int>> all_types(int max_rank);

// Random points of finite order with denominators in {1, 2, 3, 4, 5, 6, 8, 12},
// biased toward small denominators so that walls are hit often.
EPoint random_torsion(std::mt19937_64& rng);
ELambdaPoint random_point(const std::shared_ptr<const RootSystem>& system,
                          std::mt19937_64& rng);
WeylElement random_weyl(const RootSystem& system, std::mt19937_64& rng,
                        int max_length);

}  // namespace ellimod::oracle
