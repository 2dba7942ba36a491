#pragma once

#include <cstdint>
#include <vector>

#include "ellimod/bundles.hpp"

namespace ellimod {

struct SpectralPoint {
  EPoint e;
  std::int64_t mult;
  bool operator==(const SpectralPoint&) const = default;
};

// Fiber of the spectral cover over the moduli point of a regular bundle.
struct SpectralFiber {
  std::vector<SpectralPoint> points;  // sorted by e, distinct
  std::int64_t degree = 0;
  // Sp only: whether p -> -p preserves the multiset, and its fixed points.
  bool involution_closed = false;
  std::vector<EPoint> involution_fixed;
};

// The divisor sum d_i (lambda_i) in |n p_0|.
SpectralFiber sl_spectral_fiber(const BundleDecomp& v);
// Points +-lambda_i with multiplicity d_i and eta_j with multiplicity 2 a_j.
SpectralFiber sp_spectral_fiber(const BundleDecomp& v);

// [W : W_0] for W_0 the stabilizer of `vector` (coroot coordinates): the
// size of its W-orbit. Throws Error(OrbitBoundExceeded) past `bound`.
std::uint64_t cover_index(const RootSystem& system, const IntVector& vector,
                          std::size_t bound);

// Smallest positive integer multiple of the fundamental coweight at `node`
// (0-based) lying in the coroot lattice, in coroot coordinates.
IntVector fundamental_coweight_multiple(const RootSystem& system, int node);

}  // namespace ellimod
