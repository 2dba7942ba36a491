#include "ellimod/spectral.hpp"

#include <map>
#include <numeric>
#include <set>

#include "ellimod/error.hpp"

namespace ellimod {

namespace {

std::vector<SpectralPoint> merge(const std::vector<AtiyahSummand>& summands) {
  std::map<EPoint, std::int64_t> mult;
  for (const auto& s : summands) mult[s.lambda] += s.d;
  std::vector<SpectralPoint> out;
  for (const auto& [e, m] : mult) out.push_back({e, m});
  return out;
}

}  // namespace

SpectralFiber sl_spectral_fiber(const BundleDecomp& v) {
  sl_classify(v);  // rank and determinant checks
  SpectralFiber fiber;
  fiber.points = merge(v.summands);
  fiber.degree = v.n;
  return fiber;
}

SpectralFiber sp_spectral_fiber(const BundleDecomp& v) {
  sp_validate(v);
  SpectralFiber fiber;
  fiber.points = merge(v.summands);
  fiber.degree = 2 * v.n;
  std::map<EPoint, std::int64_t> mult;
  for (const auto& p : fiber.points) mult[p.e] = p.mult;
  fiber.involution_closed = true;
  for (const auto& p : fiber.points) {
    auto it = mult.find(-p.e);
    if (it == mult.end() || it->second != p.mult) fiber.involution_closed = false;
    if (p.e == -p.e) fiber.involution_fixed.push_back(p.e);
  }
  return fiber;
}

std::uint64_t cover_index(const RootSystem& system, const IntVector& vector,
                          std::size_t bound) {
  if (static_cast<int>(vector.size()) != system.rank())
    throw Error(ErrorCode::MalformedInput,
                "orbit vector needs " + std::to_string(system.rank()) + " coordinates");
  std::set<IntVector> seen{vector};
  std::vector<IntVector> queue{vector};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i = 0; i < system.rank(); ++i) {
      IntVector image = system.coroot_reflection(i).apply(queue[head]);
      if (seen.insert(image).second) {
        if (queue.size() >= bound)
          throw Error(ErrorCode::OrbitBoundExceeded,
                      "orbit exceeds bound " + std::to_string(bound) +
                          " (set ELLIMOD_ORBIT_BOUND to raise it)");
        queue.push_back(std::move(image));
      }
    }
  }
  return queue.size();
}

IntVector fundamental_coweight_multiple(const RootSystem& system, int node) {
  const int r = system.rank();
  if (node < 0 || node >= r)
    throw Error(ErrorCode::InvalidParameter, "node out of range");
  // Solve sum_k v_k cartan(k, j) = delta_{j,node}, i.e. cartan^T v = e_node.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r + 1));
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) a[j][k] = Rational(system.cartan()(k, j));
    a[j][r] = Rational(j == node ? 1 : 0);
  }
  for (int col = 0; col < r; ++col) {
    int pivot = col;
    while (a[pivot][col].numerator() == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (int i = 0; i < r; ++i) {
      if (i == col || a[i][col].numerator() == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (int k = col; k <= r; ++k) a[i][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> v(r);
  std::int64_t den = 1;
  for (int i = 0; i < r; ++i) {
    v[i] = a[i][r] / a[i][i];
    den = std::lcm(den, v[i].denominator());
  }
  IntVector out(r);
  for (int i = 0; i < r; ++i) out[i] = (v[i] * den).numerator();
  return out;
}

}  // namespace ellimod
