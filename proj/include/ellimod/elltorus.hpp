#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellimod/rational.hpp"
#include "ellimod/rootsys.hpp"

namespace ellimod {

// Torsion point a + b*tau of E = C / (Z + tau Z), stored with 0 <= a, b < 1.
class EPoint {
 public:
  EPoint() = default;
  EPoint(Rational a, Rational b) : a_(frac_part(a)), b_(frac_part(b)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  EPoint operator+(const EPoint& q) const { return {a_ + q.a_, b_ + q.b_}; }
  EPoint operator-(const EPoint& q) const { return {a_ - q.a_, b_ - q.b_}; }
  EPoint operator-() const { return {-a_, -b_}; }
  EPoint& operator+=(const EPoint& q) { return *this = *this + q; }

  // k * p, exact for any 64-bit k.
  EPoint scaled(std::int64_t k) const;

  bool is_zero() const { return a_.numerator() == 0 && b_.numerator() == 0; }
  bool is_two_torsion() const { return scaled(2).is_zero(); }
  // Order in the group E: lcm of the two denominators.
  std::int64_t order() const;

  bool operator==(const EPoint&) const = default;
  // Lexicographic on (a, b) with the natural order of rationals.
  std::strong_ordering operator<=>(const EPoint& q) const;

  std::string to_string() const;  // "a,b"
  static EPoint parse(std::string_view text);

 private:
  Rational a_{0};
  Rational b_{0};
};

inline EPoint operator*(std::int64_t k, const EPoint& p) { return p.scaled(k); }

// eta_0 = O, eta_1 = 1/2, eta_2 = tau/2, eta_3 = (1 + tau)/2.
const std::array<EPoint, 4>& two_torsion_points();

// mu in E (x) Lambda: one E-point per simple coroot.
class ELambdaPoint {
 public:
  ELambdaPoint(std::shared_ptr<const RootSystem> system, std::vector<EPoint> coords);
  static ELambdaPoint zero(std::shared_ptr<const RootSystem> system);

  const RootSystem& system() const { return *system_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return system_; }
  const std::vector<EPoint>& coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }

  bool operator==(const ELambdaPoint& other) const;

  // Textual form "a,b;c,d;..." (one "a,b" pair per coordinate).
  std::string to_string() const;
  static ELambdaPoint parse(std::shared_ptr<const RootSystem> system,
                            std::string_view text);

 private:
  std::shared_ptr<const RootSystem> system_;
  std::vector<EPoint> coords_;
};

struct OrbitCanonicalForm {
  ELambdaPoint representative;
  std::uint64_t stabilizer_order;
};

EPoint root_value(const ELambdaPoint& mu, std::size_t root_index);
EPoint root_value(const ELambdaPoint& mu, std::span<const std::int64_t> root);

// Indices (into system().roots()) of the roots with alpha(mu) = 0.
std::vector<std::size_t> vanishing_roots(const ELambdaPoint& mu);
bool is_regular_class(const ELambdaPoint& mu);
// h^0(E; ad xi_0) of the split representative: r + #vanishing roots.
std::int64_t aut_dim_split(const ELambdaPoint& mu);

ELambdaPoint weyl_apply(const WeylElement& w, const ELambdaPoint& mu);

// Lexicographically minimal point of the W-orbit (flattened a_1, b_1, a_2,
// b_2, ...) together with the order of the stabilizer of mu.
OrbitCanonicalForm canonicalize(const ELambdaPoint& mu);

// Sorted multiset {alpha(mu)}; a W-invariant.
std::vector<EPoint> fingerprint(const ELambdaPoint& mu);

// Exact orbit equality. With heuristic = true only the fingerprints are
// compared, which is not a proof of equality.
bool orbit_equal(const ELambdaPoint& mu, const ELambdaPoint& nu,
                 bool heuristic = false);

// Breadth-first enumeration of the W-orbit of mu by simple reflections.
// Throws Error(OrbitBoundExceeded) once more than `bound` points are found.
std::vector<ELambdaPoint> orbit_points(const ELambdaPoint& mu, std::size_t bound);

// Orbit enumeration guard: ELLIMOD_ORBIT_BOUND if set, else 2'000'000.
std::size_t default_orbit_bound();

}  // namespace ellimod
