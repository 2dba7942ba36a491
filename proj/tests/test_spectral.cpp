#include <random>

#include "doctest.h"
#include "ellimod/error.hpp"
#include "ellimod/oracles.hpp"
#include "ellimod/spectral.hpp"

using namespace ellimod;

namespace {

EPoint P(const char* text) { return EPoint::parse(text); }

}  // namespace

TEST_CASE("SL fibers") {
  const auto f = sl_spectral_fiber({GroupTag::SL, 4, {{4, {}}}});
  CHECK(f.degree == 4);
  CHECK(f.points == std::vector<SpectralPoint>{{EPoint{}, 4}});
  const auto g = sl_spectral_fiber({GroupTag::SL, 3, {{1, P("1/5,0")}, {1, P("4/5,0")}, {1, {}}}});
  CHECK(g.degree == 3);
  CHECK(g.points == std::vector<SpectralPoint>{{EPoint{}, 1}, {P("1/5,0"), 1}, {P("4/5,0"), 1}});
  CHECK_THROWS_AS(sl_spectral_fiber({GroupTag::SL, 3, {{1, P("1/5,0")}, {2, {}}}}), Error);
}

TEST_CASE("Sp fibers and the involution") {
  const auto f = sp_spectral_fiber({GroupTag::Sp, 1, {{2, {}}}});
  CHECK(f.degree == 2);
  CHECK(f.points == std::vector<SpectralPoint>{{EPoint{}, 2}});
  CHECK(f.involution_closed);
  CHECK(f.involution_fixed == std::vector<EPoint>{EPoint{}});
  const auto g = sp_spectral_fiber({GroupTag::Sp, 1, {{1, P("1/5,0")}, {1, P("4/5,0")}}});
  CHECK(g.involution_closed);
  CHECK(g.involution_fixed.empty());
  CHECK_THROWS_AS(sp_spectral_fiber({GroupTag::Sp, 1, {{1, P("1/5,0")}, {1, P("1/5,0")}}}), Error);

  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    auto c = build_root_system(Kind::C, n);
    for (int s = 0; s < 100; ++s) {
      const auto fiber = sp_spectral_fiber(sp_class_from_mu(oracle::random_point(c, rng)));
      std::int64_t total = 0;
      for (const auto& p : fiber.points) total += p.mult;
      CHECK(total == 2 * n);
      CHECK(fiber.involution_closed);
      for (const auto& e : fiber.involution_fixed) CHECK(e.is_two_torsion());
    }
  }
}

TEST_CASE("cover index") {
  for (int n = 2; n <= 8; ++n) {
    auto a = build_root_system(Kind::A, n - 1);
    CHECK(cover_index(*a, fundamental_coweight_multiple(*a, n - 2), 100000) == static_cast<std::uint64_t>(n));
    CHECK(cover_index(*a, fundamental_coweight_multiple(*a, 0), 100000) == static_cast<std::uint64_t>(n));
    auto c = build_root_system(Kind::C, n);
    CHECK(fundamental_coweight_multiple(*c, 0) == IntVector(n, 1));
    CHECK(cover_index(*c, fundamental_coweight_multiple(*c, 0), 100000) == static_cast<std::uint64_t>(2 * n));
  }
  auto e8 = build_root_system(Kind::E, 8);
  CHECK(cover_index(*e8, IntVector(8, 0), 10) == 1);
  // The orbit of the highest coroot is the set of 240 roots.
  CHECK(cover_index(*e8, e8->comarks(), 100000) == 240);
  try {
    cover_index(*e8, e8->comarks(), 100);
    FAIL("bound ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrbitBoundExceeded);
  }
  CHECK_THROWS_AS(cover_index(*e8, IntVector{1, 2}, 100), Error);
  CHECK_THROWS_AS(fundamental_coweight_multiple(*e8, 8), Error);
}
