#include <cstdlib>
#include <random>

#include "doctest.h"
#include "ellimod/elltorus.hpp"
#include "ellimod/error.hpp"
#include "ellimod/oracles.hpp"

using namespace ellimod;

namespace {

EPoint P(const char* text) { return EPoint::parse(text); }

}  // namespace

TEST_CASE("E-point group law") {
  CHECK((P("1/2,0") + P("1/2,0")).is_zero());
  CHECK(-P("1/3,0") == P("2/3,0"));
  CHECK(P("1/3,2/3").scaled(3).is_zero());
  CHECK(P("1/3,2/3").scaled(-1) == P("2/3,1/3"));
  CHECK(P("5/4,-1/2") == P("1/4,1/2"));
  CHECK(P("1/6,1/4").order() == 12);
  CHECK(P("0,0").order() == 1);
  CHECK(P("1/2,1/2").is_two_torsion());
  CHECK_FALSE(P("1/4,0").is_two_torsion());
  CHECK(P("1/3,0") < P("1/2,0"));
  CHECK(P("1/3,1/5").to_string() == "1/3,1/5");
  CHECK(P(" 2/4 , 0 ").to_string() == "1/2,0");
  const auto& eta = two_torsion_points();
  CHECK(eta[0].is_zero());
  CHECK(eta[3] == eta[1] + eta[2]);
  // exact scaling with large multipliers
  CHECK(P("1/7,0").scaled(std::int64_t{1} << 62) == P("1/7,0").scaled((std::int64_t{1} << 62) % 7));
}

TEST_CASE("malformed points") {
  for (const char* bad : {"", "1/2", "1/2,0,0", "x,0", "1/0,0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(EPoint::parse(bad), Error);
  }
  auto a2 = build_root_system(Kind::A, 2);
  try {
    ELambdaPoint::parse(a2, "1/2,0");
    FAIL("accepted wrong coordinate count");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedInput);
  }
  CHECK(ELambdaPoint::parse(a2, "1/2,0;0,1/3").to_string() == "1/2,0;0,1/3");
}

TEST_CASE("root values") {
  auto a1 = build_root_system(Kind::A, 1);
  auto a2 = build_root_system(Kind::A, 2);
  const auto zero = ELambdaPoint::zero(a2);
  for (std::size_t k = 0; k < a2->num_roots(); ++k) CHECK(root_value(zero, k).is_zero());
  // <alpha, alpha^vee> = 2
  CHECK(root_value(ELambdaPoint::parse(a1, "1/2,0"), std::size_t{0}).is_zero());
  // <alpha_1 + alpha_2, alpha_1^vee> = 1
  const auto mu = ELambdaPoint::parse(a2, "1/5,0;0,0");
  CHECK(root_value(mu, IntVector{1, 1}) == P("1/5,0"));
  try {
    root_value(mu, IntVector{2, 1});
    FAIL("accepted a non-root");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RootNotInSystem);
  }
}

TEST_CASE("vanishing roots and automorphism dimension") {
  auto a1 = build_root_system(Kind::A, 1);
  auto e8 = build_root_system(Kind::E, 8);
  CHECK(vanishing_roots(ELambdaPoint::zero(a1)).size() == 2);
  CHECK(aut_dim_split(ELambdaPoint::zero(e8)) == 248);
  const auto half = ELambdaPoint::parse(a1, "1/2,0");
  CHECK(vanishing_roots(half).size() == 2);
  CHECK(aut_dim_split(half) == 3);
  CHECK_FALSE(is_regular_class(half));
  // Coordinates of coprime large orders: nothing vanishes.
  auto d5 = build_root_system(Kind::D, 5);
  const auto generic = ELambdaPoint::parse(d5, "1/101,3/103;5/107,7/109;11/113,13/127;17/131,19/137;23/139,29/149");
  CHECK(vanishing_roots(generic).empty());
  CHECK(is_regular_class(generic));
  CHECK(aut_dim_split(generic) == 5);
}

TEST_CASE("Weyl action") {
  auto a1 = build_root_system(Kind::A, 1);
  auto a2 = build_root_system(Kind::A, 2);
  const auto mu = ELambdaPoint::parse(a1, "1/3,1/5");
  CHECK(weyl_apply(WeylElement::identity(*a1), mu) == mu);
  CHECK(weyl_apply(WeylElement(*a1, {0}), mu) == ELambdaPoint::parse(a1, "2/3,4/5"));
  CHECK(weyl_apply(WeylElement(*a2, {0, 1, 0}), ELambdaPoint::zero(a2)) == ELambdaPoint::zero(a2));
  try {
    weyl_apply(WeylElement(*a2, {0}), mu);
    FAIL("mixed systems accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedSystem);
  }
}

TEST_CASE("canonical forms") {
  auto a1 = build_root_system(Kind::A, 1);
  const auto c = canonicalize(ELambdaPoint::parse(a1, "2/3,0"));
  CHECK(c.representative.to_string() == "1/3,0");
  CHECK(c.stabilizer_order == 1);
  for (auto [kind, rank] : oracle::all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    const auto z = canonicalize(ELambdaPoint::zero(sys));
    CHECK(z.representative == ELambdaPoint::zero(sys));
    CHECK(z.stabilizer_order == sys->weyl_order());
  }
  auto c2 = build_root_system(Kind::C, 2);
  const auto mu = ELambdaPoint::parse(c2, "1/2,0;0,0");
  const auto brute = oracle::brute_orbit(mu);
  const auto form = canonicalize(mu);
  CHECK(form.representative.coords() == brute.minimum);
  CHECK(form.stabilizer_order * brute.size == 8);
}

TEST_CASE("canonical form is a class invariant (property)") {
  std::mt19937_64 rng(7);
  for (auto [kind, rank] : oracle::all_types(6)) {
    const auto sys = build_root_system(kind, rank);
    for (int s = 0; s < 100; ++s) {
      const auto mu = oracle::random_point(sys, rng);
      const auto w = oracle::random_weyl(*sys, rng, 20);
      const auto nu = weyl_apply(w, mu);
      CHECK(canonicalize(mu).representative == canonicalize(nu).representative);
      CHECK(orbit_equal(mu, nu));
      CHECK(fingerprint(mu) == fingerprint(nu));
      // the representative lies in the orbit and is minimal there
      const auto rep = canonicalize(mu).representative;
      CHECK(canonicalize(rep).representative == rep);
    }
  }
}

TEST_CASE("orbit equality") {
  auto a1 = build_root_system(Kind::A, 1);
  CHECK(orbit_equal(ELambdaPoint::parse(a1, "1/3,0"), ELambdaPoint::parse(a1, "2/3,0")));
  CHECK_FALSE(orbit_equal(ELambdaPoint::parse(a1, "1/3,0"), ELambdaPoint::parse(a1, "1/3,1/7")));
  CHECK_FALSE(orbit_equal(ELambdaPoint::parse(a1, "1/3,0"), ELambdaPoint::parse(a1, "1/3,1/7"), true));
  auto a2 = build_root_system(Kind::A, 2);
  CHECK_THROWS_AS(orbit_equal(ELambdaPoint::zero(a1), ELambdaPoint::zero(a2)), Error);
}

TEST_CASE("orbit enumeration and its bound") {
  auto b3 = build_root_system(Kind::B, 3);
  const auto mu = ELambdaPoint::parse(b3, "1/101,0;1/103,0;1/107,0");
  CHECK(orbit_points(mu, 100000).size() == 48);
  CHECK(orbit_points(ELambdaPoint::zero(b3), 10).size() == 1);
  auto e8 = build_root_system(Kind::E, 8);
  try {
    orbit_points(ELambdaPoint::parse(e8, "1/101,0;1/103,0;1/107,0;1/109,0;1/113,0;1/127,0;1/131,0;1/137,0"), 1000);
    FAIL("bound ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrbitBoundExceeded);
  }
  ::setenv("ELLIMOD_ORBIT_BOUND", "1234", 1);
  CHECK(default_orbit_bound() == 1234);
  ::setenv("ELLIMOD_ORBIT_BOUND", "junk", 1);
  CHECK(default_orbit_bound() == 2000000);
  ::unsetenv("ELLIMOD_ORBIT_BOUND");
  CHECK(default_orbit_bound() == 2000000);
}
