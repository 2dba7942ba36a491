#include <random>

#include "doctest.h"
#include "ellimod/bundles.hpp"
#include "ellimod/error.hpp"
#include "ellimod/oracles.hpp"

using namespace ellimod;

namespace {

EPoint P(const char* text) { return EPoint::parse(text); }

BundleDecomp decomp(GroupTag g, std::int64_t n, std::vector<AtiyahSummand> s) {
  return {g, n, std::move(s)};
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::MalformedInput;
}

const EPoint& eta(int j) { return two_torsion_points()[j]; }

}  // namespace

TEST_CASE("SL classification examples") {
  auto c = sl_classify(decomp(GroupTag::SL, 4, {{4, {}}}));
  CHECK(c.is_regular);
  CHECK(c.aut_dim == 3);
  c = sl_classify(decomp(GroupTag::SL, 2, {{1, {}}, {1, {}}}));
  CHECK_FALSE(c.is_regular);
  CHECK(c.aut_dim == 3);
  c = sl_classify(decomp(GroupTag::SL, 2, {{1, P("1/3,0")}, {1, P("2/3,0")}}));
  CHECK(c.is_regular);
  CHECK(c.aut_dim == 1);
  // I_2(0) + O: Hom dims 2 + 1 + 1 + 1
  c = sl_classify(decomp(GroupTag::SL, 3, {{2, {}}, {1, {}}}));
  CHECK_FALSE(c.is_regular);
  CHECK(c.aut_dim == 4);
}

TEST_CASE("SL validation errors") {
  CHECK(code_of([] { sl_classify(decomp(GroupTag::SL, 3, {{2, {}}})); }) == ErrorCode::RankMismatch);
  CHECK(code_of([] { sl_classify(decomp(GroupTag::SL, 2, {{1, P("1/3,0")}, {1, {}}})); }) ==
        ErrorCode::DeterminantNotTrivial);
  CHECK(code_of([] { sl_classify(decomp(GroupTag::Sp, 1, {{2, {}}})); }) == ErrorCode::WrongSystemType);
  CHECK(code_of([] { sl_classify(decomp(GroupTag::SL, 2, {{0, {}}, {2, {}}})); }) ==
        ErrorCode::InvalidParameter);
}

TEST_CASE("Sp validation") {
  CHECK(sp_validate(decomp(GroupTag::Sp, 1, {{2, {}}})) == 1);
  CHECK(sp_validate(decomp(GroupTag::Sp, 1, {{1, P("1/5,0")}, {1, P("4/5,0")}})) == 1);
  CHECK(sp_validate(decomp(GroupTag::Sp, 3, {{2, eta(1)}, {2, P("1/5,0")}, {2, P("4/5,0")}})) == 3);
  CHECK(code_of([] { sp_validate(decomp(GroupTag::Sp, 2, {{3, eta(1)}, {1, eta(1)}})); }) ==
        ErrorCode::OddBlockAtTwoTorsion);
  CHECK(code_of([] { sp_validate(decomp(GroupTag::Sp, 2, {{2, eta(1)}, {2, eta(1)}})); }) ==
        ErrorCode::RepeatedTwist);
  CHECK(code_of([] { sp_validate(decomp(GroupTag::Sp, 1, {{1, P("1/5,0")}, {1, P("1/5,0")}})); }) ==
        ErrorCode::RepeatedTwist);
  CHECK(code_of([] { sp_validate(decomp(GroupTag::Sp, 1, {{1, P("1/5,0")}, {1, P("2/5,0")}})); }) ==
        ErrorCode::UnpairedSummand);
  CHECK(code_of([] { sp_validate(decomp(GroupTag::Sp, 1, {{2, P("1/5,0")}, {1, P("4/5,0")}})); }) ==
        ErrorCode::UnpairedSummand);
  CHECK(code_of([] { sp_validate(decomp(GroupTag::Sp, 2, {{2, {}}})); }) == ErrorCode::RankMismatch);
}

TEST_CASE("SO validation") {
  // SO(4): I_1(eta_0) + eta_0 + I_1(eta_1) + eta_1
  CHECK(so_validate(decomp(GroupTag::SOEven, 2, {{1, eta(0)}, {1, eta(0)}, {1, eta(1)}, {1, eta(1)}})) == 2);
  // SO(3): I_3(0)
  CHECK(so_validate(decomp(GroupTag::SOOdd, 1, {{3, {}}})) == 1);
  // SO(5): I_1(0) + I_1(eta_1) + eta_1 + ... paired part
  CHECK(so_validate(decomp(GroupTag::SOOdd, 2, {{1, {}}, {1, P("1/3,0")}, {1, P("2/3,0")}, {1, eta(2)}, {1, eta(2)}}))
        == 2);
  // All four twists odd without companions: does not lift.
  CHECK(code_of([] {
          so_validate(decomp(GroupTag::SOEven, 3, {{3, eta(0)}, {1, eta(1)}, {1, eta(2)}, {1, eta(3)}}));
        }) == ErrorCode::NonLiftable);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOOdd, 2, {{1, eta(0)}, {1, eta(1)}, {1, eta(2)}, {1, eta(3)}, {1, {}}})); })
        == ErrorCode::OutsideShape);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOOdd, 1, {{1, eta(1)}, {1, eta(1)}, {1, eta(2)}})); }) ==
        ErrorCode::MissingOddBlock);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOEven, 2, {{3, eta(1)}, {1, eta(2)}})); }) ==
        ErrorCode::MissingCompanionLine);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOEven, 1, {{2, eta(1)}})); }) == ErrorCode::ParityViolation);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOEven, 2, {{1, eta(1)}, {1, eta(1)}, {1, eta(1)}, {1, eta(1)}})); })
        == ErrorCode::RepeatedTwist);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOEven, 2, {{1, eta(1)}, {1, eta(1)}})); }) == ErrorCode::RankMismatch);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SOEven, 1, {{1, P("1/3,0")}, {1, P("1/4,0")}})); }) ==
        ErrorCode::UnpairedSummand);
  CHECK(code_of([] { so_validate(decomp(GroupTag::SL, 1, {{1, {}}})); }) == ErrorCode::WrongSystemType);
}

TEST_CASE("adjoint bundles") {
  auto a1 = build_root_system(Kind::A, 1);
  auto a2 = build_root_system(Kind::A, 2);
  auto e8 = build_root_system(Kind::E, 8);
  CHECK(regular_adjoint_blocks(ELambdaPoint::zero(a1)).unipotent_blocks == IntVector{3});
  CHECK(regular_adjoint_blocks(ELambdaPoint::zero(e8)).unipotent_blocks ==
        IntVector{3, 15, 23, 27, 35, 39, 47, 59});
  const auto generic = ELambdaPoint::parse(a2, "1/101,1/103;1/107,1/109");
  CHECK(regular_adjoint_blocks(generic).unipotent_blocks == IntVector{1, 1});
  const auto split = split_adjoint(generic);
  CHECK(split.unipotent_blocks == IntVector{1, 1});
  REQUIRE(split.line_summands.size() == 6);
  for (const auto& e : split.line_summands) {
    CHECK_FALSE(e.is_zero());
    CHECK(std::count(split.line_summands.begin(), split.line_summands.end(), -e) == 1);
  }
  // Vanishing subsystem {+-alpha_1}: A_1 plus a central C^*.
  const auto wall = ELambdaPoint::parse(a2, "1/101,0;2/101,0");
  REQUIRE(vanishing_roots(wall).size() == 2);
  CHECK(regular_adjoint_blocks(wall).unipotent_blocks == IntVector{1, 3});
  const auto half = split_adjoint(ELambdaPoint::parse(a1, "1/2,0"));
  CHECK(half.unipotent_blocks == IntVector{1});
  CHECK(half.line_summands == std::vector<EPoint>{EPoint{}, EPoint{}});
}

TEST_CASE("classes from mu") {
  auto a2 = build_root_system(Kind::A, 2);
  auto c2 = build_root_system(Kind::C, 2);
  for (int r = 1; r <= 7; ++r) {
    const auto v = sl_class_from_mu(ELambdaPoint::zero(build_root_system(Kind::A, r)));
    REQUIRE(v.summands.size() == 1);
    CHECK(v.summands[0].d == r + 1);
    CHECK(v.summands[0].lambda.is_zero());
  }
  // e = (e, -e, 0): c_1 = e, c_2 = 0
  const auto v = sl_class_from_mu(ELambdaPoint::parse(a2, "1/7,0;0,0"));
  CHECK(v.normalized().summands ==
        std::vector<AtiyahSummand>{{1, P("0,0")}, {1, P("1/7,0")}, {1, P("6/7,0")}});
  CHECK(sl_classify(v).is_regular);
  // e = (eta_1, e): c_1 = eta_1, c_2 = eta_1 + e
  const auto w = sp_class_from_mu(ELambdaPoint::parse(c2, "1/2,0;9/14,0"));
  CHECK(w.summands == std::vector<AtiyahSummand>{{1, P("1/7,0")}, {2, P("1/2,0")}, {1, P("6/7,0")}});
  CHECK(sp_validate(w) == 2);
  CHECK_THROWS_AS(sl_class_from_mu(ELambdaPoint::zero(c2)), Error);
  CHECK_THROWS_AS(sp_class_from_mu(ELambdaPoint::zero(a2)), Error);
}

TEST_CASE("classes from mu are regular (property)") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 8; ++n) {
    auto a = build_root_system(Kind::A, n - 1);
    auto c = build_root_system(Kind::C, n);
    for (int s = 0; s < 200; ++s) {
      const auto mu = oracle::random_point(a, rng);
      const auto cls = sl_classify(sl_class_from_mu(mu));
      CHECK(cls.is_regular);
      CHECK(cls.aut_dim == n - 1);
      CHECK(sp_validate(sp_class_from_mu(oracle::random_point(c, rng))) == n);
    }
  }
}

TEST_CASE("unipotent Hom oracle agrees with min(a, b)") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) CHECK(oracle::unipotent_hom_dimension(a, b) == std::min(a, b));
}

TEST_CASE("bundle calculus") {
  using B = BundleExpr;
  for (int n = 3; n <= 12; ++n) {
    const auto sym = bundle_calculus(B::stable(n).sym2().dual());
    CHECK(sym.rank == n * (n + 1) / 2);
    CHECK(sym.degree == -(n + 1));
    CHECK(sym.h1 == n + 1);
    CHECK(sym.h0 == 0);
    for (int d = 1; d < n; ++d) {
      const auto t = bundle_calculus((B::stable(n - d) * B::stable(d)).dual());
      CHECK(t.degree == -n);
      CHECK(t.h1 == n);
    }
    CHECK(bundle_calculus(B::stable(n - 2).wedge2().dual()).h1 == n - 3);
    CHECK(bundle_calculus(B::q4() * B::stable(n - 2).dual()).h1 == 4);
  }
  CHECK(bundle_calculus(B::stable(3)).h0 == 1);
  CHECK(bundle_calculus(B::line(2) + B::line(-3, P("1/2,0"))).h0 == 2);
  CHECK(bundle_calculus(B::line(2) + B::line(-3, P("1/2,0"))).h1 == 3);
  try {
    bundle_calculus(B::q4());
    FAIL("degree 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeZeroCohomology);
  }
  CHECK_THROWS_AS(bundle_calculus(B::stable(2) * B::stable(2).dual()), Error);
  CHECK_THROWS_AS(B::stable(0), Error);
}

TEST_CASE("expansion agrees with explicit line-bundle sums") {
  using B = BundleExpr;
  // V = L_1 + L_2 + L_3 with degrees 1, 2, -4; Sym^2, Wedge^2 and V x V* by hand.
  const auto v = B::line(1) + B::line(2, P("1/3,0")) + B::line(-4, P("0,1/2"));
  auto degrees = [](const B& e) {
    std::vector<std::int64_t> out;
    for (const auto& t : e.expand()) {
      CHECK(t.rank() == 1);
      out.push_back(t.degree());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(degrees(v.sym2()) == std::vector<std::int64_t>{-8, -3, -2, 2, 3, 4});
  CHECK(degrees(v.wedge2()) == std::vector<std::int64_t>{-3, -2, 3});
  CHECK(v.sym2().degree() == 4 * v.degree());
  CHECK(v.wedge2().degree() == 2 * v.degree());
  CHECK(B::stable(3).wedge2().rank() == 3);
  CHECK(B::stable(3).wedge2().degree() == 2);
  CHECK(B::line(5).wedge2().expand().empty());
  CHECK(bundle_calculus(B::stable(1).wedge2().dual()).h1 == 0);
  CHECK_FALSE(v.to_string().empty());
}
