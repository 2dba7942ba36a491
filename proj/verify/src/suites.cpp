#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ellimod/bundles.hpp"
#include "ellimod/error.hpp"
#include "ellimod/moduli.hpp"
#include "ellimod/oracles.hpp"
#include "ellimod/spectral.hpp"
#include "ellimod/verify.hpp"

namespace ellimod {

namespace {

using oracle::all_types;

std::string str(const IntVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

// Counts checks and keeps the first failure message.
class Tally {
 public:
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = describe();
    return ok;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t checks() const { return checks_; }

 private:
  std::size_t checks_ = 0;
  std::string failure_;
};

std::mt19937_64 rng_for(const VerifyOptions& options, int id) {
  std::seed_seq seq{options.seed, static_cast<std::uint64_t>(id)};
  return std::mt19937_64(seq);
}

void weight_tables(Tally& t, const VerifyOptions&) {
  for (auto [kind, rank] : all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    const IntVector got = wp_weights(*sys);
    const IntVector want = oracle::wp_weights(kind, rank);
    t.expect(got == want, [&] {
      return sys->name() + ": wp_weights " + str(got) + " != oracle " + str(want);
    });
    t.expect(sys->cartan() == oracle::cartan(kind, rank),
             [&] { return sys->name() + ": Cartan matrix differs from oracle"; });
    if (kind == Kind::A || kind == Kind::C)
      t.expect(std::all_of(got.begin(), got.end(), [](auto g) { return g == 1; }),
               [&] { return sys->name() + ": weights not all 1"; });
  }
}

void weyl_identity(Tally& t, const VerifyOptions&) {
  for (auto [kind, rank] : all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    if (!sys->simply_laced()) continue;
    std::uint64_t rhs = 1;
    for (int k = 2; k <= rank; ++k) rhs *= k;
    for (auto g : oracle::comarks(kind, rank)) rhs *= g;
    rhs *= oracle::determinant(kind, rank);
    t.expect(sys->weyl_order() == rhs, [&] {
      return sys->name() + ": |W| = " + std::to_string(sys->weyl_order()) +
             " but r! prod(g) det = " + std::to_string(rhs);
    });
    t.expect(sys->weyl_order() == oracle::weyl_order(kind, rank), [&] {
      return sys->name() + ": |W| differs from the order formula";
    });
    t.expect(verify_weyl_identity(*sys),
             [&] { return sys->name() + ": verify_weyl_identity returned false"; });
  }
  t.expect(build_root_system(Kind::E, 8)->weyl_order() == 696729600,
           [] { return "E8: |W| != 696729600"; });
}

void casimir_consistency(Tally& t, const VerifyOptions&) {
  for (auto [kind, rank] : all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    const IntVector d = casimir_weights(*sys);
    IntVector want;
    for (auto m : oracle::exponents(kind, rank)) want.push_back(m + 1);
    t.expect(d == want, [&] {
      return sys->name() + ": Casimir weights " + str(d) + " != oracle " + str(want);
    });
    std::uint64_t prod = 1;
    std::int64_t sum = 0;
    for (auto x : d) {
      prod *= x;
      sum += 2 * x - 1;
    }
    t.expect(prod == oracle::weyl_order(kind, rank) && prod == sys->weyl_order(),
             [&] { return sys->name() + ": prod d_i = " + std::to_string(prod) + " != |W|"; });
    t.expect(sum == oracle::dimension(kind, rank) && sum == sys->dimension(), [&] {
      return sys->name() + ": sum(2 d_i - 1) = " + std::to_string(sum) + " != dim g";
    });
  }
  IntVector e8 = casimir_weights(*build_root_system(Kind::E, 8));
  std::int64_t sum = 0;
  for (auto x : e8) sum += 2 * x - 1;
  t.expect(sum == 248, [] { return "E8: sum(2 d_i - 1) != 248"; });
}

void trivial_class_blocks(Tally& t, const VerifyOptions&) {
  for (auto [kind, rank] : all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    const AdjointShape shape = regular_adjoint_blocks(ELambdaPoint::zero(sys));
    IntVector want;
    for (auto m : oracle::exponents(kind, rank)) want.push_back(2 * m + 1);
    t.expect(shape.unipotent_blocks == want, [&] {
      return sys->name() + ": blocks " + str(shape.unipotent_blocks) + " != " + str(want);
    });
    const auto total = std::accumulate(shape.unipotent_blocks.begin(),
                                       shape.unipotent_blocks.end(), std::int64_t{0});
    t.expect(total == oracle::dimension(kind, rank),
             [&] { return sys->name() + ": block sizes do not add up to dim g"; });
  }
  const auto a1 = regular_adjoint_blocks(ELambdaPoint::zero(build_root_system(Kind::A, 1)));
  t.expect(a1.unipotent_blocks == IntVector{3}, [] { return "A1: trivial class is not I_3"; });
}

void regularity_law(Tally& t, const VerifyOptions& options) {
  auto rng = rng_for(options, 5);
  for (auto [kind, rank] : all_types(6)) {
    const auto sys = build_root_system(kind, rank);
    std::size_t walls = 0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      const ELambdaPoint mu = oracle::random_point(sys, rng);
      const std::int64_t v = oracle::vanishing_count(mu);
      const std::int64_t aut = aut_dim_split(mu);
      const bool regular = is_regular_class(mu);
      if (v > 0) ++walls;
      auto where = [&] { return sys->name() + " at mu = " + mu.to_string() + ": "; };
      t.expect(aut == rank + v, [&] {
        return where() + "aut_dim_split " + std::to_string(aut) + " != r + " + std::to_string(v);
      });
      t.expect(regular == (v == 0) && regular == (aut == rank),
               [&] { return where() + "regularity disagrees with aut_dim_split = r"; });
      t.expect(static_cast<std::int64_t>(vanishing_roots(mu).size()) == v,
               [&] { return where() + "vanishing_roots count differs from oracle"; });
      const AdjointShape shape = regular_adjoint_blocks(mu);
      const auto total = std::accumulate(shape.unipotent_blocks.begin(),
                                         shape.unipotent_blocks.end(), std::int64_t{0});
      t.expect(static_cast<int>(shape.unipotent_blocks.size()) == rank && total == aut, [&] {
        return where() + "regular blocks " + str(shape.unipotent_blocks) +
               " are not r blocks summing to aut_dim_split";
      });
    }
    t.expect(walls > 0, [&] { return sys->name() + ": sampler never hit a wall"; });
  }
}

void canonicalization(Tally& t, const VerifyOptions& options) {
  auto rng = rng_for(options, 6);
  for (auto [kind, rank] : all_types(6)) {
    const auto sys = build_root_system(kind, rank);
    for (std::size_t s = 0; s < options.samples; ++s) {
      const ELambdaPoint mu = oracle::random_point(sys, rng);
      const WeylElement w = oracle::random_weyl(*sys, rng, 4 * rank + 4);
      const auto c1 = canonicalize(mu);
      const auto c2 = canonicalize(weyl_apply(w, mu));
      t.expect(c1.representative == c2.representative &&
                   c1.stabilizer_order == c2.stabilizer_order,
               [&] {
                 return sys->name() + ": canonical forms of " + mu.to_string() +
                        " and its image differ";
               });
    }
    if (sys->weyl_order() > 10000) continue;
    const std::size_t brute = std::max<std::size_t>(options.samples / 50, 5);
    for (std::size_t s = 0; s < brute; ++s) {
      const ELambdaPoint mu = s == 0 ? ELambdaPoint::zero(sys) : oracle::random_point(sys, rng);
      const auto orbit = oracle::brute_orbit(mu);
      const auto canon = canonicalize(mu);
      t.expect(canon.representative.coords() == orbit.minimum, [&] {
        return sys->name() + ": canonical form of " + mu.to_string() +
               " is not the orbit minimum " + ELambdaPoint(sys, orbit.minimum).to_string();
      });
      t.expect(canon.stabilizer_order * orbit.size == sys->weyl_order(), [&] {
        return sys->name() + ": stabilizer order of " + mu.to_string() +
               " inconsistent with orbit size " + std::to_string(orbit.size);
      });
    }
  }
}

void classifier_oracles(Tally& t, const VerifyOptions& options) {
  auto rng = rng_for(options, 7);
  for (int n = 2; n <= 8; ++n) {
    const auto sys = build_root_system(Kind::A, n - 1);
    for (std::size_t s = 0; s < options.samples; ++s) {
      // Random composition of n; the last block is a line fixing det = O.
      BundleDecomp v{GroupTag::SL, n, {}};
      std::int64_t left = n;
      EPoint det;
      while (left > 1) {
        std::uniform_int_distribution<std::int64_t> size(1, left - 1);
        const std::int64_t d = size(rng);
        const EPoint lambda = oracle::random_torsion(rng);
        v.summands.push_back({d, lambda});
        det += lambda.scaled(d);
        left -= d;
      }
      v.summands.push_back({1, -det});
      std::vector<std::pair<std::int64_t, EPoint>> blocks;
      std::set<EPoint> twists;
      for (const auto& x : v.summands) {
        blocks.emplace_back(x.d, x.lambda);
        twists.insert(x.lambda);
      }
      const auto got = sl_classify(v);
      const std::int64_t want = oracle::end_dimension(blocks) - 1;
      t.expect(got.aut_dim == want, [&] {
        return "SL(" + std::to_string(n) + "): aut_dim " + std::to_string(got.aut_dim) +
               " != Hom oracle " + std::to_string(want);
      });
      t.expect(got.is_regular == (twists.size() == v.summands.size()),
               [&] { return "SL(" + std::to_string(n) + "): regularity flag wrong"; });
    }
    for (std::size_t s = 0; s < options.samples; ++s) {
      const ELambdaPoint mu = oracle::random_point(sys, rng);
      const BundleDecomp v = sl_class_from_mu(mu);
      const auto c = sl_classify(v);
      t.expect(c.is_regular && c.aut_dim == n - 1, [&] {
        return "SL(" + std::to_string(n) + "): class of " + mu.to_string() +
               " is not regular with aut_dim n - 1";
      });
      std::int64_t squares = 0;
      for (const auto& x : v.summands) squares += x.d * x.d;
      t.expect(squares - 1 == aut_dim_split(mu) &&
                   squares - 1 == (n - 1) + oracle::vanishing_count(mu),
               [&] {
                 return "SL(" + std::to_string(n) + "): split representative of " +
                        mu.to_string() + " has the wrong automorphism dimension";
               });
    }
  }
}

void dimension_counts(Tally& t, const VerifyOptions&) {
  using B = BundleExpr;
  for (int n = 3; n <= 12; ++n) {
    const std::string tag = "n = " + std::to_string(n) + ": ";
    for (int d = 1; d < n; ++d) {
      const auto c = bundle_calculus((B::stable(n - d) * B::stable(d)).dual());
      t.expect(c.h1 == n && c.h0 == 0 && c.rank == d * (n - d), [&] {
        return tag + "h1((W_{n-d} x W_d)^*) = " + std::to_string(c.h1) + " for d = " +
               std::to_string(d);
      });
    }
    const auto sym = bundle_calculus(B::stable(n).sym2().dual());
    t.expect(sym.h1 == n + 1 && sym.rank == n * (n + 1) / 2,
             [&] { return tag + "h1(Sym2(W_n)^*) = " + std::to_string(sym.h1); });
    const auto q = bundle_calculus(B::q4() * B::stable(n - 2).dual());
    t.expect(q.h1 == 4 && q.rank == 4 * (n - 2),
             [&] { return tag + "h1(Q4 x W_{n-2}^*) = " + std::to_string(q.h1); });
    const auto w = bundle_calculus(B::stable(n - 2).wedge2().dual());
    t.expect(w.h1 == n - 3 && w.rank == (n - 2) * (n - 3) / 2,
             [&] { return tag + "h1(Wedge2(W_{n-2})^*) = " + std::to_string(w.h1); });
  }
}

void np_table(Tally& t, const VerifyOptions&) {
  // A_{n-1}: row n lists n_P for d = 1 .. n-1.
  const std::map<int, IntVector> type_a = {
      {2, {2}},
      {3, {3, 3}},
      {4, {4, 2, 4}},
      {5, {5, 5, 5, 5}},
      {6, {6, 3, 2, 3, 6}},
      {7, {7, 7, 7, 7, 7, 7}},
      {8, {8, 4, 8, 2, 8, 4, 8}},
      {9, {9, 9, 3, 9, 9, 3, 9, 9}},
  };
  for (const auto& [n, row] : type_a) {
    const auto sys = build_root_system(Kind::A, n - 1);
    for (int d = 1; d < n; ++d) {
      const auto got = n_P(*sys, d);
      t.expect(got == row[d - 1], [&] {
        return "SL(" + std::to_string(n) + "), d = " + std::to_string(d) + ": n_P = " +
               std::to_string(got) + ", expected " + std::to_string(row[d - 1]);
      });
    }
  }
  const std::vector<std::tuple<Kind, int, std::int64_t>> others = {
      {Kind::B, 2, 2}, {Kind::B, 3, 1}, {Kind::B, 4, 2}, {Kind::B, 5, 1}, {Kind::B, 6, 2},
      {Kind::B, 7, 1}, {Kind::B, 8, 2}, {Kind::C, 2, 2}, {Kind::C, 3, 2}, {Kind::C, 4, 2},
      {Kind::C, 5, 2}, {Kind::C, 6, 2}, {Kind::C, 7, 2}, {Kind::C, 8, 2}, {Kind::D, 3, 2},
      {Kind::D, 4, 1}, {Kind::D, 5, 2}, {Kind::D, 6, 1}, {Kind::D, 7, 2}, {Kind::D, 8, 1},
      {Kind::E, 6, 1}, {Kind::E, 7, 1}, {Kind::E, 8, 1}, {Kind::F, 4, 1}, {Kind::G, 2, 1},
  };
  for (const auto& [kind, rank, want] : others) {
    const auto sys = build_root_system(kind, rank);
    const auto got = n_P(*sys);
    t.expect(got == want, [&] {
      return sys->name() + ": n_P = " + std::to_string(got) + ", expected " + std::to_string(want);
    });
  }
  // n_P divides |Z(G)|: A_{n-1}: n, B/C: 2, D: 4, E6: 3, E7: 2, E8/F4/G2: 1.
  for (auto [kind, rank] : all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    const std::int64_t center = kind == Kind::A   ? rank + 1
                                : kind == Kind::D ? 4
                                : kind == Kind::B || kind == Kind::C ? 2
                                : kind == Kind::E ? 9 - rank
                                                  : 1;
    t.expect(center_order(*sys) == center,
             [&] { return sys->name() + ": center order differs from the table"; });
    if (kind == Kind::A) {
      for (int d = 1; d <= rank; ++d)
        t.expect(center % n_P(*sys, d) == 0,
                 [&] { return sys->name() + ": n_P does not divide |Z|"; });
    } else {
      t.expect(center % n_P(*sys) == 0, [&] { return sys->name() + ": n_P does not divide |Z|"; });
    }
  }
}

void spectral_covers(Tally& t, const VerifyOptions& options) {
  auto rng = rng_for(options, 10);
  const std::size_t bound = default_orbit_bound();
  for (int n = 2; n <= 8; ++n) {
    const auto a = build_root_system(Kind::A, n - 1);
    IntVector staircase(n - 1);
    std::iota(staircase.begin(), staircase.end(), 1);
    const IntVector w_a = fundamental_coweight_multiple(*a, n - 2);
    t.expect(w_a == staircase, [&] {
      return a->name() + ": last coweight multiple " + str(w_a) + " != " + str(staircase);
    });
    const auto deg_a = cover_index(*a, w_a, bound);
    std::uint64_t stab = 1;
    for (int k = 2; k < n; ++k) stab *= k;
    t.expect(deg_a == static_cast<std::uint64_t>(n) && deg_a * stab == a->weyl_order(),
             [&] { return a->name() + ": cover degree " + std::to_string(deg_a) + " != n"; });
    t.expect(cover_index(*a, IntVector(n - 1, 0), bound) == 1,
             [&] { return a->name() + ": orbit of 0 is not a point"; });

    const auto c = build_root_system(Kind::C, n);
    const IntVector w_c = fundamental_coweight_multiple(*c, 0);
    t.expect(w_c == IntVector(n, 1),
             [&] { return c->name() + ": first coweight " + str(w_c) + " != (1,...,1)"; });
    const auto deg_c = cover_index(*c, w_c, bound);
    t.expect(deg_c == static_cast<std::uint64_t>(2 * n),
             [&] { return c->name() + ": cover degree " + std::to_string(deg_c) + " != 2n"; });

    const std::size_t fibers = std::max<std::size_t>(options.samples / 10, 10);
    for (std::size_t s = 0; s < fibers; ++s) {
      const ELambdaPoint mu = oracle::random_point(a, rng);
      const SpectralFiber f = sl_spectral_fiber(sl_class_from_mu(mu));
      std::int64_t total = 0;
      EPoint sum;
      std::map<EPoint, std::int64_t> lifted;
      for (const auto& e : sl_lift(mu)) ++lifted[e];
      std::map<EPoint, std::int64_t> points;
      for (const auto& p : f.points) {
        total += p.mult;
        sum += p.e.scaled(p.mult);
        points[p.e] = p.mult;
      }
      t.expect(f.degree == n && total == n && sum.is_zero() && points == lifted,
               [&] { return a->name() + ": SL fiber of " + mu.to_string() + " is wrong"; });
      // The lift must reproduce the simple-root values e_k - e_{k+1}.
      const auto e = sl_lift(mu);
      for (int k = 0; k + 1 < n; ++k)
        t.expect(e[k] - e[k + 1] == root_value(mu, static_cast<std::size_t>(k)),
                 [&] { return a->name() + ": lift of " + mu.to_string() + " is inconsistent"; });
    }
    for (std::size_t s = 0; s < fibers; ++s) {
      const ELambdaPoint mu = oracle::random_point(c, rng);
      const SpectralFiber f = sp_spectral_fiber(sp_class_from_mu(mu));
      std::map<EPoint, std::int64_t> points, image;
      std::vector<EPoint> fixed;
      std::int64_t total = 0;
      for (const auto& p : f.points) {
        points[p.e] = p.mult;
        image[-p.e] = p.mult;
        total += p.mult;
        if (p.e.scaled(2).is_zero()) fixed.push_back(p.e);
      }
      std::map<EPoint, std::int64_t> twice;
      for (const auto& [e, m] : image) twice[-e] = m;
      t.expect(f.degree == 2 * n && total == 2 * n && total / 2 == n,
               [&] { return c->name() + ": Sp fiber of " + mu.to_string() + " has wrong degree"; });
      t.expect(f.involution_closed && image == points && twice == points,
               [&] { return c->name() + ": Sp fiber of " + mu.to_string() + " not closed under -1"; });
      t.expect(f.involution_fixed == fixed, [&] {
        return c->name() + ": fixed points of -1 on the fiber of " + mu.to_string() +
               " are not its two-torsion entries";
      });
    }
  }
}

void strata(Tally& t, const VerifyOptions&) {
  const auto e8 = build_root_system(Kind::E, 8);
  const IntVector weights = oracle::wp_weights(Kind::E, 8);
  const IntVector want = {5, 3, 2, 1, 1};
  for (std::int64_t d = 2; d <= 6; ++d) {
    const auto got = stratum_dim(*e8, d);
    t.expect(got == want[d - 2] && got == oracle::divisibility_count(weights, d), [&] {
      return "E8, d = " + std::to_string(d) + ": stratum_dim = " + std::to_string(got) +
             ", expected " + std::to_string(want[d - 2]);
    });
  }
  for (auto [kind, rank] : all_types(8)) {
    const auto sys = build_root_system(kind, rank);
    const IntVector w = oracle::wp_weights(kind, rank);
    const auto top = *std::max_element(w.begin(), w.end());
    for (std::int64_t d = 2; d <= top + 2; ++d) {
      const auto got = stratum_dim(*sys, d);
      t.expect(got == oracle::divisibility_count(w, d) && (d <= top || got == 0), [&] {
        return sys->name() + ", d = " + std::to_string(d) + ": stratum_dim = " + std::to_string(got);
      });
    }
  }
}

struct Suite {
  const char* title;
  double time_limit;
  void (*body)(Tally&, const VerifyOptions&);
};

const Suite kSuites[kNumCriteria] = {
    {"weight tables match the comark oracle (all types, rank <= 8)", 1, weight_tables},
    {"|W| = r! prod(g_i) det(Cartan) for simply-laced types", 1, weyl_identity},
    {"prod d_i = |W| and sum(2 d_i - 1) = dim g", 1, casimir_consistency},
    {"trivial class: adjoint blocks I_{2 d_i - 1}", 0, trivial_class_blocks},
    {"regularity law on random torsion points (rank <= 6)", 30, regularity_law},
    {"canonical forms are W-invariant and match brute-force orbits", 60, canonicalization},
    {"SL classifier against Hom-dimension oracle (n <= 8)", 0, classifier_oracles},
    {"cohomology of the unipotent-radical bundles (3 <= n <= 12)", 0, dimension_counts},
    {"n_P golden table", 0, np_table},
    {"spectral cover degrees and the symplectic involution (n <= 8)", 0, spectral_covers},
    {"E8 strata (5,3,2,1,1) by divisibility scan", 0, strata},
};

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  if (id < 1 || id > kNumCriteria)
    throw Error(ErrorCode::InvalidParameter, "criterion id must be 1.." + std::to_string(kNumCriteria));
  const Suite& suite = kSuites[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = suite.title;
  result.time_limit = suite.time_limit;
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    suite.body(tally, options);
  } catch (const std::exception& e) {
    tally.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = tally.ok();
  if (!tally.ok()) {
    result.detail = tally.failure();
  } else if (suite.time_limit > 0 && result.seconds > suite.time_limit) {
    result.passed = false;
    result.detail = "took " + std::to_string(result.seconds) + " s, limit " +
                    std::to_string(suite.time_limit) + " s";
  } else {
    result.detail = std::to_string(tally.checks()) + " checks";
  }
  return result;
}

std::vector<CriterionResult> run_all_criteria(
    const VerifyOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace ellimod
