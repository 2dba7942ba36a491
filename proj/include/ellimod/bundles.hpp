#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ellimod/elltorus.hpp"

namespace ellimod {

enum class GroupTag { SL, Sp, SOEven, SOOdd };

std::string to_string(GroupTag tag);
GroupTag group_tag_from_string(const std::string& text);

// I_d(lambda): the rank-d indecomposable self-extension of the degree-0 line
// bundle lambda.
struct AtiyahSummand {
  std::int64_t d = 1;
  EPoint lambda;

  bool operator==(const AtiyahSummand&) const = default;
  auto operator<=>(const AtiyahSummand& o) const {
    if (auto c = lambda <=> o.lambda; c != 0) return c;
    return d <=> o.d;
  }
};

// Regular representative of an S-equivalence class for a classical group,
// as a multiset of Atiyah summands of the standard representation.
struct BundleDecomp {
  GroupTag group = GroupTag::SL;
  std::int64_t n = 1;
  std::vector<AtiyahSummand> summands;

  // Rank of the standard representation: n, 2n, 2n or 2n + 1.
  std::int64_t expected_rank() const;
  std::int64_t total_rank() const;
  // Summands sorted by (lambda, d); decompositions are multisets.
  BundleDecomp normalized() const;
};

struct SlClassification {
  bool is_regular;
  std::int64_t aut_dim;
};

SlClassification sl_classify(const BundleDecomp& v);

// Both return n, or throw Error with the violated condition.
std::int64_t sp_validate(const BundleDecomp& v);
std::int64_t so_validate(const BundleDecomp& v);

struct AdjointShape {
  std::vector<std::int64_t> unipotent_blocks;  // sizes 2d - 1, ascending
  std::vector<EPoint> line_summands;          // sorted; split case only
};

// ad xi_0 = O^r + sum over roots of lambda_{alpha(mu)}.
AdjointShape split_adjoint(const ELambdaPoint& mu);
// The O-primary part of ad xi_reg as blocks I_{2d-1}.
AdjointShape regular_adjoint_blocks(const ELambdaPoint& mu);

// (e_1, ..., e_n) in E^n with mu = sum e_i epsilon_i: sum-zero model for
// A_{n-1}, Z^n model for C_n.
std::vector<EPoint> sl_lift(const ELambdaPoint& mu);
std::vector<EPoint> sp_lift(const ELambdaPoint& mu);

BundleDecomp sl_class_from_mu(const ELambdaPoint& mu);
BundleDecomp sp_class_from_mu(const ELambdaPoint& mu);

// Symbolic semistable bundle on E built from W_d (stable, rank d, degree 1)
// and line bundles by dual, tensor, Sym^2, Lambda^2 and direct sum.
class BundleExpr {
 public:
  enum class Op { Stable, Line, Dual, Tensor, Sym2, Wedge2, Sum };

  static BundleExpr stable(std::int64_t d);  // W_d
  static BundleExpr line(std::int64_t degree, EPoint twist = {});
  // O + eta_1 + eta_2 + eta_3.
  static BundleExpr q4();

  BundleExpr dual() const;
  BundleExpr sym2() const;
  BundleExpr wedge2() const;
  friend BundleExpr operator*(const BundleExpr& x, const BundleExpr& y);
  friend BundleExpr operator+(const BundleExpr& x, const BundleExpr& y);

  Op op() const;
  std::int64_t rank() const;
  std::int64_t degree() const;
  std::string to_string() const;

  // Direct-sum terms with no Sum inside; each is semistable. Lambda^2 of a
  // line bundle is the zero bundle and contributes no term.
  std::vector<BundleExpr> expand() const;

 private:
  struct Node;
  explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BundleCohomology {
  std::int64_t rank;
  std::int64_t degree;
  std::int64_t h0;
  std::int64_t h1;
};

// Riemann-Roch on E for a sum of semistable bundles of nonzero degree.
// Throws Error(DegreeZeroCohomology) when a constituent has degree 0.
BundleCohomology bundle_calculus(const BundleExpr& expr);

}  // namespace ellimod
