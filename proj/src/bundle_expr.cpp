#include "ellimod/bundles.hpp"
#include "ellimod/error.hpp"

namespace ellimod {

struct BundleExpr::Node {
  Op op;
  std::int64_t rank;
  std::int64_t degree;
  std::int64_t stable_rank = 0;  // Stable
  EPoint twist;                  // Line
  std::vector<BundleExpr> children;
};

BundleExpr BundleExpr::stable(std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidParameter, "W_d needs d >= 1");
  auto node = std::make_shared<Node>(Node{Op::Stable, d, 1, d, {}, {}});
  return BundleExpr(std::move(node));
}

BundleExpr BundleExpr::line(std::int64_t degree, EPoint twist) {
  return BundleExpr(std::make_shared<Node>(Node{Op::Line, 1, degree, 0, twist, {}}));
}

BundleExpr BundleExpr::q4() {
  const auto& eta = two_torsion_points();
  return line(0, eta[0]) + line(0, eta[1]) + line(0, eta[2]) + line(0, eta[3]);
}

BundleExpr BundleExpr::dual() const {
  return BundleExpr(std::make_shared<Node>(
      Node{Op::Dual, rank(), -degree(), 0, {}, {*this}}));
}

BundleExpr BundleExpr::sym2() const {
  const std::int64_t r = rank();
  return BundleExpr(std::make_shared<Node>(
      Node{Op::Sym2, r * (r + 1) / 2, (r + 1) * degree(), 0, {}, {*this}}));
}

BundleExpr BundleExpr::wedge2() const {
  const std::int64_t r = rank();
  return BundleExpr(std::make_shared<Node>(Node{
      Op::Wedge2, r * (r - 1) / 2, (r - 1) * degree(), 0, {}, {*this}}));
}

BundleExpr operator*(const BundleExpr& x, const BundleExpr& y) {
  using Node = BundleExpr::Node;
  return BundleExpr(std::make_shared<Node>(
      Node{BundleExpr::Op::Tensor, x.rank() * y.rank(),
           x.rank() * y.degree() + y.rank() * x.degree(), 0, {}, {x, y}}));
}

BundleExpr operator+(const BundleExpr& x, const BundleExpr& y) {
  using Node = BundleExpr::Node;
  return BundleExpr(std::make_shared<Node>(Node{
      BundleExpr::Op::Sum, x.rank() + y.rank(), x.degree() + y.degree(), 0, {}, {x, y}}));
}

BundleExpr::Op BundleExpr::op() const { return node_->op; }
std::int64_t BundleExpr::rank() const { return node_->rank; }
std::int64_t BundleExpr::degree() const { return node_->degree; }

std::string BundleExpr::to_string() const {
  const auto& ch = node_->children;
  switch (node_->op) {
    case Op::Stable: return "W_" + std::to_string(node_->stable_rank);
    case Op::Line: {
      std::string s = node_->degree == 0 ? "O" : "O(" + std::to_string(node_->degree) + "p0)";
      if (!node_->twist.is_zero()) s += "[" + node_->twist.to_string() + "]";
      return s;
    }
    case Op::Dual: return ch[0].to_string() + "^*";
    case Op::Tensor: return "(" + ch[0].to_string() + " x " + ch[1].to_string() + ")";
    case Op::Sym2: return "Sym2(" + ch[0].to_string() + ")";
    case Op::Wedge2: return "Wedge2(" + ch[0].to_string() + ")";
    case Op::Sum: return "(" + ch[0].to_string() + " + " + ch[1].to_string() + ")";
  }
  return "?";
}

std::vector<BundleExpr> BundleExpr::expand() const {
  const auto& ch = node_->children;
  std::vector<BundleExpr> out;
  switch (node_->op) {
    case Op::Stable:
    case Op::Line:
      out.push_back(*this);
      break;
    case Op::Sum:
      out = ch[0].expand();
      for (auto& t : ch[1].expand()) out.push_back(std::move(t));
      break;
    case Op::Dual:
      for (const auto& t : ch[0].expand()) out.push_back(t.dual());
      break;
    case Op::Tensor: {
      const auto left = ch[0].expand();
      const auto right = ch[1].expand();
      for (const auto& x : left)
        for (const auto& y : right) out.push_back(x * y);
      break;
    }
    case Op::Sym2:
    case Op::Wedge2: {
      const auto terms = ch[0].expand();
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (node_->op == Op::Sym2)
          out.push_back(terms[i].sym2());
        else if (terms[i].rank() > 1)
          out.push_back(terms[i].wedge2());
        for (std::size_t j = i + 1; j < terms.size(); ++j)
          out.push_back(terms[i] * terms[j]);
      }
      break;
    }
  }
  return out;
}

BundleCohomology bundle_calculus(const BundleExpr& expr) {
  BundleCohomology result{expr.rank(), expr.degree(), 0, 0};
  for (const auto& term : expr.expand()) {
    const std::int64_t deg = term.degree();
    if (deg == 0)
      throw Error(ErrorCode::DegreeZeroCohomology,
                  "degree-zero case requires explicit decomposition: " +
                      term.to_string() + " has degree 0");
    result.h0 += std::max<std::int64_t>(deg, 0);
    result.h1 += std::max<std::int64_t>(-deg, 0);
  }
  return result;
}

}  // namespace ellimod
