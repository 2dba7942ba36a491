#include "ellimod/bundles.hpp"

#include <algorithm>
#include <map>

#include "ellimod/error.hpp"

namespace ellimod {

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::SL: return "SL";
    case GroupTag::Sp: return "Sp";
    case GroupTag::SOEven: return "SO_even";
    case GroupTag::SOOdd: return "SO_odd";
  }
  return "?";
}

GroupTag group_tag_from_string(const std::string& text) {
  if (text == "SL") return GroupTag::SL;
  if (text == "Sp") return GroupTag::Sp;
  if (text == "SO_even") return GroupTag::SOEven;
  if (text == "SO_odd") return GroupTag::SOOdd;
  throw Error(ErrorCode::MalformedInput,
              "unknown group '" + text + "' (expected SL, Sp, SO_even or SO_odd)");
}

std::int64_t BundleDecomp::expected_rank() const {
  switch (group) {
    case GroupTag::SL: return n;
    case GroupTag::Sp:
    case GroupTag::SOEven: return 2 * n;
    case GroupTag::SOOdd: return 2 * n + 1;
  }
  return 0;
}

std::int64_t BundleDecomp::total_rank() const {
  std::int64_t s = 0;
  for (const auto& x : summands) s += x.d;
  return s;
}

BundleDecomp BundleDecomp::normalized() const {
  BundleDecomp out = *this;
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

namespace {

std::string describe(const AtiyahSummand& s) {
  return "I_" + std::to_string(s.d) + "(" + s.lambda.to_string() + ")";
}

void check_common(const BundleDecomp& v, GroupTag expected) {
  if (v.group != expected &&
      !(expected == GroupTag::SOEven && v.group == GroupTag::SOOdd))
    throw Error(ErrorCode::WrongSystemType,
                "decomposition for " + to_string(v.group) + " passed to the " +
                    to_string(expected) + " classifier");
  if (v.n < 1)
    throw Error(ErrorCode::InvalidParameter, "n must be positive");
  for (const auto& s : v.summands)
    if (s.d < 1)
      throw Error(ErrorCode::InvalidParameter,
                  "summand rank must be positive in " + describe(s));
}

void check_rank(const BundleDecomp& v) {
  if (v.total_rank() != v.expected_rank())
    throw Error(ErrorCode::RankMismatch,
                "summand ranks add up to " + std::to_string(v.total_rank()) +
                    ", expected " + std::to_string(v.expected_rank()) + " for " +
                    to_string(v.group) + " with n = " + std::to_string(v.n));
}

// Block sizes per twist, descending.
std::map<EPoint, std::vector<std::int64_t>> blocks_by_twist(const BundleDecomp& v) {
  std::map<EPoint, std::vector<std::int64_t>> out;
  for (const auto& s : v.summands) out[s.lambda].push_back(s.d);
  for (auto& [lambda, sizes] : out) std::sort(sizes.rbegin(), sizes.rend());
  return out;
}

// Non-two-torsion twists must come as I_d(lambda) + I_d(-lambda), with at
// most one block per twist.
void check_paired_part(const std::map<EPoint, std::vector<std::int64_t>>& blocks) {
  for (const auto& [lambda, sizes] : blocks) {
    if (lambda.is_two_torsion()) continue;
    if (sizes.size() > 1)
      throw Error(ErrorCode::RepeatedTwist,
                  "twist " + lambda.to_string() +
                      " occurs in more than one block (need lambda_i != lambda_j^{+-1})");
    auto partner = blocks.find(-lambda);
    if (partner == blocks.end() || partner->second != sizes)
      throw Error(ErrorCode::UnpairedSummand,
                  "I_" + std::to_string(sizes[0]) + "(" + lambda.to_string() +
                      ") has no matching I_" + std::to_string(sizes[0]) + "(" +
                      (-lambda).to_string() + ")");
  }
}

}  // namespace

SlClassification sl_classify(const BundleDecomp& v) {
  check_common(v, GroupTag::SL);
  check_rank(v);
  EPoint det;
  for (const auto& s : v.summands) det += s.lambda.scaled(s.d);
  if (!det.is_zero())
    throw Error(ErrorCode::DeterminantNotTrivial,
                "sum of d_i * lambda_i is " + det.to_string() + ", not 0");
  std::int64_t hom = 0;
  bool regular = true;
  for (std::size_t i = 0; i < v.summands.size(); ++i)
    for (std::size_t j = 0; j < v.summands.size(); ++j) {
      if (v.summands[i].lambda != v.summands[j].lambda) continue;
      hom += std::min(v.summands[i].d, v.summands[j].d);
      if (i != j) regular = false;
    }
  return {regular, hom - 1};
}

std::int64_t sp_validate(const BundleDecomp& v) {
  check_common(v, GroupTag::Sp);
  const auto blocks = blocks_by_twist(v);
  for (const auto& [lambda, sizes] : blocks) {
    if (!lambda.is_two_torsion()) continue;
    for (auto d : sizes)
      if (d % 2 != 0)
        throw Error(ErrorCode::OddBlockAtTwoTorsion,
                    "I_" + std::to_string(d) + "(" + lambda.to_string() +
                        ") has odd rank at a two-torsion twist and carries no "
                        "alternating form");
    if (sizes.size() > 1)
      throw Error(ErrorCode::RepeatedTwist,
                  "two-torsion twist " + lambda.to_string() +
                      " must carry a single block I_{2a}");
  }
  check_paired_part(blocks);
  check_rank(v);
  return v.n;
}

std::int64_t so_validate(const BundleDecomp& v) {
  check_common(v, GroupTag::SOEven);
  const bool odd_case = v.group == GroupTag::SOOdd;
  const auto blocks = blocks_by_twist(v);
  const auto& etas = two_torsion_points();

  // Which eta_j carry a single odd block without its companion line.
  std::array<bool, 4> lonely{};
  for (int j = 0; j < 4; ++j) {
    auto it = blocks.find(etas[j]);
    if (it == blocks.end()) {
      if (odd_case && j == 0)
        throw Error(ErrorCode::MissingOddBlock,
                    "SO(2n+1) requires the odd block I_{2a_0+1} with trivial twist");
      continue;
    }
    const auto& sizes = it->second;
    for (auto d : sizes)
      if (d % 2 == 0)
        throw Error(ErrorCode::ParityViolation,
                    "I_" + std::to_string(d) + "(" + etas[j].to_string() +
                        ") has even rank at a two-torsion twist and carries no "
                        "symmetric form");
    if (odd_case && j == 0) {
      if (sizes.size() != 1)
        throw Error(ErrorCode::OutsideShape,
                    "SO(2n+1): the trivial twist must carry exactly the odd block "
                    "I_{2a_0+1}");
      continue;
    }
    if (sizes.size() == 1) {
      lonely[j] = true;
    } else if (sizes.size() > 2 || sizes[1] != 1) {
      throw Error(ErrorCode::RepeatedTwist,
                  "two-torsion twist " + etas[j].to_string() +
                      " must carry I_{2a+1}(eta) + eta");
    }
  }

  const int first = odd_case ? 1 : 0;
  int count = 0;
  for (int j = first; j < 4; ++j) count += lonely[j] ? 1 : 0;
  const int all = 4 - first;
  if (count == all)
    throw Error(ErrorCode::NonLiftable,
                "odd blocks at every two-torsion twist without companion lines: "
                "the orthogonal bundle does not lift to Spin");
  if (count > 0)
    throw Error(ErrorCode::MissingCompanionLine,
                "odd-rank part at some but not all two-torsion twists: each "
                "I_{2a+1}(eta) needs its companion line eta");

  check_paired_part(blocks);
  check_rank(v);
  return v.n;
}

AdjointShape split_adjoint(const ELambdaPoint& mu) {
  AdjointShape shape;
  shape.unipotent_blocks.assign(mu.rank(), 1);
  shape.line_summands = fingerprint(mu);
  return shape;
}

AdjointShape regular_adjoint_blocks(const ELambdaPoint& mu) {
  const auto vanishing = vanishing_roots(mu);
  const SubsystemReport report = classify_subsystem(mu.system(), vanishing);
  AdjointShape shape;
  for (const auto& comp : report.components)
    for (auto d : build_root_system(comp.kind, comp.rank)->casimir_weights())
      shape.unipotent_blocks.push_back(2 * d - 1);
  // Central torus directions: factors C^* with Casimir weight 1.
  for (int i = report.total_rank; i < mu.rank(); ++i)
    shape.unipotent_blocks.push_back(1);
  std::sort(shape.unipotent_blocks.begin(), shape.unipotent_blocks.end());
  return shape;
}

std::vector<EPoint> sl_lift(const ELambdaPoint& mu) {
  if (mu.system().kind() != Kind::A)
    throw Error(ErrorCode::WrongSystemType,
                "SL(n) model needs a point of A_{n-1}, got " + mu.system().name());
  const auto& c = mu.coords();
  const int r = mu.rank();
  std::vector<EPoint> e(r + 1);
  e[0] = c[0];
  for (int k = 1; k < r; ++k) e[k] = c[k] - c[k - 1];
  e[r] = -c[r - 1];
  return e;
}

std::vector<EPoint> sp_lift(const ELambdaPoint& mu) {
  if (mu.system().kind() != Kind::C)
    throw Error(ErrorCode::WrongSystemType,
                "Sp(2n) model needs a point of C_n, got " + mu.system().name());
  const auto& c = mu.coords();
  const int r = mu.rank();
  std::vector<EPoint> e(r);
  e[0] = c[0];
  for (int k = 1; k < r; ++k) e[k] = c[k] - c[k - 1];
  return e;
}

BundleDecomp sl_class_from_mu(const ELambdaPoint& mu) {
  std::map<EPoint, std::int64_t> mult;
  for (const auto& e : sl_lift(mu)) ++mult[e];
  BundleDecomp v{GroupTag::SL, mu.rank() + 1, {}};
  for (const auto& [lambda, m] : mult) v.summands.push_back({m, lambda});
  return v;
}

BundleDecomp sp_class_from_mu(const ELambdaPoint& mu) {
  std::map<EPoint, std::int64_t> mult;  // keyed by min(lambda, -lambda)
  for (const auto& e : sp_lift(mu)) ++mult[std::min(e, -e)];
  BundleDecomp v{GroupTag::Sp, mu.rank(), {}};
  for (const auto& [lambda, m] : mult) {
    if (lambda.is_two_torsion()) {
      v.summands.push_back({2 * m, lambda});
    } else {
      v.summands.push_back({m, lambda});
      v.summands.push_back({m, -lambda});
    }
  }
  return v.normalized();
}

}  // namespace ellimod
