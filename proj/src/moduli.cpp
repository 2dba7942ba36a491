#include "ellimod/moduli.hpp"

#include <algorithm>
#include <numeric>

#include "ellimod/error.hpp"

namespace ellimod {

WPSpace wp_space(const RootSystem& system) {
  return {wp_weights(system), system.rank()};
}

std::int64_t stratum_dim(const RootSystem& system, std::int64_t d) {
  // Whether i = 0 counts is unclear for d = 1; g_0 = 1 never contributes
  // for d >= 2, so only those are accepted.
  if (d < 2)
    throw Error(ErrorCode::InvalidParameter,
                "stratum dimension is defined for d >= 2, got " + std::to_string(d));
  std::int64_t count = 0;
  for (auto g : wp_weights(system))
    if (g % d == 0) ++count;
  return count;
}

const char* to_string(MarkingRule rule) {
  switch (rule) {
    case MarkingRule::Trivalent: return "trivalent";
    case MarkingRule::MultipleEdgeLongRoot: return "multiple-edge-long-root";
    case MarkingRule::ATypeChoice: return "A-type-choice";
  }
  return "?";
}

namespace {

int degree_of(const IntMatrix& c, int node) {
  int deg = 0;
  for (int j = 0; j < c.rows(); ++j)
    if (j != node && c(node, j) != 0) ++deg;
  return deg;
}

using LeviType = std::vector<std::pair<Kind, int>>;

LeviType sorted(LeviType t) {
  // A_1 and B_1 / C_1 coincide; the subsystem classifier reports A_1.
  std::sort(t.begin(), t.end());
  return t;
}

LeviType expected_levi(const RootSystem& sys, int node) {
  const int n = sys.rank();
  LeviType t;
  auto add_a = [&](int rank) {
    if (rank > 0) t.emplace_back(Kind::A, rank);
  };
  switch (sys.kind()) {
    case Kind::A:
      add_a(node);
      add_a(n - node - 1);
      break;
    case Kind::B:
      add_a(n - 2);
      add_a(1);
      break;
    case Kind::C:
      add_a(n - 1);
      break;
    case Kind::D:
      add_a(n - 3);
      add_a(1);
      add_a(1);
      break;
    case Kind::E:
      add_a(2);
      add_a(1);
      add_a(n - 4);
      break;
    case Kind::F:
      add_a(1);
      add_a(2);
      break;
    case Kind::G:
      add_a(1);
      break;
  }
  return sorted(t);
}

int marked_node_for(const RootSystem& sys, MarkingRule& rule) {
  const IntMatrix& c = sys.cartan();
  const int r = sys.rank();
  std::vector<int> candidates;
  if (sys.kind() == Kind::D || sys.kind() == Kind::E) {
    rule = MarkingRule::Trivalent;
    for (int i = 0; i < r; ++i)
      if (degree_of(c, i) == 3) candidates.push_back(i);
    // D_3 = A_3 has no trivalent vertex; its branch node n - 2 (the middle
    // of the chain) plays that role.
    if (candidates.empty() && sys.kind() == Kind::D && r == 3) candidates.push_back(0);
  } else {
    rule = MarkingRule::MultipleEdgeLongRoot;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        // Multiple bond with alpha_i the long end: |<a_i^vee, a_j>| = 1 < |<a_j^vee, a_i>|.
        if (i != j && c(i, j) * c(j, i) > 1 && -c(i, j) < -c(j, i))
          candidates.push_back(i);
  }
  if (candidates.size() != 1)
    throw std::logic_error("ambiguous marked vertex for " + sys.name());
  return candidates[0];
}

}  // namespace

ParabolicData parabolic_data(const RootSystem& system, std::optional<std::int64_t> d) {
  ParabolicData data;
  const int r = system.rank();
  if (system.kind() == Kind::A) {
    if (!d || *d < 1 || *d > r)
      throw Error(ErrorCode::InvalidParameter,
                  "type A needs 1 <= d <= " + std::to_string(r) + " for P_d");
    data.rule = MarkingRule::ATypeChoice;
    data.marked_node = static_cast<int>(*d) - 1;
  } else {
    if (d)
      throw Error(ErrorCode::InvalidParameter,
                  "d applies to type A only, not " + system.name());
    data.marked_node = marked_node_for(system, data.rule);
  }
  const int node = data.marked_node;
  data.mark = system.marks()[node];

  std::vector<std::size_t> levi_roots;
  for (std::size_t k = 0; k < system.num_roots(); ++k) {
    const std::int64_t coeff = system.roots()[k][node];
    if (coeff == 0)
      levi_roots.push_back(k);
    else if (coeff > 0)
      ++data.level_counts[coeff];
  }
  data.levi = classify_subsystem(system, levi_roots);

  LeviType found;
  for (const auto& comp : data.levi.components) found.emplace_back(comp.kind, comp.rank);
  if (sorted(found) != expected_levi(system, node))
    throw std::logic_error("unexpected Levi factor for the marked vertex of " +
                           system.name());
  return data;
}

IntVector family_exponent_order(const RootSystem& system) {
  IntVector d = system.casimir_weights();
  if (system.kind() != Kind::D) return d;
  const std::int64_t n = system.rank();
  IntVector order;
  for (std::int64_t e = 2; e <= 2 * n - 2; e += 2) order.push_back(e);
  order.insert(order.begin() + std::min<std::size_t>(2, order.size()), n);
  return order;
}

FamilyTable family_table(const RootSystem& system) {
  if (system.kind() == Kind::E && system.rank() == 8)
    throw Error(ErrorCode::ExcludedType,
                "the family weight table is not defined for E8: the construction "
                "does not globalize as a vector bundle with diagonal C^*-action");
  IntVector g = system.comarks();
  std::sort(g.begin(), g.end());
  const IntVector d = family_exponent_order(system);
  FamilyTable table;
  table.rows.push_back({1, 0});
  for (std::size_t i = 0; i < g.size(); ++i) table.rows.push_back({g[i], d[i]});
  return table;
}

std::int64_t n_P(const RootSystem& system, std::optional<std::int64_t> d) {
  const std::int64_t r = system.rank();
  if (system.kind() == Kind::A) {
    if (!d || *d < 1 || *d > r)
      throw Error(ErrorCode::InvalidParameter,
                  "SL(n) needs 1 <= d <= n - 1 for P_d, got n = " + std::to_string(r + 1));
    const std::int64_t n = r + 1;
    return n / std::gcd(*d, n);
  }
  if (d)
    throw Error(ErrorCode::InvalidParameter,
                "d applies to type A only, not " + system.name());
  switch (system.kind()) {
    case Kind::C: return 2;
    case Kind::B: return r % 2 == 0 ? 2 : 1;
    case Kind::D: return r % 2 == 1 ? 2 : 1;
    default: return 1;
  }
}

std::int64_t center_order(const RootSystem& system) { return system.cartan_det(); }

}  // namespace ellimod
