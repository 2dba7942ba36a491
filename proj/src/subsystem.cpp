#include <algorithm>
#include <numeric>
#include <set>

#include "ellimod/error.hpp"
#include "ellimod/rootsys.hpp"

namespace ellimod {

namespace {

// Nodes of `c` in breadth-first order from node 0, so every node after the
// first is adjacent to an earlier one. `c` must be connected.
std::vector<int> bfs_order(const IntMatrix& c) {
  const int n = c.rows();
  std::vector<int> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int v = 0; v < n; ++v)
      if (!seen[v] && c(order[h], v) != 0) {
        seen[v] = true;
        order.push_back(v);
      }
  return order;
}

bool extend(const IntMatrix& c, const IntMatrix& target,
            const std::vector<int>& order, std::size_t depth,
            std::vector<int>& map, std::vector<bool>& used) {
  const int n = c.rows();
  if (depth == order.size()) return true;
  const int u = order[depth];
  for (int s = 0; s < n; ++s) {
    if (used[s]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const int v = order[k];
      ok = c(u, v) == target(s, map[v]) && c(v, u) == target(map[v], s);
    }
    if (!ok) continue;
    map[u] = s;
    used[s] = true;
    if (extend(c, target, order, depth + 1, map, used)) return true;
    used[s] = false;
  }
  return false;
}

// Finds map with c(u, v) == standard(map[u], map[v]).
bool match_cartan(const IntMatrix& c, Kind& kind, std::vector<int>& map) {
  const int n = c.rows();
  if (n == 0) return false;
  const std::vector<int> order = bfs_order(c);
  if (static_cast<int>(order.size()) != n) return false;
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D, Kind::E, Kind::F, Kind::G}) {
    if (!is_valid_type(k, n)) continue;
    const IntMatrix target = cartan_matrix(k, n);
    map.assign(n, -1);
    std::vector<bool> used(n, false);
    if (extend(c, target, order, 0, map, used)) {
      kind = k;
      return true;
    }
  }
  return false;
}

std::size_t root_count(Kind kind, int n) {
  switch (kind) {
    case Kind::A: return static_cast<std::size_t>(n) * (n + 1);
    case Kind::B:
    case Kind::C: return 2 * static_cast<std::size_t>(n) * n;
    case Kind::D: return 2 * static_cast<std::size_t>(n) * (n - 1);
    case Kind::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Kind::F: return 48;
    case Kind::G: return 12;
  }
  return 0;
}

}  // namespace

bool identify_cartan(const IntMatrix& cartan, Kind& kind) {
  std::vector<int> map;
  return match_cartan(cartan, kind, map);
}

SubsystemReport classify_subsystem(const RootSystem& system,
                                   std::span<const std::size_t> roots) {
  const auto& all = system.roots();
  std::set<std::size_t> members;
  for (std::size_t idx : roots) {
    if (idx >= all.size())
      throw Error(ErrorCode::RootNotInSystem,
                  "root index " + std::to_string(idx) + " out of range");
    members.insert(idx);
  }

  const int r = system.rank();
  for (std::size_t a : members) {
    if (!members.count(system.negative_of(a)))
      throw Error(ErrorCode::SubsetNotClosed, "subset not closed under negation");
    for (std::size_t b : members) {
      IntVector sum(r);
      for (int i = 0; i < r; ++i) sum[i] = all[a][i] + all[b][i];
      int s = system.index_of(sum);
      if (s >= 0 && !members.count(static_cast<std::size_t>(s)))
        throw Error(ErrorCode::SubsetNotClosed,
                    "subset not closed under root addition");
    }
  }

  // Simple basis: positive members that are not a sum of two positive members.
  std::vector<std::size_t> positive;
  for (std::size_t a : members)
    if (system.is_positive(a)) positive.push_back(a);
  std::set<std::size_t> decomposable;
  for (std::size_t a : positive)
    for (std::size_t b : positive) {
      IntVector sum(r);
      for (int i = 0; i < r; ++i) sum[i] = all[a][i] + all[b][i];
      int s = system.index_of(sum);
      if (s >= 0) decomposable.insert(static_cast<std::size_t>(s));
    }
  std::vector<std::size_t> basis;
  for (std::size_t a : positive)
    if (!decomposable.count(a)) basis.push_back(a);

  const int m = static_cast<int>(basis.size());
  IntMatrix cartan(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const IntVector& coroot = system.coroots()[basis[a]];
      std::int64_t value = 0;
      for (int k = 0; k < r; ++k)
        value += coroot[k] * system.pairing(all[basis[b]], k);
      cartan(a, b) = value;
    }

  // Connected components of the Dynkin graph.
  std::vector<int> component(m, -1);
  int count = 0;
  for (int start = 0; start < m; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v)
        if (component[v] < 0 && cartan(u, v) != 0) {
          component[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }

  SubsystemReport report;
  report.total_rank = m;
  report.num_roots = members.size();
  std::size_t counted = 0;
  for (int c = 0; c < count; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < m; ++v)
      if (component[v] == c) nodes.push_back(v);
    const int size = static_cast<int>(nodes.size());
    IntMatrix sub(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) sub(i, j) = cartan(nodes[i], nodes[j]);
    Kind kind{};
    std::vector<int> map;
    if (!match_cartan(sub, kind, map))
      throw std::logic_error("unidentifiable Dynkin component");
    SubsystemComponent comp{kind, size, std::vector<std::size_t>(size)};
    for (int i = 0; i < size; ++i) comp.simple_roots[map[i]] = basis[nodes[i]];
    counted += root_count(kind, size);
    report.components.push_back(std::move(comp));
  }
  if (counted != report.num_roots)
    throw Error(ErrorCode::SubsetNotClosed,
                "subset is not a root subsystem (root count mismatch)");
  return report;
}

}  // namespace ellimod
