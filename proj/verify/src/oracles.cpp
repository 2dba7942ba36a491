#include "ellimod/oracles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace ellimod::oracle {

IntMatrix cartan(Kind kind, int n) {
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j) {  // 1-based Bourbaki nodes
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  switch (kind) {
    case Kind::A:
    case Kind::B:
    case Kind::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      if (kind == Kind::B) a(n - 1, n - 2) = -2;
      if (kind == Kind::C) a(n - 2, n - 1) = -2;
      break;
    case Kind::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Kind::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Kind::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a(2, 1) = -2;
      break;
    case Kind::G:
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

namespace {

RootData compute_roots(Kind kind, int n) {
  const IntMatrix a = cartan(kind, n);
  std::set<IntVector> roots;
  std::vector<IntVector> layer;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  // beta + alpha_i is a root iff q > 0 in the alpha_i-string
  // beta - p alpha_i, ..., beta + q alpha_i, where p - q = <alpha_i^vee, beta>.
  while (!layer.empty()) {
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        std::int64_t p = 0;
        for (IntVector down = beta;;) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int j = 0; j < n; ++j) pairing += a(i, j) * beta[j];
        if (p - pairing > 0) {
          IntVector up = beta;
          ++up[i];
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  RootData data;
  data.positive.assign(roots.begin(), roots.end());
  auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  data.highest = *std::max_element(data.positive.begin(), data.positive.end(),
                                   [&](const auto& x, const auto& y) { return height(x) < height(y); });

  // (alpha_i, alpha_j) = a_ij |alpha_i|^2 / 2 is symmetric.
  data.lengths.assign(n, Rational(0));
  data.lengths[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && a(i, j) != 0 && data.lengths[i].numerator() != 0 && data.lengths[j].numerator() == 0) {
          data.lengths[j] = data.lengths[i] * a(i, j) / a(j, i);
          changed = true;
        }
  }
  return data;
}

}  // namespace

RootData positive_roots(Kind kind, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<Kind, int>, RootData> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({kind, rank});
  if (it == cache.end()) it = cache.emplace(std::pair{kind, rank}, compute_roots(kind, rank)).first;
  return it->second;
}

IntVector comarks(Kind kind, int n) {
  const RootData data = positive_roots(kind, n);
  const IntMatrix a = cartan(kind, n);
  const IntVector& t = data.highest;
  Rational norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm += Rational(t[i] * t[j] * a(i, j)) * data.lengths[i] / 2;
  // theta^vee = 2 theta / |theta|^2 = sum theta_i |alpha_i|^2 / |theta|^2 alpha_i^vee
  IntVector out(n);
  for (int i = 0; i < n; ++i) {
    Rational c = Rational(t[i]) * data.lengths[i] / norm;
    if (c.denominator() != 1) return {};
    out[i] = c.numerator();
  }
  return out;
}

IntVector wp_weights(Kind kind, int rank) {
  IntVector out{1};
  for (auto g : comarks(kind, rank)) out.push_back(g);
  return out;
}

IntVector exponents(Kind kind, int n) {
  const RootData data = positive_roots(kind, n);
  std::map<std::int64_t, std::int64_t> count;  // height -> number of roots
  std::int64_t top = 0;
  for (const auto& r : data.positive) {
    const auto h = std::accumulate(r.begin(), r.end(), std::int64_t{0});
    ++count[h];
    top = std::max(top, h);
  }
  // The partition of heights is dual to the exponents.
  IntVector out;
  for (std::int64_t k = 1; k <= top; ++k)
    for (auto m = count[k] - count[k + 1]; m > 0; --m) out.push_back(k);
  return out;
}

std::int64_t dimension(Kind kind, int rank) {
  return rank + 2 * static_cast<std::int64_t>(positive_roots(kind, rank).positive.size());
}

std::int64_t determinant(Kind kind, int n) {
  const IntMatrix c = cartan(kind, n);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = c(i, j);
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && m[p][col].numerator() == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det.numerator();
}

std::uint64_t weyl_order(Kind kind, int r) {
  std::uint64_t fact = 1;
  for (int k = 2; k <= r; ++k) fact *= k;
  switch (kind) {
    case Kind::A: return fact * (r + 1);
    case Kind::B:
    case Kind::C: return (std::uint64_t{1} << r) * fact;
    case Kind::D: return (std::uint64_t{1} << (r - 1)) * fact;
    case Kind::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    case Kind::F: return 1152;
    case Kind::G: return 12;
  }
  return 0;
}

std::int64_t vanishing_count(const ELambdaPoint& mu) {
  const Kind kind = mu.system().kind();
  const int n = mu.rank();
  const IntMatrix a = cartan(kind, n);
  std::int64_t count = 0;
  for (const auto& root : positive_roots(kind, n).positive) {
    // alpha(mu) = sum_j mu_j <alpha, alpha_j^vee> = sum_j mu_j sum_i c_i a_ji
    EPoint value;
    for (int j = 0; j < n; ++j) {
      std::int64_t pairing = 0;
      for (int i = 0; i < n; ++i) pairing += root[i] * a(j, i);
      value += mu.coords()[j].scaled(pairing);
    }
    if (value.is_zero()) count += 2;
  }
  return count;
}

std::int64_t unipotent_hom_dimension(int a, int b) {
  // Unknown X(i, j), 0 <= i < b, 0 <= j < a; one equation per entry of
  // J_b X - X J_a, where (J_b X)(i, j) = X(i+1, j), (X J_a)(i, j) = X(i, j-1).
  const int unknowns = a * b;
  auto var = [&](int i, int j) { return i * a + j; };
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < a; ++j) {
      std::vector<Rational> row(unknowns, Rational(0));
      if (i + 1 < b) row[var(i + 1, j)] += 1;
      if (j >= 1) row[var(i, j - 1)] -= 1;
      rows.push_back(std::move(row));
    }
  int rank = 0;
  for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size()); ++col) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[p][col].numerator() == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col].numerator() == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int k = col; k < unknowns; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return unknowns - rank;
}

std::int64_t end_dimension(const std::vector<std::pair<std::int64_t, EPoint>>& blocks) {
  std::int64_t total = 0;
  for (const auto& [d1, l1] : blocks)
    for (const auto& [d2, l2] : blocks)
      if (l1 == l2) total += unipotent_hom_dimension(static_cast<int>(d1), static_cast<int>(d2));
  return total;
}

BruteOrbit brute_orbit(const ELambdaPoint& mu) {
  const int n = mu.rank();
  const IntMatrix a = cartan(mu.system().kind(), n);
  std::set<std::vector<EPoint>> seen{mu.coords()};
  std::vector<std::vector<EPoint>> queue{mu.coords()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      // s_i x = x - alpha_i(x) alpha_i^vee
      std::vector<EPoint> x = queue[head];
      EPoint value;
      for (int j = 0; j < n; ++j) value += x[j].scaled(a(j, i));
      x[i] = x[i] - value;
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return {*seen.begin(), seen.size()};
}

std::int64_t divisibility_count(const IntVector& weights, std::int64_t d) {
  return std::count_if(weights.begin(), weights.end(), [d](auto g) { return g % d == 0; });
}

std::vector<std::pair<Kind, int>> all_types(int max_rank) {
  std::vector<std::pair<Kind, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Kind::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Kind::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Kind::C, r);
  for (int r = 3; r <= max_rank; ++r) out.emplace_back(Kind::D, r);
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.emplace_back(Kind::E, r);
  if (max_rank >= 4) out.emplace_back(Kind::F, 4);
  if (max_rank >= 2) out.emplace_back(Kind::G, 2);
  return out;
}

namespace {

constexpr std::int64_t kDenominators[] = {1, 2, 2, 3, 3, 4, 4, 5, 6, 6, 8, 12};

std::int64_t pick_denominator(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kDenominators) - 1);
  return kDenominators[pick(rng)];
}

EPoint random_with_denominator(std::mt19937_64& rng, std::int64_t den) {
  std::uniform_int_distribution<std::int64_t> num(0, den - 1);
  const std::int64_t a = num(rng);
  const std::int64_t b = num(rng);
  return EPoint(Rational(a, den), Rational(b, den));
}

}  // namespace

EPoint random_torsion(std::mt19937_64& rng) {
  return random_with_denominator(rng, pick_denominator(rng));
}

ELambdaPoint random_point(const std::shared_ptr<const RootSystem>& system,
                          std::mt19937_64& rng) {
  // One denominator per point: coordinates then collide on walls often.
  const std::int64_t den = pick_denominator(rng);
  std::vector<EPoint> coords;
  for (int i = 0; i < system->rank(); ++i) coords.push_back(random_with_denominator(rng, den));
  return ELambdaPoint(system, std::move(coords));
}

WeylElement random_weyl(const RootSystem& system, std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> letter(0, system.rank() - 1);
  std::vector<int> word(length(rng));
  for (auto& x : word) x = letter(rng);
  return WeylElement(system, std::move(word));
}

}  // namespace ellimod::oracle
