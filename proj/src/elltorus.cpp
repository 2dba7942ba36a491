#include "ellimod/elltorus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "ellimod/error.hpp"

namespace ellimod {

namespace {

Rational scale_mod1(const Rational& q, std::int64_t k) {
  const std::int64_t den = q.denominator();
  __int128 num = static_cast<__int128>(k % den) * q.numerator();
  std::int64_t r = static_cast<std::int64_t>(num % den);
  if (r < 0) r += den;
  return Rational(r, den);
}

std::strong_ordering compare(const Rational& x, const Rational& y) {
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void require_same_system(const ELambdaPoint& mu, const RootSystem& other) {
  if (&mu.system() != &other &&
      (mu.system().kind() != other.kind() || mu.system().rank() != other.rank()))
    throw Error(ErrorCode::MismatchedSystem,
                "point of " + mu.system().name() + " used with " + other.name());
}

}  // namespace

EPoint EPoint::scaled(std::int64_t k) const {
  EPoint p;
  p.a_ = scale_mod1(a_, k);
  p.b_ = scale_mod1(b_, k);
  return p;
}

std::int64_t EPoint::order() const {
  return std::lcm(a_.denominator(), b_.denominator());
}

std::strong_ordering EPoint::operator<=>(const EPoint& q) const {
  if (auto c = compare(a_, q.a_); c != 0) return c;
  return compare(b_, q.b_);
}

std::string EPoint::to_string() const {
  return format_rational(a_) + "," + format_rational(b_);
}

EPoint EPoint::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos ||
      text.find(',', comma + 1) != std::string_view::npos)
    throw Error(ErrorCode::MalformedInput,
                "expected an E-point 'a,b', got '" + std::string(text) + "'");
  return EPoint(parse_rational(trim(text.substr(0, comma))),
                parse_rational(trim(text.substr(comma + 1))));
}

const std::array<EPoint, 4>& two_torsion_points() {
  static const std::array<EPoint, 4> points{
      EPoint{}, EPoint{Rational(1, 2), Rational(0)},
      EPoint{Rational(0), Rational(1, 2)}, EPoint{Rational(1, 2), Rational(1, 2)}};
  return points;
}

ELambdaPoint::ELambdaPoint(std::shared_ptr<const RootSystem> system,
                           std::vector<EPoint> coords)
    : system_(std::move(system)), coords_(std::move(coords)) {
  if (!system_) throw Error(ErrorCode::MismatchedSystem, "null root system");
  if (static_cast<int>(coords_.size()) != system_->rank())
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(system_->rank()) +
                    " coordinates for " + system_->name() + ", got " +
                    std::to_string(coords_.size()));
}

ELambdaPoint ELambdaPoint::zero(std::shared_ptr<const RootSystem> system) {
  const int r = system->rank();
  return ELambdaPoint(std::move(system), std::vector<EPoint>(r));
}

bool ELambdaPoint::operator==(const ELambdaPoint& other) const {
  return system_->kind() == other.system_->kind() &&
         system_->rank() == other.system_->rank() && coords_ == other.coords_;
}

std::string ELambdaPoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ';';
    out += coords_[i].to_string();
  }
  return out;
}

ELambdaPoint ELambdaPoint::parse(std::shared_ptr<const RootSystem> system,
                                 std::string_view text) {
  std::vector<EPoint> coords;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    coords.push_back(EPoint::parse(trim(text.substr(start, semi - start))));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return ELambdaPoint(std::move(system), std::move(coords));
}

EPoint root_value(const ELambdaPoint& mu, std::span<const std::int64_t> root) {
  const RootSystem& sys = mu.system();
  if (static_cast<int>(root.size()) != sys.rank() ||
      sys.index_of(IntVector(root.begin(), root.end())) < 0)
    throw Error(ErrorCode::RootNotInSystem, "vector is not a root of " + sys.name());
  EPoint value;
  for (int i = 0; i < sys.rank(); ++i)
    value += mu.coords()[i].scaled(sys.pairing(root, i));
  return value;
}

EPoint root_value(const ELambdaPoint& mu, std::size_t root_index) {
  const RootSystem& sys = mu.system();
  if (root_index >= sys.num_roots())
    throw Error(ErrorCode::RootNotInSystem,
                "root index " + std::to_string(root_index) + " out of range");
  const IntVector& root = sys.roots()[root_index];
  EPoint value;
  for (int i = 0; i < sys.rank(); ++i)
    value += mu.coords()[i].scaled(sys.pairing(root, i));
  return value;
}

std::vector<std::size_t> vanishing_roots(const ELambdaPoint& mu) {
  std::vector<std::size_t> out;
  const std::size_t half = mu.system().num_positive_roots();
  for (std::size_t k = 0; k < half; ++k)
    if (root_value(mu, k).is_zero()) out.push_back(k);
  // alpha(mu) = 0 iff (-alpha)(mu) = 0.
  const std::size_t npos = out.size();
  for (std::size_t k = 0; k < npos; ++k) out.push_back(out[k] + half);
  return out;
}

bool is_regular_class(const ELambdaPoint& mu) {
  const std::size_t half = mu.system().num_positive_roots();
  for (std::size_t k = 0; k < half; ++k)
    if (root_value(mu, k).is_zero()) return false;
  return true;
}

std::int64_t aut_dim_split(const ELambdaPoint& mu) {
  return mu.rank() + static_cast<std::int64_t>(vanishing_roots(mu).size());
}

ELambdaPoint weyl_apply(const WeylElement& w, const ELambdaPoint& mu) {
  if (w.rank() != mu.rank())
    throw Error(ErrorCode::MismatchedSystem,
                "Weyl element of rank " + std::to_string(w.rank()) +
                    " applied to a point of " + mu.system().name());
  const IntMatrix& m = w.matrix();
  std::vector<EPoint> out(mu.rank());
  for (int i = 0; i < mu.rank(); ++i)
    for (int j = 0; j < mu.rank(); ++j)
      if (m(i, j) != 0) out[i] += mu.coords()[j].scaled(m(i, j));
  return ELambdaPoint(mu.system_ptr(), std::move(out));
}

namespace {

// mu with all 2r rationals over one common denominator; interleaved
// numerators (a_1, b_1, a_2, b_2, ...), each in [0, N).
struct ModularPoint {
  std::int64_t modulus;
  std::vector<std::int64_t> values;
};

ModularPoint to_modular(const ELambdaPoint& mu) {
  std::int64_t n = 1;
  for (const auto& p : mu.coords()) {
    n = std::lcm(n, p.a().denominator());
    n = std::lcm(n, p.b().denominator());
  }
  ModularPoint mp{n, {}};
  for (const auto& p : mu.coords()) {
    mp.values.push_back(p.a().numerator() * (n / p.a().denominator()));
    mp.values.push_back(p.b().numerator() * (n / p.b().denominator()));
  }
  return mp;
}

inline std::int64_t dot_mod(std::span<const std::int64_t> row,
                            const std::vector<std::int64_t>& v, int offset,
                            std::int64_t n) {
  __int128 s = 0;
  for (std::size_t j = 0; j < row.size(); ++j)
    s += static_cast<__int128>(row[j]) * v[2 * j + offset];
  std::int64_t r = static_cast<std::int64_t>(s % n);
  return r < 0 ? r + n : r;
}

std::vector<std::int64_t> apply_mod(const IntMatrix& m,
                                    const std::vector<std::int64_t>& v,
                                    std::int64_t n) {
  std::vector<std::int64_t> out(v.size());
  for (int i = 0; i < m.rows(); ++i) {
    out[2 * i] = dot_mod(m.row(i), v, 0, n);
    out[2 * i + 1] = dot_mod(m.row(i), v, 1, n);
  }
  return out;
}

}  // namespace

OrbitCanonicalForm canonicalize(const ELambdaPoint& mu) {
  // Minimal image along the stabilizer chain W = P_0 > P_1 > ... > 1: every w
  // factors uniquely as c_{r-1} ... c_0 with c_k a coset representative of
  // P_{k+1} in P_k, and P_{k+1} fixes coordinates 0..k. Level k keeps the
  // images minimizing coordinate k, merging equal images and counting the
  // number of group elements reaching each; the final count is the number
  // of w with w mu = min, i.e. the stabilizer order.
  const RootSystem& sys = mu.system();
  const ModularPoint start = to_modular(mu);
  const std::int64_t n = start.modulus;

  std::map<std::vector<std::int64_t>, std::uint64_t> states{{start.values, 1}};
  for (int k = 0; k < sys.rank(); ++k) {
    const CosetLevel& level = sys.coset_chain()[k];
    std::map<std::vector<std::int64_t>, std::uint64_t> next;
    std::pair<std::int64_t, std::int64_t> best{n, n};
    for (const auto& [values, count] : states) {
      for (const IntMatrix& rep : level.reps) {
        std::pair<std::int64_t, std::int64_t> v{dot_mod(rep.row(k), values, 0, n),
                                                dot_mod(rep.row(k), values, 1, n)};
        if (v > best) continue;
        if (v < best) {
          best = v;
          next.clear();
        }
        next[apply_mod(rep, values, n)] += count;
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1)
    throw std::logic_error("canonicalize: minimal image is not unique");

  const auto& [values, count] = *states.begin();
  std::vector<EPoint> coords;
  for (int i = 0; i < sys.rank(); ++i)
    coords.emplace_back(Rational(values[2 * i], n), Rational(values[2 * i + 1], n));
  return {ELambdaPoint(mu.system_ptr(), std::move(coords)), count};
}

std::vector<EPoint> fingerprint(const ELambdaPoint& mu) {
  std::vector<EPoint> values;
  values.reserve(mu.system().num_roots());
  for (std::size_t k = 0; k < mu.system().num_roots(); ++k)
    values.push_back(root_value(mu, k));
  std::sort(values.begin(), values.end());
  return values;
}

bool orbit_equal(const ELambdaPoint& mu, const ELambdaPoint& nu, bool heuristic) {
  require_same_system(mu, nu.system());
  if (fingerprint(mu) != fingerprint(nu)) return false;
  if (heuristic) return true;
  return canonicalize(mu).representative == canonicalize(nu).representative;
}

std::vector<ELambdaPoint> orbit_points(const ELambdaPoint& mu, std::size_t bound) {
  const RootSystem& sys = mu.system();
  std::set<std::vector<EPoint>> seen{mu.coords()};
  std::vector<ELambdaPoint> orbit{mu};
  std::vector<WeylElement> reflections;
  for (int i = 0; i < sys.rank(); ++i) reflections.emplace_back(sys, std::vector<int>{i});
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : reflections) {
      ELambdaPoint image = weyl_apply(s, orbit[head]);
      if (seen.insert(image.coords()).second) {
        if (orbit.size() >= bound)
          throw Error(ErrorCode::OrbitBoundExceeded,
                      "orbit exceeds bound " + std::to_string(bound));
        orbit.push_back(std::move(image));
      }
    }
  }
  return orbit;
}

std::size_t default_orbit_bound() {
  if (const char* env = std::getenv("ELLIMOD_ORBIT_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

}  // namespace ellimod
