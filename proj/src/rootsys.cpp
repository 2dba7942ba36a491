#include "ellimod/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "ellimod/error.hpp"

namespace ellimod {

char to_char(Kind kind) { return "ABCDEFG"[static_cast<int>(kind)]; }

Kind kind_from_char(char c) {
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'G')
    throw Error(ErrorCode::InvalidRootSystem,
                std::string("unknown root system kind '") + c + "'");
  return static_cast<Kind>(c - 'A');
}

bool is_valid_type(Kind kind, int rank) {
  switch (kind) {
    case Kind::A: return rank >= 1;
    case Kind::B: return rank >= 2;
    case Kind::C: return rank >= 2;
    case Kind::D: return rank >= 3;
    case Kind::E: return rank >= 6 && rank <= 8;
    case Kind::F: return rank == 4;
    case Kind::G: return rank == 2;
  }
  return false;
}

IntMatrix cartan_matrix(Kind kind, int rank) {
  if (!is_valid_type(kind, rank))
    throw Error(ErrorCode::InvalidRootSystem,
                std::string("no simple root system of type ") + to_char(kind) +
                    std::to_string(rank));
  IntMatrix a(rank, rank);
  for (int i = 0; i < rank; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) {  // 1-based Bourbaki nodes, single bond
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  const int n = rank;
  switch (kind) {
    case Kind::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Kind::B:  // alpha_n short
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Kind::C:  // alpha_n long
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Kind::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Kind::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Kind::F:  // alpha_1, alpha_2 long
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a(2, 1) = -2;
      break;
    case Kind::G:  // alpha_1 short
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

namespace {

std::int64_t height(const IntVector& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

using Poly = std::vector<std::int64_t>;  // low degree first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Divides p by the monic polynomial q; returns false if q does not divide p.
bool divide_exact(const Poly& p, const Poly& q, Poly& quotient) {
  Poly rem = p;
  const std::size_t dq = q.size() - 1;
  if (rem.size() - 1 < dq) return false;
  quotient.assign(rem.size() - dq, 0);
  for (std::size_t k = rem.size() - 1 + 1; k-- > dq;) {
    std::int64_t coeff = rem[k];
    quotient[k - dq] = coeff;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= coeff * q[j];
  }
  trim(rem);
  return rem.size() == 1 && rem[0] == 0;
}

Poly cyclotomic(int d) {
  Poly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Poly q;
    bool ok = divide_exact(p, cyclotomic(e), q);
    assert(ok);
    (void)ok;
    p = q;
  }
  return p;
}

}  // namespace

RootSystem::RootSystem(Kind kind, int rank)
    : kind_(kind), rank_(rank), cartan_(cartan_matrix(kind, rank)) {
  cartan_det_ = determinant(cartan_);
  for (int i = 0; i < rank_; ++i) {
    IntMatrix s = IntMatrix::identity(rank_);
    IntMatrix t = IntMatrix::identity(rank_);
    for (int j = 0; j < rank_; ++j) {
      s(i, j) -= cartan_(j, i);  // coroot coordinates
      t(i, j) -= cartan_(i, j);  // root coordinates
    }
    coroot_refl_.push_back(std::move(s));
    root_refl_.push_back(std::move(t));
  }
  generate_roots();
  compute_exponents();
  build_coset_chain();
}

std::string RootSystem::name() const {
  return std::string(1, to_char(kind_)) + std::to_string(rank_);
}

bool RootSystem::simply_laced() const {
  return kind_ == Kind::A || kind_ == Kind::D || kind_ == Kind::E;
}

std::int64_t RootSystem::pairing(std::span<const std::int64_t> root, int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_(i, j) * root[j];
  return s;
}

std::size_t RootSystem::negative_of(std::size_t root_index) const {
  const std::size_t half = num_positive_roots();
  return root_index < half ? root_index + half : root_index - half;
}

int RootSystem::index_of(const IntVector& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

void RootSystem::generate_roots() {
  // Every root is W-conjugate to a simple root; close the simple roots (with
  // their coroots) under the simple reflections.
  std::map<IntVector, IntVector> found;
  std::deque<IntVector> queue;
  for (int i = 0; i < rank_; ++i) {
    IntVector e(rank_, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    const IntVector& beta_vee = found.at(beta);
    for (int i = 0; i < rank_; ++i) {
      IntVector image = root_refl_[i].apply(beta);
      IntVector image_vee = coroot_refl_[i].apply(beta_vee);
      auto [it, inserted] = found.emplace(image, image_vee);
      if (inserted)
        queue.push_back(image);
      else if (it->second != image_vee)
        throw std::logic_error("inconsistent coroot for " + name());
    }
  }

  std::vector<IntVector> positive;
  for (const auto& [root, coroot] : found)
    if (height(root) > 0) positive.push_back(root);
  std::sort(positive.begin(), positive.end(),
            [](const IntVector& x, const IntVector& y) {
              auto hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x > y;
            });
  roots_ = positive;
  for (const auto& p : positive) {
    IntVector neg(p);
    for (auto& c : neg) c = -c;
    roots_.push_back(std::move(neg));
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    coroots_.push_back(found.at(roots_[k]));
    index_.emplace(roots_[k], static_cast<int>(k));
  }

  highest_ = positive.size() - 1;
  const IntVector& top = roots_[highest_];
  for (const auto& r : roots_)
    for (int i = 0; i < rank_; ++i)
      if (r[i] > top[i])
        throw std::logic_error("highest root of " + name() + " is not dominant");
}

IntMatrix RootSystem::coxeter_element() const {
  IntMatrix c = IntMatrix::identity(rank_);
  for (int i = 0; i < rank_; ++i) c = c * coroot_refl_[i];
  return c;
}

void RootSystem::compute_exponents() {
  // The eigenvalues of a Coxeter element are exp(2 pi i m_j / h). Factor the
  // characteristic polynomial into cyclotomic polynomials Phi_d, d | h; each
  // primitive d-th root exp(2 pi i j / d) contributes the exponent j h / d.
  const IntMatrix cox = coxeter_element();
  const IntMatrix id = IntMatrix::identity(rank_);
  int h = 1;
  IntMatrix power = cox;
  while (!(power == id)) {
    power = power * cox;
    ++h;
    if (h > static_cast<int>(roots_.size()) + 2)
      throw std::logic_error("Coxeter element of " + name() + " has no finite order");
  }

  Poly chi = characteristic_polynomial(cox);
  exponents_.clear();
  for (int d = 1; d <= h; ++d) {
    if (h % d != 0) continue;
    const Poly phi = cyclotomic(d);
    Poly q;
    while (divide_exact(chi, phi, q)) {
      chi = q;
      for (int j = 1; j <= d; ++j)
        if (std::gcd(j, d) == 1 && j < d) exponents_.push_back(j * (h / d));
    }
  }
  trim(chi);
  if (chi.size() != 1 || chi[0] != 1 ||
      static_cast<int>(exponents_.size()) != rank_)
    throw std::logic_error("Coxeter eigenvalues of " + name() +
                           " are not h-th roots of unity");
  std::sort(exponents_.begin(), exponents_.end());
}

void RootSystem::build_coset_chain() {
  chain_.clear();
  weyl_order_ = 1;
  for (int k = 0; k < rank_; ++k) {
    // Orbit of the k-th fundamental weight (fundamental-weight coordinates)
    // under P_k = <s_k, ..., s_{r-1}>.
    CosetLevel level;
    std::map<IntVector, std::size_t> seen;
    std::vector<IntVector> weights;
    IntVector start(rank_, 0);
    start[k] = 1;
    seen.emplace(start, 0);
    weights.push_back(start);
    level.reps.push_back(IntMatrix::identity(rank_));
    level.words.emplace_back();
    for (std::size_t head = 0; head < weights.size(); ++head) {
      for (int j = k; j < rank_; ++j) {
        IntVector next = weights[head];
        const std::int64_t c = next[j];
        if (c == 0) continue;
        for (int i = 0; i < rank_; ++i) next[i] -= c * cartan_(i, j);
        if (seen.count(next)) continue;
        seen.emplace(next, weights.size());
        weights.push_back(next);
        level.reps.push_back(level.reps[head] * coroot_refl_[j]);
        auto word = level.words[head];
        word.push_back(j);
        level.words.push_back(std::move(word));
      }
    }
    weyl_order_ *= weights.size();
    chain_.push_back(std::move(level));
  }
}

IntVector RootSystem::casimir_weights() const {
  IntVector d(exponents_);
  for (auto& m : d) m += 1;
  return d;
}

std::int64_t RootSystem::dual_coxeter_number() const {
  const IntVector& g = comarks();
  return 1 + std::accumulate(g.begin(), g.end(), std::int64_t{0});
}

std::shared_ptr<const RootSystem> build_root_system(Kind kind, int rank) {
  if (!is_valid_type(kind, rank))
    throw Error(ErrorCode::InvalidRootSystem,
                std::string("no simple root system of type ") + to_char(kind) +
                    std::to_string(rank));
  static std::mutex mutex;
  static std::map<std::pair<Kind, int>, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{kind, rank}];
  if (!slot) slot = std::make_shared<const RootSystem>(kind, rank);
  return slot;
}

std::shared_ptr<const RootSystem> parse_group(const std::string& text) {
  if (text.size() < 2)
    throw Error(ErrorCode::InvalidRootSystem, "malformed group '" + text + "'");
  Kind kind = kind_from_char(text[0]);
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 10000)
      throw Error(ErrorCode::InvalidRootSystem, "malformed group '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  return build_root_system(kind, rank);
}

IntVector wp_weights(const RootSystem& system) {
  IntVector w{1};
  const IntVector& g = system.comarks();
  w.insert(w.end(), g.begin(), g.end());
  return w;
}

IntVector casimir_weights(const RootSystem& system) {
  return system.casimir_weights();
}

bool verify_weyl_identity(const RootSystem& system) {
  if (!system.simply_laced())
    throw Error(ErrorCode::NotSimplyLaced,
                "the Weyl order identity is asserted for simply-laced types only, not " +
                    system.name());
  unsigned __int128 rhs = 1;
  for (int i = 2; i <= system.rank(); ++i) rhs *= i;
  for (auto g : system.comarks()) rhs *= static_cast<unsigned __int128>(g);
  rhs *= static_cast<unsigned __int128>(system.cartan_det());
  return rhs == system.weyl_order();
}

WeylElement::WeylElement(const RootSystem& system, std::vector<int> word)
    : word_(std::move(word)),
      coroot_matrix_(IntMatrix::identity(system.rank())),
      root_matrix_(IntMatrix::identity(system.rank())) {
  for (int i : word_) {
    if (i < 0 || i >= system.rank())
      throw Error(ErrorCode::InvalidParameter,
                  "simple reflection index out of range: " + std::to_string(i));
    coroot_matrix_ = coroot_matrix_ * system.coroot_reflection(i);
    root_matrix_ = root_matrix_ * system.root_reflection(i);
  }
}

WeylElement WeylElement::identity(const RootSystem& system) {
  return WeylElement(system, {});
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (rank() != other.rank())
    throw Error(ErrorCode::MismatchedSystem, "Weyl elements of different rank");
  std::vector<int> w = word_;
  w.insert(w.end(), other.word_.begin(), other.word_.end());
  return WeylElement(std::move(w), coroot_matrix_ * other.coroot_matrix_,
                     root_matrix_ * other.root_matrix_);
}

}  // namespace ellimod
