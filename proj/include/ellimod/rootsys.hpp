#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ellimod/matrix.hpp"

namespace ellimod {

enum class Kind { A, B, C, D, E, F, G };

char to_char(Kind kind);
Kind kind_from_char(char c);  // throws Error(InvalidRootSystem)

// Coefficient vector over the simple roots (or simple coroots, or
// fundamental weights, depending on context).
using IntVector = std::vector<std::int64_t>;

// One level of the stabilizer chain W = P_0 > P_1 > ... > P_r = 1, where
// P_k is generated by the simple reflections s_{k+1}, ..., s_r (0-based:
// s_k, ..., s_{r-1}). Each representative c has the property that row k of
// its coroot-coordinate matrix is c^{-1} applied to the k-th fundamental
// weight, and the sets P_{k+1} c partition P_k.
struct CosetLevel {
  std::vector<IntMatrix> reps;
  std::vector<std::vector<int>> words;  // c as a product of simple reflections
};

// Immutable simple root system in Bourbaki labeling. Indices are 0-based in
// code; the 1-based Bourbaki node numbers are index + 1.
class RootSystem {
 public:
  RootSystem(Kind kind, int rank);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const;  // e.g. "E8"
  bool simply_laced() const;

  // cartan()(i, j) = <alpha_i^vee, alpha_j>.
  const IntMatrix& cartan() const { return cartan_; }
  std::int64_t cartan_det() const { return cartan_det_; }

  // Positive roots first (by height, simple roots leading), then their
  // negatives in the same order.
  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive_roots() const { return roots_.size() / 2; }
  bool is_positive(std::size_t root_index) const {
    return root_index < num_positive_roots();
  }
  std::size_t negative_of(std::size_t root_index) const;
  // -1 when v is not a root.
  int index_of(const IntVector& v) const;

  std::size_t highest_root_index() const { return highest_; }
  const IntVector& marks() const { return roots_[highest_]; }
  const IntVector& comarks() const { return coroots_[highest_]; }
  const IntVector& exponents() const { return exponents_; }
  IntVector casimir_weights() const;

  std::uint64_t weyl_order() const { return weyl_order_; }
  std::int64_t coxeter_number() const { return exponents_.back() + 1; }
  std::int64_t dual_coxeter_number() const;
  std::int64_t dimension() const {
    return rank_ + static_cast<std::int64_t>(roots_.size());
  }

  // <alpha, alpha_i^vee> for the root alpha given by its coefficients.
  std::int64_t pairing(std::span<const std::int64_t> root, int i) const;

  // Matrices of the simple reflection s_i acting on coroot coordinates and on
  // root coordinates respectively.
  const IntMatrix& coroot_reflection(int i) const { return coroot_refl_[i]; }
  const IntMatrix& root_reflection(int i) const { return root_refl_[i]; }

  const std::vector<CosetLevel>& coset_chain() const { return chain_; }

  // The Coxeter element s_1 s_2 ... s_r on coroot coordinates.
  IntMatrix coxeter_element() const;

 private:
  void generate_roots();
  void build_coset_chain();
  void compute_exponents();

  Kind kind_;
  int rank_;
  IntMatrix cartan_;
  std::int64_t cartan_det_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::map<IntVector, int> index_;
  std::size_t highest_ = 0;
  IntVector exponents_;
  std::uint64_t weyl_order_ = 0;
  std::vector<IntMatrix> coroot_refl_;
  std::vector<IntMatrix> root_refl_;
  std::vector<CosetLevel> chain_;
};

// Valid (kind, rank) pairs: A r>=1, B r>=2, C r>=2, D r>=3, E r in {6,7,8},
// F 4, G 2.
bool is_valid_type(Kind kind, int rank);

IntMatrix cartan_matrix(Kind kind, int rank);

// Shared, cached instance. Throws Error(InvalidRootSystem).
std::shared_ptr<const RootSystem> build_root_system(Kind kind, int rank);

// Parses "E8", "a4", ... Throws Error(InvalidRootSystem).
std::shared_ptr<const RootSystem> parse_group(const std::string& text);

// (g_0, g_1, ..., g_r) with g_0 = 1 and g_i the comarks.
IntVector wp_weights(const RootSystem& system);

// d_i = m_i + 1 in ascending order.
IntVector casimir_weights(const RootSystem& system);

// |W| == r! * prod(g_i) * det(Cartan). Simply-laced systems only.
bool verify_weyl_identity(const RootSystem& system);

// Weyl group element given by a word in the simple reflections.
class WeylElement {
 public:
  WeylElement(const RootSystem& system, std::vector<int> word);
  static WeylElement identity(const RootSystem& system);

  const std::vector<int>& word() const { return word_; }
  const IntMatrix& matrix() const { return coroot_matrix_; }  // on coroots
  const IntMatrix& root_matrix() const { return root_matrix_; }
  int rank() const { return coroot_matrix_.rows(); }

  IntVector apply_to_root(std::span<const std::int64_t> root) const {
    return root_matrix_.apply(root);
  }
  WeylElement operator*(const WeylElement& other) const;

 private:
  WeylElement(std::vector<int> word, IntMatrix coroot, IntMatrix root)
      : word_(std::move(word)),
        coroot_matrix_(std::move(coroot)),
        root_matrix_(std::move(root)) {}

  std::vector<int> word_;
  IntMatrix coroot_matrix_;
  IntMatrix root_matrix_;
};

struct SubsystemComponent {
  Kind kind;
  int rank;
  std::vector<std::size_t> simple_roots;  // indices into system.roots()
};

struct SubsystemReport {
  std::vector<SubsystemComponent> components;
  int total_rank = 0;
  std::size_t num_roots = 0;
};

// Identifies the root subsystem formed by `roots` (indices into
// system.roots()). Throws Error(SubsetNotClosed) unless the subset is closed
// under negation and under sums that are roots.
SubsystemReport classify_subsystem(const RootSystem& system,
                                   std::span<const std::size_t> roots);

// Identifies a connected Cartan matrix up to relabeling. Returns false when
// it matches no simple type.
bool identify_cartan(const IntMatrix& cartan, Kind& kind);

}  // namespace ellimod
