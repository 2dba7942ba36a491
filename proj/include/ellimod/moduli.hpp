#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ellimod/rootsys.hpp"

namespace ellimod {

// WP(g_0, ..., g_r), the coarse moduli space of semistable bundles.
struct WPSpace {
  IntVector weights;
  int dim = 0;
};

WPSpace wp_space(const RootSystem& system);

// Dimension of the locus with Z/d isotropy: #{i in 0..r : d | g_i}, d >= 2.
std::int64_t stratum_dim(const RootSystem& system, std::int64_t d);

enum class MarkingRule { Trivalent, MultipleEdgeLongRoot, ATypeChoice };

const char* to_string(MarkingRule rule);

struct ParabolicData {
  int marked_node = 0;  // 0-based; Bourbaki node is marked_node + 1
  MarkingRule rule = MarkingRule::ATypeChoice;
  std::int64_t mark = 0;  // coefficient of the highest root at the node
  // level k -> number of positive roots with coefficient k at the node
  std::map<std::int64_t, std::int64_t> level_counts;
  SubsystemReport levi;
};

// Maximal parabolic of the parabolic construction. `d` selects P_d for type
// A (1 <= d <= r) and must be absent otherwise.
ParabolicData parabolic_data(const RootSystem& system,
                             std::optional<std::int64_t> d = std::nullopt);

struct FamilyRow {
  std::int64_t weight;    // C^* weight g_i
  std::int64_t exponent;  // line bundle L^{-d_i}; 0 for the O_B row
  bool operator==(const FamilyRow&) const = default;
};

struct FamilyTable {
  std::vector<FamilyRow> rows;
};

// Casimir weights in the order used by the family table: ascending, except
// D_n which uses 2, 4, n, 6, 8, ..., 2n - 2.
IntVector family_exponent_order(const RootSystem& system);

// Throws Error(ExcludedType) for E8.
FamilyTable family_table(const RootSystem& system);

// Order of the central subgroup dividing the universal bundle's group.
std::int64_t n_P(const RootSystem& system,
                 std::optional<std::int64_t> d = std::nullopt);

// |Z(G)| for the simply connected group, = det of the Cartan matrix.
std::int64_t center_order(const RootSystem& system);

}  // namespace ellimod
