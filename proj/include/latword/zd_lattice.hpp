#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "latword/lattice_words.hpp"
#include "latword/poset.hpp"

namespace latword {

/// Point of the grid poset: d nonnegative coordinates, componentwise order.
using GridPoint = std::vector<int>;

/// Finite ideal of the grid: a downward-closed cell set, stored sorted
/// (lexicographic) as the canonical profile.
struct MultiDiagram {
  int d = 0;
  std::vector<GridPoint> cells;

  /// Validates dimensions, nonnegativity, uniqueness, downward closure.
  static MultiDiagram of(int d, std::vector<GridPoint> cells);

  bool contains(const GridPoint& p) const;
  std::size_t size() const { return cells.size(); }

  bool operator==(const MultiDiagram&) const = default;
};

/// Lazy provider for the infinite grid poset: answers growth queries for
/// finite ideals without materializing the ground set.
class GridProvider {
 public:
  using Element = GridPoint;

  explicit GridProvider(int d);  // 1 <= d <= 6, else DimensionCap

  int dimension() const { return d_; }

  std::vector<GridPoint> addable(const std::vector<GridPoint>& ideal) const;
  std::vector<GridPoint> removable(const std::vector<GridPoint>& ideal) const;
  std::string label(const std::vector<GridPoint>& ideal) const;

  Relation order(const GridPoint& a, const GridPoint& b) const;
  bool is_ideal(const std::vector<GridPoint>& cells) const;

 private:
  int d_;
};

/// One-dimensional irreducible ideal of the d-grid: the `axis` coordinate is
/// free, the remaining d-1 coordinates range over the cells of `base`.
struct IrreducibleIdeal {
  int axis = 0;       // 0-based free coordinate
  MultiDiagram base;  // dimension d-1

  static IrreducibleIdeal of(int axis, MultiDiagram base);

  int dimension() const { return base.d + 1; }
  bool member(const GridPoint& p) const;
};

bool irreducible_membership(const IrreducibleIdeal& ideal, const GridPoint& point);

/// Element name of the chain sitting at a base cell.
std::string chain_name(const GridPoint& base_cell);

/// Base cells of the component ordered like the chain-poset element indices.
std::vector<GridPoint> chain_cells(const IrreducibleIdeal& ideal);

/// The finite poset of chains of an irreducible component, one element per
/// base cell.  A word over this poset embeds as a growing grid ideal exactly
/// when the chain at u stays at least as long as the chain at v whenever v
/// covers u in the base: the embedded cell (axis: l, base: v) needs
/// (axis: l, base: v - e_k) present, so counts must not increase along the
/// base order.  The chain poset is therefore the base cells under the
/// OPPOSITE of the componentwise order: the origin cell is the unique
/// maximal element and carries the largest frequency.
Poset chains_of(const IrreducibleIdeal& ideal);

/// Union of at most d irreducible ideals with pairwise distinct axes.
struct OneDimMinimalIdeal {
  std::vector<IrreducibleIdeal> components;

  static OneDimMinimalIdeal of(std::vector<IrreducibleIdeal> components);

  int dimension() const;
  bool member(const GridPoint& p) const;
};

struct Decomposition {
  std::vector<std::pair<int, int>> pairs;  // component index pairs, i < j
  std::vector<MultiDiagram> pairwise_intersections;  // aligned with pairs
  bool all_finite = true;
};

/// Explicit finite intersection diagrams for every component pair.
Decomposition decompose(const OneDimMinimalIdeal& ideal);

/// Inclusion comparison of two one-dimensional minimal ideals.
Relation min1_compare(const OneDimMinimalIdeal& a, const OneDimMinimalIdeal& b);

struct ComponentReduction {
  std::shared_ptr<const Poset> poset;  // chains_of the component
  std::map<std::string, double> raw;   // input frequencies, unnormalized
  double weight = 0.0;                 // sum of raw values
  Spectrum spectrum;                   // renormalized to sum 1 in the component
};

/// Splits chain frequencies per component and renormalizes each component to
/// a valid Spectrum; the raw maps partition the input exactly.  Frequencies
/// are keyed by chain_name; the global sum must be 1 within 1e-12.
std::vector<ComponentReduction> reduce_to_chain_poset(
    const OneDimMinimalIdeal& ideal,
    const std::vector<std::map<std::string, double>>& freqs_per_component);

/// Embeds a word over chains_of(component) as a path of grid diagrams: the
/// k-th letter u becomes the cell with base coordinates u and axis
/// coordinate (occurrences of u so far) - 1.
std::vector<MultiDiagram> tableau_embed(const IrreducibleIdeal& component,
                                        const LatticeWord& word);

/// Inverse of tableau_embed: reads the added cell of each step back to a
/// letter of chains_of(component).
std::vector<int> embed_pullback(const IrreducibleIdeal& component,
                                const std::vector<MultiDiagram>& path);

}  // namespace latword
