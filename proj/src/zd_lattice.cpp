#include "latword/zd_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <set>

#include "latword/errors.hpp"

namespace latword {

namespace {

constexpr std::size_t kMaxBoxCells = 1'000'000;
constexpr double kMaxCompareCells = 5e7;

std::string point_str(const GridPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

GridPoint drop_axis(const GridPoint& p, int axis) {
  GridPoint q;
  q.reserve(p.size() - 1);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (static_cast<int>(k) != axis) q.push_back(p[k]);
  return q;
}

void check_point(const GridPoint& p, int d) {
  if (static_cast<int>(p.size()) != d)
    fail(errc::dimension_mismatch, "point " + point_str(p) + " has dimension " +
                                       std::to_string(p.size()) + ", expected " + std::to_string(d));
  for (int x : p)
    if (x < 0) fail(errc::invalid_argument, "point coordinates must be nonnegative: " + point_str(p));
}

}  // namespace

MultiDiagram MultiDiagram::of(int d, std::vector<GridPoint> cells) {
  if (d < 0) fail(errc::invalid_argument, "diagram dimension must be nonnegative");
  for (const auto& c : cells) check_point(c, d);
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    fail(errc::invalid_argument, "duplicate cell in diagram");
  for (const auto& c : cells) {
    for (int k = 0; k < d; ++k) {
      if (c[static_cast<std::size_t>(k)] == 0) continue;
      GridPoint lower = c;
      --lower[static_cast<std::size_t>(k)];
      if (!std::binary_search(cells.begin(), cells.end(), lower))
        fail(errc::invalid_argument, "diagram not downward closed: " + point_str(c) +
                                         " present without " + point_str(lower));
    }
  }
  MultiDiagram m;
  m.d = d;
  m.cells = std::move(cells);
  return m;
}

bool MultiDiagram::contains(const GridPoint& p) const {
  return std::binary_search(cells.begin(), cells.end(), p);
}

GridProvider::GridProvider(int d) : d_(d) {
  if (d < 1 || d > 6)
    fail(errc::dimension_cap, "grid dimension must be between 1 and 6, got " + std::to_string(d));
}

Relation GridProvider::order(const GridPoint& a, const GridPoint& b) const {
  check_point(a, d_);
  check_point(b, d_);
  bool ge = true, le = true;
  for (int k = 0; k < d_; ++k) {
    if (a[static_cast<std::size_t>(k)] < b[static_cast<std::size_t>(k)]) ge = false;
    if (a[static_cast<std::size_t>(k)] > b[static_cast<std::size_t>(k)]) le = false;
  }
  if (ge && le) return Relation::equal;
  if (ge) return Relation::greater;
  if (le) return Relation::less;
  return Relation::incomparable;
}

bool GridProvider::is_ideal(const std::vector<GridPoint>& cells) const {
  std::vector<GridPoint> sorted = cells;
  for (const auto& c : sorted) check_point(c, d_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(errc::invalid_argument, "duplicate cell");
  for (const auto& c : sorted) {
    for (int k = 0; k < d_; ++k) {
      if (c[static_cast<std::size_t>(k)] == 0) continue;
      GridPoint lower = c;
      --lower[static_cast<std::size_t>(k)];
      if (!std::binary_search(sorted.begin(), sorted.end(), lower)) return false;
    }
  }
  return true;
}

std::vector<GridPoint> GridProvider::addable(const std::vector<GridPoint>& ideal) const {
  std::vector<GridPoint> cells = ideal;
  for (const auto& c : cells) check_point(c, d_);
  std::sort(cells.begin(), cells.end());
  auto present = [&](const GridPoint& p) {
    return std::binary_search(cells.begin(), cells.end(), p);
  };
  std::set<GridPoint> candidates;
  candidates.insert(GridPoint(static_cast<std::size_t>(d_), 0));
  for (const auto& c : cells) {
    for (int k = 0; k < d_; ++k) {
      GridPoint up = c;
      ++up[static_cast<std::size_t>(k)];
      candidates.insert(std::move(up));
    }
  }
  std::vector<GridPoint> out;
  for (const auto& p : candidates) {
    if (present(p)) continue;
    bool supported = true;
    for (int k = 0; k < d_ && supported; ++k) {
      if (p[static_cast<std::size_t>(k)] == 0) continue;
      GridPoint lower = p;
      --lower[static_cast<std::size_t>(k)];
      supported = present(lower);
    }
    if (supported) out.push_back(p);
  }
  return out;  // set order is lexicographic already
}

std::vector<GridPoint> GridProvider::removable(const std::vector<GridPoint>& ideal) const {
  std::vector<GridPoint> cells = ideal;
  for (const auto& c : cells) check_point(c, d_);
  std::sort(cells.begin(), cells.end());
  auto present = [&](const GridPoint& p) {
    return std::binary_search(cells.begin(), cells.end(), p);
  };
  std::vector<GridPoint> out;
  for (const auto& c : cells) {
    bool maximal = true;
    for (int k = 0; k < d_ && maximal; ++k) {
      GridPoint up = c;
      ++up[static_cast<std::size_t>(k)];
      maximal = !present(up);
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

std::string GridProvider::label(const std::vector<GridPoint>& ideal) const {
  std::vector<GridPoint> cells = ideal;
  std::sort(cells.begin(), cells.end());
  std::string s = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ",";
    s += point_str(cells[i]);
  }
  return s + "}";
}

IrreducibleIdeal IrreducibleIdeal::of(int axis, MultiDiagram base) {
  MultiDiagram canonical = MultiDiagram::of(base.d, base.cells);
  if (axis < 0 || axis > canonical.d)
    fail(errc::invalid_argument,
         "axis " + std::to_string(axis + 1) + " out of range for dimension " +
             std::to_string(canonical.d + 1));
  if (canonical.cells.empty())
    fail(errc::invalid_argument, "irreducible component needs a nonempty base");
  IrreducibleIdeal out;
  out.axis = axis;
  out.base = std::move(canonical);
  return out;
}

bool IrreducibleIdeal::member(const GridPoint& p) const { return irreducible_membership(*this, p); }

bool irreducible_membership(const IrreducibleIdeal& ideal, const GridPoint& point) {
  check_point(point, ideal.dimension());
  return ideal.base.contains(drop_axis(point, ideal.axis));
}

std::string chain_name(const GridPoint& base_cell) {
  std::string s = "u";
  for (std::size_t i = 0; i < base_cell.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(base_cell[i]);
  }
  return s;
}

std::vector<GridPoint> chain_cells(const IrreducibleIdeal& ideal) {
  std::vector<GridPoint> cells = ideal.base.cells;
  std::sort(cells.begin(), cells.end(),
            [](const GridPoint& a, const GridPoint& b) { return chain_name(a) < chain_name(b); });
  return cells;
}

Poset chains_of(const IrreducibleIdeal& ideal) {
  if (ideal.base.cells.empty()) fail(errc::invalid_argument, "component has an empty base");
  std::vector<std::string> names;
  names.reserve(ideal.base.cells.size());
  for (const auto& c : ideal.base.cells) names.push_back(chain_name(c));
  // A word over the chains embeds as a growing grid ideal exactly when the
  // chain over u is always at least as long as the chain over u + e_k: the
  // embedded cell (base u + e_k, height l) needs (base u, height l) below
  // it.  Prefix counts must be monotone against the base grid order, so the
  // chain poset is the base REVERSED: u covers u + e_k, and the origin cell
  // is the unique maximal element (it carries the largest frequency).
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& u : ideal.base.cells) {
    for (int k = 0; k < ideal.base.d; ++k) {
      GridPoint v = u;
      ++v[static_cast<std::size_t>(k)];
      if (ideal.base.contains(v)) covers.emplace_back(chain_name(u), chain_name(v));
    }
  }
  return Poset::build(names, covers);
}

OneDimMinimalIdeal OneDimMinimalIdeal::of(std::vector<IrreducibleIdeal> components) {
  if (components.empty()) fail(errc::invalid_argument, "ideal needs at least one component");
  const int d = components.front().dimension();
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (auto& c : components) {
    c = IrreducibleIdeal::of(c.axis, c.base);
    if (c.dimension() != d) fail(errc::dimension_mismatch, "components have mixed dimensions");
    if (used[static_cast<std::size_t>(c.axis)])
      fail(errc::infinite_intersection,
           "two components share axis " + std::to_string(c.axis + 1));
    used[static_cast<std::size_t>(c.axis)] = true;
  }
  OneDimMinimalIdeal out;
  out.components = std::move(components);
  return out;
}

int OneDimMinimalIdeal::dimension() const { return components.front().dimension(); }

bool OneDimMinimalIdeal::member(const GridPoint& p) const {
  check_point(p, dimension());
  for (const auto& c : components)
    if (c.member(p)) return true;
  return false;
}

Decomposition decompose(const OneDimMinimalIdeal& ideal) {
  const int d = ideal.dimension();
  const int m = static_cast<int>(ideal.components.size());
  Decomposition out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const IrreducibleIdeal& a = ideal.components[static_cast<std::size_t>(i)];
      const IrreducibleIdeal& b = ideal.components[static_cast<std::size_t>(j)];
      if (a.axis == b.axis)
        fail(errc::infinite_intersection,
             "components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " share axis " + std::to_string(a.axis + 1));
      // Coordinate k of any common point is a base coordinate of every
      // component whose axis differs from k; distinct axes bound every
      // coordinate, so the intersection lives in a finite box.
      std::vector<int> bound(static_cast<std::size_t>(d), -1);
      auto tighten = [&](const IrreducibleIdeal& comp) {
        for (int k = 0; k < d; ++k) {
          if (k == comp.axis) continue;
          const int idx = k - (k > comp.axis ? 1 : 0);
          int extent = 0;
          for (const auto& c : comp.base.cells)
            extent = std::max(extent, c[static_cast<std::size_t>(idx)] + 1);
          auto& bk = bound[static_cast<std::size_t>(k)];
          bk = bk < 0 ? extent : std::min(bk, extent);
        }
      };
      tighten(a);
      tighten(b);
      std::size_t box = 1;
      for (int k = 0; k < d; ++k) {
        const auto bk = static_cast<std::size_t>(bound[static_cast<std::size_t>(k)]);
        if (bk == 0) {
          box = 0;
          break;
        }
        if (box > kMaxBoxCells / bk)
          fail(errc::resource_bound, "pairwise intersection box exceeds cell cap");
        box *= bk;
      }
      std::vector<GridPoint> cells;
      if (box > 0) {
        GridPoint p(static_cast<std::size_t>(d), 0);
        while (true) {
          if (a.member(p) && b.member(p)) cells.push_back(p);
          int k = 0;
          while (k < d && p[static_cast<std::size_t>(k)] + 1 == bound[static_cast<std::size_t>(k)]) {
            p[static_cast<std::size_t>(k)] = 0;
            ++k;
          }
          if (k == d) break;
          ++p[static_cast<std::size_t>(k)];
        }
      }
      out.pairs.emplace_back(i, j);
      out.pairwise_intersections.push_back(MultiDiagram::of(d, std::move(cells)));
    }
  }
  return out;
}

Relation min1_compare(const OneDimMinimalIdeal& a, const OneDimMinimalIdeal& b) {
  if (a.dimension() != b.dimension())
    fail(errc::dimension_mismatch, "cannot compare ideals of different dimensions");
  const int d = a.dimension();
  // Membership in a component drops the axis coordinate and tests the rest
  // against a finite base.  Let M exceed every base coordinate of either
  // ideal.  Clamping any coordinate from y > M down to M changes no answer:
  // a non-axis coordinate > M lies outside every base both before and after
  // the clamp, and the axis coordinate is never read.  Inclusion over the
  // whole grid therefore holds iff it holds on the box [0, M]^d.
  int M = 1;
  for (const auto* ideal : {&a, &b})
    for (const auto& comp : ideal->components)
      for (const auto& c : comp.base.cells)
        for (int x : c) M = std::max(M, x + 1);
  if (std::pow(static_cast<double>(M) + 1.0, d) > kMaxCompareCells)
    fail(errc::resource_bound, "comparison box exceeds cell cap");
  bool a_in_b = true, b_in_a = true;
  GridPoint p(static_cast<std::size_t>(d), 0);
  while (a_in_b || b_in_a) {
    const bool ina = a.member(p), inb = b.member(p);
    if (ina && !inb) a_in_b = false;
    if (inb && !ina) b_in_a = false;
    int k = 0;
    while (k < d && p[static_cast<std::size_t>(k)] == M) {
      p[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == d) break;
    ++p[static_cast<std::size_t>(k)];
  }
  if (a_in_b && b_in_a) return Relation::equal;
  if (b_in_a) return Relation::greater;
  if (a_in_b) return Relation::less;
  return Relation::incomparable;
}

std::vector<ComponentReduction> reduce_to_chain_poset(
    const OneDimMinimalIdeal& ideal,
    const std::vector<std::map<std::string, double>>& freqs_per_component) {
  if (freqs_per_component.size() != ideal.components.size())
    fail(errc::invalid_argument,
         "need one frequency map per component, got " + std::to_string(freqs_per_component.size()) +
             " for " + std::to_string(ideal.components.size()) + " components");
  std::vector<ComponentReduction> out;
  double total = 0.0;
  for (std::size_t i = 0; i < ideal.components.size(); ++i) {
    auto poset = std::make_shared<const Poset>(chains_of(ideal.components[i]));
    const auto& raw = freqs_per_component[i];
    if (static_cast<int>(raw.size()) != poset->size())
      fail(errc::unknown_element, "component " + std::to_string(i + 1) + " has " +
                                      std::to_string(poset->size()) + " chains but " +
                                      std::to_string(raw.size()) + " frequencies");
    double weight = 0.0;
    for (const auto& [name, value] : raw) {
      poset->index_of(name);
      if (!(value > 0.0))
        fail(errc::nonpositive_frequency, "frequency of " + name + " must be positive");
      weight += value;
    }
    total += weight;
    std::map<std::string, double> renorm;
    for (const auto& [name, value] : raw) renorm.emplace(name, value / weight);
    out.push_back(ComponentReduction{poset, raw, weight, Spectrum::validate(poset, renorm)});
  }
  if (std::abs(total - 1.0) > Spectrum::kSumTolerance)
    fail(errc::sum_mismatch,
         "chain frequencies sum to " + std::to_string(total) + ", expected 1");
  return out;
}

std::vector<MultiDiagram> tableau_embed(const IrreducibleIdeal& component,
                                        const LatticeWord& word) {
  const Poset chain = chains_of(component);
  if (!(*word.parent == chain))
    fail(errc::invalid_argument, "word poset does not match the component's chain poset");
  if (word.convention != Convention::weak)
    fail(errc::convention_unsupported, "embedding is defined for weak lattice words");
  const std::vector<GridPoint> cells = chain_cells(component);  // aligned with element indices
  const int d = component.dimension();
  std::vector<GridPoint> acc;
  std::vector<int> counts(cells.size(), 0);
  std::vector<MultiDiagram> path;
  path.reserve(word.letters.size());
  for (int letter : word.letters) {
    GridPoint p = cells[static_cast<std::size_t>(letter)];
    p.insert(p.begin() + component.axis, counts[static_cast<std::size_t>(letter)]);
    ++counts[static_cast<std::size_t>(letter)];
    acc.push_back(std::move(p));
    path.push_back(MultiDiagram::of(d, acc));  // revalidates downward closure
  }
  return path;
}

std::vector<int> embed_pullback(const IrreducibleIdeal& component,
                                const std::vector<MultiDiagram>& path) {
  const Poset chain = chains_of(component);
  const int d = component.dimension();
  std::vector<int> letters;
  letters.reserve(path.size());
  std::vector<GridPoint> prev;
  for (std::size_t step = 0; step < path.size(); ++step) {
    const MultiDiagram& diag = path[step];
    if (diag.d != d)
      fail(errc::dimension_mismatch, "path diagram has dimension " + std::to_string(diag.d) +
                                         ", component has " + std::to_string(d));
    if (diag.cells.size() != step + 1)
      fail(errc::invalid_argument, "path must grow by one cell per step");
    std::vector<GridPoint> added;
    std::set_difference(diag.cells.begin(), diag.cells.end(), prev.begin(), prev.end(),
                        std::back_inserter(added));
    if (added.size() != 1)
      fail(errc::invalid_argument,
           "step " + std::to_string(step + 1) + " does not extend the previous diagram");
    const GridPoint& p = added.front();
    if (!component.member(p))
      fail(errc::invalid_argument, "cell " + point_str(p) + " lies outside the component");
    letters.push_back(chain.index_of(chain_name(drop_axis(p, component.axis))));
    prev = diag.cells;
  }
  // growing ideals always read back to a lattice word; keep the check cheap
  if (!is_lattice(chain, letters)) fail(errc::not_lattice, "path does not trace a lattice word");
  return letters;
}

}  // namespace latword
