#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "latword/bigint.hpp"
#include "latword/errors.hpp"
#include "latword/interval.hpp"
#include "latword/poset.hpp"

namespace latword {

/// Resource caps for graph construction and path counting.
struct Caps {
  std::size_t max_vertices = 1'000'000;
  std::size_t max_memo = 10'000'000;
  std::size_t max_paths = 1'000'000;
};

/// A poset provider answers ideal-growth queries without materializing the
/// ground set: addable(I) lists the minimal elements of the complement,
/// removable(I) the maximal elements of I.  Ideals are canonically sorted
/// element vectors.  Implemented by FinitePosetProvider and GridProvider.
template <class P>
concept PosetProviderLike = requires(const P& prov, const std::vector<typename P::Element>& ideal) {
  typename P::Element;
  { prov.addable(ideal) } -> std::convertible_to<std::vector<typename P::Element>>;
  { prov.removable(ideal) } -> std::convertible_to<std::vector<typename P::Element>>;
  { prov.label(ideal) } -> std::convertible_to<std::string>;
};

class FinitePosetProvider {
 public:
  using Element = int;
  using Ideal = std::vector<int>;

  explicit FinitePosetProvider(std::shared_ptr<const Poset> poset) : poset_(std::move(poset)) {}
  const Poset& poset() const { return *poset_; }

  std::vector<int> addable(const Ideal& ideal) const;
  std::vector<int> removable(const Ideal& ideal) const;
  std::string label(const Ideal& ideal) const;

 private:
  std::shared_ptr<const Poset> poset_;
};

/// Levels of the graded graph of finite ideals, graded by cardinality.
/// Vertices carry their canonical labels; edges connect consecutive levels.
struct GradedGraph {
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<std::vector<int>>> edges;  // edges[n][i]: indices into levels[n+1]

  std::vector<std::size_t> level_sizes() const {
    std::vector<std::size_t> s;
    s.reserve(levels.size());
    for (const auto& l : levels) s.push_back(l.size());
    return s;
  }
};

struct UniformityReport {
  std::size_t path_count = 0;
  double max_lower = 0.0;  // largest bracket lower bound over paths
  double min_upper = 0.0;  // smallest bracket upper bound over paths
  Interval lowest_bracket{0, 0};
  Interval highest_bracket{0, 0};
  bool uniform_not_refuted = true;
};

namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
inline std::size_t element_hash(int x) { return static_cast<std::size_t>(x) * 0x9e3779b97f4a7c15ULL; }
inline std::size_t element_hash(const std::vector<int>& v) {
  std::size_t h = v.size();
  for (int x : v) h = hash_mix(h, static_cast<std::size_t>(x));
  return h;
}

struct IdealHash {
  template <class E>
  std::size_t operator()(const std::vector<E>& v) const {
    std::size_t h = v.size();
    for (const auto& e : v) h = hash_mix(h, element_hash(e));
    return h;
  }
};

template <class E>
std::vector<E> with_element(std::vector<E> ideal, const E& x) {
  ideal.push_back(x);
  std::sort(ideal.begin(), ideal.end());
  return ideal;
}

template <class E>
std::vector<E> without_element(const std::vector<E>& ideal, const E& x) {
  std::vector<E> out;
  out.reserve(ideal.size() - 1);
  for (const auto& e : ideal)
    if (!(e == x)) out.push_back(e);
  return out;
}

}  // namespace detail

/// All ideals obtained from `ideal` by adding one addable element,
/// in the provider's canonical element order.
template <PosetProviderLike P>
std::vector<std::vector<typename P::Element>> successors(
    const P& provider, const std::vector<typename P::Element>& ideal) {
  std::vector<std::vector<typename P::Element>> out;
  for (const auto& x : provider.addable(ideal)) out.push_back(detail::with_element(ideal, x));
  return out;
}

/// Breadth-first construction of the graded graph down to `depth`.
template <PosetProviderLike P>
GradedGraph build_levels(const P& provider, int depth, const Caps& caps = {}) {
  using Ideal = std::vector<typename P::Element>;
  if (depth < 0) fail(errc::invalid_argument, "depth must be nonnegative");
  GradedGraph g;
  std::vector<Ideal> frontier{Ideal{}};
  g.levels.push_back({provider.label(Ideal{})});
  std::size_t total = 1;
  for (int n = 0; n < depth; ++n) {
    std::vector<Ideal> next;
    std::unordered_map<Ideal, int, detail::IdealHash> index;
    std::vector<std::vector<int>> level_edges(frontier.size());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const auto& x : provider.addable(frontier[i])) {
        Ideal succ = detail::with_element(frontier[i], x);
        auto [it, inserted] = index.try_emplace(succ, static_cast<int>(next.size()));
        if (inserted) {
          next.push_back(succ);
          if (++total > caps.max_vertices)
            fail(errc::resource_bound, "graded graph exceeds vertex cap");
        }
        level_edges[i].push_back(it->second);
      }
      std::sort(level_edges[i].begin(), level_edges[i].end());
    }
    g.edges.push_back(std::move(level_edges));
    std::vector<std::string> labels;
    labels.reserve(next.size());
    for (const auto& v : next) labels.push_back(provider.label(v));
    g.levels.push_back(std::move(labels));
    frontier = std::move(next);
  }
  return g;
}

/// Exact number of paths from the empty ideal, via the recursion
/// dim(I) = sum over maximal m of dim(I minus m), memoized.
template <PosetProviderLike P>
BigInt count_paths(const P& provider, const std::vector<typename P::Element>& ideal,
                   const Caps& caps = {}) {
  using Ideal = std::vector<typename P::Element>;
  std::unordered_map<Ideal, BigInt, detail::IdealHash> memo;
  std::function<const BigInt&(const Ideal&)> rec = [&](const Ideal& I) -> const BigInt& {
    auto it = memo.find(I);
    if (it != memo.end()) return it->second;
    if (memo.size() >= caps.max_memo) fail(errc::resource_bound, "path-count memo exceeds cap");
    BigInt total = 0;
    if (I.empty()) {
      total = 1;
    } else {
      for (const auto& m : provider.removable(I)) total += rec(detail::without_element(I, m));
    }
    return memo.emplace(I, std::move(total)).first->second;
  };
  return rec(ideal);
}

/// n! over the product of hook lengths, for a 2-d partition
/// (weakly decreasing row lengths).
BigInt hook_length_count(const std::vector<int>& partition);

/// Enumerates every path from the empty ideal to `vertex` and compares the
/// probability brackets assigned by `prob`.  Paths are passed in forward
/// order (first added element first).
template <PosetProviderLike P>
UniformityReport check_uniform_conditional(
    const P& provider, const std::vector<typename P::Element>& vertex,
    const std::function<Interval(const std::vector<typename P::Element>&)>& prob,
    const Caps& caps = {}) {
  using Ideal = std::vector<typename P::Element>;
  UniformityReport report;
  bool first = true;
  std::vector<typename P::Element> reversed;
  std::function<void(const Ideal&)> walk = [&](const Ideal& I) {
    if (I.empty()) {
      if (++report.path_count > caps.max_paths)
        fail(errc::resource_bound, "path enumeration exceeds cap");
      std::vector<typename P::Element> path(reversed.rbegin(), reversed.rend());
      Interval b = prob(path);
      if (first) {
        report.max_lower = b.lo;
        report.min_upper = b.hi;
        report.lowest_bracket = report.highest_bracket = b;
        first = false;
      } else {
        if (b.lo > report.max_lower) report.max_lower = b.lo;
        if (b.hi < report.min_upper) report.min_upper = b.hi;
        if (b.lo < report.lowest_bracket.lo) report.lowest_bracket = b;
        if (b.hi > report.highest_bracket.hi) report.highest_bracket = b;
      }
      return;
    }
    for (const auto& m : provider.removable(I)) {
      reversed.push_back(m);
      walk(detail::without_element(I, m));
      reversed.pop_back();
    }
  };
  walk(vertex);
  report.uniform_not_refuted = report.path_count == 0 || report.max_lower <= report.min_upper;
  return report;
}

}  // namespace latword
