#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "latword/bigint.hpp"
#include "latword/errors.hpp"

namespace latword {

enum class Relation { greater, less, equal, incomparable };

/// Finite poset over opaque string identifiers.  Covers are stored as a
/// transitive reduction; the full order is the cached transitive closure.
/// Elements are indexed 0..n-1 in lexicographic identifier order, which is
/// the canonical order used everywhere (successor lists, enumeration).
/// Immutable after construction.
class Poset {
 public:
  /// Validates identifiers, rejects cycles, reduces covers.
  /// `covers` pairs are (a, b) meaning a covers b (a above b).
  static Poset build(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& covers);

  static Poset chain(int n);      // elements c1 > c2 > ... > cn
  static Poset antichain(int n);  // no relations

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& id) const;  // throws UnknownElement
  bool has(const std::string& id) const;

  bool greater(int a, int b) const { return closure_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  Relation order(int a, int b) const;

  /// Reduced cover pairs (a, b) with a covering b, lexicographic order.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& covers_below(int a) const { return below_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& covers_above(int b) const { return above_[static_cast<std::size_t>(b)]; }

  /// True iff `subset` (element indices) is downward closed.
  bool is_ideal(const std::vector<int>& subset) const;

  /// Smallest ideal containing `subset`.
  std::vector<int> down_closure(const std::vector<int>& subset) const;

  bool operator==(const Poset& o) const {
    return names_ == o.names_ && covers_ == o.covers_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> below_, above_;
  std::vector<std::vector<bool>> closure_;  // closure_[a][b]: a strictly above b
};

/// Downward-closed subset of a finite poset.
struct FiniteIdeal {
  std::shared_ptr<const Poset> parent;
  std::vector<int> members;  // sorted element indices

  static FiniteIdeal of(std::shared_ptr<const Poset> poset, std::vector<int> members);
};

Relation order_query(const Poset& p, const std::string& a, const std::string& b);
bool is_ideal(const Poset& p, const std::vector<std::string>& subset);

/// Exact number of linear extensions of the subposet induced by `members`.
/// Dynamic program over downward-closed subsets; |members| capped at 24.
BigInt linear_extension_count(const Poset& p, const std::vector<int>& members);
BigInt linear_extension_count(const FiniteIdeal& ideal);

/// Frequencies on poset elements: strictly positive, pairwise distinct,
/// order-agreeing (a above b implies freq a > freq b), summing to 1
/// within 1e-12.  Validated at construction.
class Spectrum {
 public:
  static constexpr double kSumTolerance = 1e-12;

  static Spectrum validate(std::shared_ptr<const Poset> poset,
                           const std::map<std::string, double>& freqs);
  static Spectrum validate(std::shared_ptr<const Poset> poset, std::vector<double> freqs);

  /// Exact-rational entry point for oracle-grade inputs: each frequency is
  /// numerator/denominator; the sum must equal 1 exactly.
  static Spectrum validate_rational(
      std::shared_ptr<const Poset> poset,
      const std::vector<std::pair<std::int64_t, std::int64_t>>& freqs);

  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  double freq(int i) const { return freqs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& freqs() const { return freqs_; }

 private:
  Spectrum(std::shared_ptr<const Poset> poset, std::vector<double> freqs)
      : poset_(std::move(poset)), freqs_(std::move(freqs)) {}
  std::shared_ptr<const Poset> poset_;
  std::vector<double> freqs_;
};

}  // namespace latword
