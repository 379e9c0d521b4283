#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "latword/bigint.hpp"
#include "latword/poset.hpp"

namespace latword {

/// Prefix-count convention for lattice words.
///   weak:    count(a) >= count(b) after every prefix, for every cover a > b
///            (the reading under which prefixes are ideals of the chain bundle).
///   strict2: count(a) > count(b) after every nonempty prefix; two-element
///            posets only, models the positive-half-plane meander.
enum class Convention { weak, strict2 };

/// Per-element occurrence counts of a word prefix.
struct CountVector {
  std::shared_ptr<const Poset> parent;
  std::vector<std::int64_t> counts;

  static CountVector zero(std::shared_ptr<const Poset> poset);
  bool order_monotone() const;  // count(a) >= count(b) along every cover
  std::int64_t total() const;
};

struct LatticeWord {
  std::shared_ptr<const Poset> parent;
  std::vector<int> letters;
  Convention convention = Convention::weak;

  /// Validates the word; throws NotLattice.
  static LatticeWord of(std::shared_ptr<const Poset> poset, std::vector<int> letters,
                        Convention convention = Convention::weak);
};

/// de Finetti class of a word at a cut: the prefix as a multiset plus the
/// exact tail.  Two words are equivalent at cut n iff their keys are equal.
struct DeFinettiClassKey {
  std::vector<int> content;  // first n letters, sorted
  std::vector<int> tail;     // letters after the cut, in order

  bool operator==(const DeFinettiClassKey&) const = default;
};

bool is_lattice(const Poset& poset, const std::vector<int>& letters,
                Convention convention = Convention::weak);

struct Enumeration {
  std::vector<std::vector<int>> words;  // canonical (lexicographic) order
  BigInt count;
};

/// All lattice words of length n, lexicographic by element identifier.
Enumeration enumerate_lattice_words(const Poset& poset, int n,
                                    Convention convention = Convention::weak,
                                    std::size_t max_words = 1'000'000);

/// The path of chain-bundle ideals traced by the word: the k-th entry is the
/// content after k letters.  Consecutive entries differ by one element.
std::vector<CountVector> word_to_tableau(const LatticeWord& word);

/// Per-step count vectors of the word (coordinates of the Weyl-chamber walk).
std::vector<CountVector> walk_trace(const LatticeWord& word);

DeFinettiClassKey definetti_key(const std::vector<int>& letters, int cut);

struct FiberStatistics {
  BigInt all_arrangements;      // multinomial coefficient of the content
  BigInt lattice_arrangements;  // orderings that are weak lattice words
};

/// Exact arrangement counts by direct enumeration; errors with ResourceBound
/// when the multinomial exceeds `max_arrangements`.
FiberStatistics fiber_statistics(const Poset& poset, const std::vector<std::int64_t>& content,
                                 std::size_t max_arrangements = 10'000'000);

BigInt multinomial(const std::vector<std::int64_t>& content);

/// Occurrence counts of each poset element in `letters`.
std::vector<std::int64_t> content_of(const Poset& poset, const std::vector<int>& letters);

/// Row lengths of the content read along a chain poset (top element first).
/// Weakly decreasing exactly when the content is order-monotone.
std::vector<int> content_partition(const Poset& chain, const std::vector<std::int64_t>& content);

}  // namespace latword
