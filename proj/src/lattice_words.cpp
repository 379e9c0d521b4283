#include "latword/lattice_words.hpp"

#include <algorithm>

namespace latword {

CountVector CountVector::zero(std::shared_ptr<const Poset> poset) {
  std::size_t n = static_cast<std::size_t>(poset->size());
  return CountVector{std::move(poset), std::vector<std::int64_t>(n, 0)};
}

bool CountVector::order_monotone() const {
  for (const auto& [a, b] : parent->covers())
    if (counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(b)]) return false;
  return true;
}

std::int64_t CountVector::total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

namespace {

void check_letters(const Poset& poset, const std::vector<int>& letters) {
  for (int x : letters)
    if (x < 0 || x >= poset.size()) fail(errc::unknown_element, "letter index out of range");
}

void check_convention(const Poset& poset, Convention convention) {
  if (convention == Convention::strict2 && poset.size() > 2)
    fail(errc::convention_unsupported, "strict2 convention requires a two-element poset");
}

// Appending letter p to a monotone prefix only needs the covers above p
// rechecked (covers below p slacken by the increment).
bool can_append_weak(const Poset& poset, const std::vector<std::int64_t>& counts, int p) {
  for (int a : poset.covers_above(p))
    if (counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(p)] + 1) return false;
  return true;
}

bool can_append_strict2(const Poset& poset, const std::vector<std::int64_t>& counts, int p) {
  for (const auto& [a, b] : poset.covers()) {
    std::int64_t ca = counts[static_cast<std::size_t>(a)] + (a == p ? 1 : 0);
    std::int64_t cb = counts[static_cast<std::size_t>(b)] + (b == p ? 1 : 0);
    if (ca <= cb) return false;
  }
  return true;
}

}  // namespace

bool is_lattice(const Poset& poset, const std::vector<int>& letters, Convention convention) {
  check_letters(poset, letters);
  check_convention(poset, convention);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(poset.size()), 0);
  for (int p : letters) {
    bool ok = convention == Convention::weak ? can_append_weak(poset, counts, p)
                                             : can_append_strict2(poset, counts, p);
    if (!ok) return false;
    ++counts[static_cast<std::size_t>(p)];
  }
  return true;
}

LatticeWord LatticeWord::of(std::shared_ptr<const Poset> poset, std::vector<int> letters,
                            Convention convention) {
  if (!is_lattice(*poset, letters, convention))
    fail(errc::not_lattice, "word violates the lattice condition");
  return LatticeWord{std::move(poset), std::move(letters), convention};
}

Enumeration enumerate_lattice_words(const Poset& poset, int n, Convention convention,
                                    std::size_t max_words) {
  if (n < 0) fail(errc::invalid_argument, "word length must be nonnegative");
  check_convention(poset, convention);
  Enumeration out;
  std::vector<int> word;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(poset.size()), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == n) {
      if (out.words.size() >= max_words)
        fail(errc::resource_bound, "lattice word enumeration exceeds cap");
      out.words.push_back(word);
      return;
    }
    for (int p = 0; p < poset.size(); ++p) {
      bool ok = convention == Convention::weak ? can_append_weak(poset, counts, p)
                                               : can_append_strict2(poset, counts, p);
      if (!ok) continue;
      word.push_back(p);
      ++counts[static_cast<std::size_t>(p)];
      self(self);
      --counts[static_cast<std::size_t>(p)];
      word.pop_back();
    }
  };
  rec(rec);
  out.count = out.words.size();
  return out;
}

std::vector<CountVector> word_to_tableau(const LatticeWord& word) {
  if (!is_lattice(*word.parent, word.letters, Convention::weak))
    fail(errc::not_lattice, "word violates the lattice condition");
  std::vector<CountVector> path;
  path.reserve(word.letters.size());
  CountVector running = CountVector::zero(word.parent);
  for (int p : word.letters) {
    ++running.counts[static_cast<std::size_t>(p)];
    path.push_back(running);
  }
  return path;
}

std::vector<CountVector> walk_trace(const LatticeWord& word) { return word_to_tableau(word); }

DeFinettiClassKey definetti_key(const std::vector<int>& letters, int cut) {
  if (cut < 0 || cut > static_cast<int>(letters.size()))
    fail(errc::invalid_argument, "cut outside the word");
  DeFinettiClassKey key;
  key.content.assign(letters.begin(), letters.begin() + cut);
  std::sort(key.content.begin(), key.content.end());
  key.tail.assign(letters.begin() + cut, letters.end());
  return key;
}

BigInt multinomial(const std::vector<std::int64_t>& content) {
  std::int64_t total = 0;
  for (auto c : content) {
    if (c < 0) fail(errc::invalid_argument, "negative count");
    total += c;
  }
  BigInt out = factorial(static_cast<unsigned>(total));
  for (auto c : content) out /= factorial(static_cast<unsigned>(c));
  return out;
}

std::vector<std::int64_t> content_of(const Poset& poset, const std::vector<int>& letters) {
  check_letters(poset, letters);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(poset.size()), 0);
  for (int p : letters) ++counts[static_cast<std::size_t>(p)];
  return counts;
}

FiberStatistics fiber_statistics(const Poset& poset, const std::vector<std::int64_t>& content,
                                 std::size_t max_arrangements) {
  if (content.size() != static_cast<std::size_t>(poset.size()))
    fail(errc::invalid_argument, "content size mismatch");
  FiberStatistics stats;
  stats.all_arrangements = multinomial(content);
  if (stats.all_arrangements > max_arrangements)
    fail(errc::resource_bound, "arrangement enumeration exceeds cap");
  std::vector<int> word;
  for (int p = 0; p < poset.size(); ++p)
    for (std::int64_t k = 0; k < content[static_cast<std::size_t>(p)]; ++k) word.push_back(p);
  BigInt lattice = 0;
  if (word.empty()) {
    lattice = 1;  // the empty word
  } else {
    // next_permutation from the sorted start visits each distinct ordering once.
    do {
      if (is_lattice(poset, word, Convention::weak)) ++lattice;
    } while (std::next_permutation(word.begin(), word.end()));
  }
  stats.lattice_arrangements = lattice;
  return stats;
}

std::vector<int> content_partition(const Poset& chain, const std::vector<std::int64_t>& content) {
  if (content.size() != static_cast<std::size_t>(chain.size()))
    fail(errc::invalid_argument, "content size mismatch");
  // Chain order: repeatedly step down covers from the unique maximal element.
  const int n = chain.size();
  std::vector<int> order;
  int top = -1;
  for (int i = 0; i < n; ++i)
    if (chain.covers_above(i).empty()) {
      if (top != -1) fail(errc::invalid_argument, "poset is not a chain");
      top = i;
    }
  for (int cur = top; cur != -1;) {
    order.push_back(cur);
    const auto& below = chain.covers_below(cur);
    if (below.size() > 1) fail(errc::invalid_argument, "poset is not a chain");
    cur = below.empty() ? -1 : below[0];
  }
  if (static_cast<int>(order.size()) != n) fail(errc::invalid_argument, "poset is not a chain");
  std::vector<int> rows;
  rows.reserve(order.size());
  for (int p : order) rows.push_back(static_cast<int>(content[static_cast<std::size_t>(p)]));
  return rows;
}

}  // namespace latword
