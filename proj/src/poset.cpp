#include "latword/poset.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace latword {

Poset Poset::build(const std::vector<std::string>& elements,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
  if (elements.empty()) fail(errc::invalid_argument, "poset needs at least one element");
  Poset p;
  p.names_ = elements;
  std::sort(p.names_.begin(), p.names_.end());
  for (std::size_t i = 1; i < p.names_.size(); ++i) {
    if (p.names_[i] == p.names_[i - 1])
      fail(errc::invalid_argument, "duplicate element identifier: " + p.names_[i]);
  }
  const std::size_t n = p.names_.size();
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) index[p.names_[i]] = static_cast<int>(i);

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) fail(errc::unknown_element, "unknown element in covers: " + a);
    if (ib == index.end()) fail(errc::unknown_element, "unknown element in covers: " + b);
    if (ia->second == ib->second) fail(errc::cycle_detected, "element related to itself: " + a);
    rel[static_cast<std::size_t>(ia->second)][static_cast<std::size_t>(ib->second)] = true;
  }

  // Warshall closure, then cycle check.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (rel[i][i]) fail(errc::cycle_detected, "cover relation contains a cycle through " + p.names_[i]);

  p.closure_ = rel;
  p.below_.assign(n, {});
  p.above_.assign(n, {});
  // Transitive reduction: keep (a,b) only if no c strictly between.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel[a][b]) continue;
      bool mediated = false;
      for (std::size_t c = 0; c < n && !mediated; ++c)
        if (rel[a][c] && rel[c][b]) mediated = true;
      if (!mediated) {
        p.covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
        p.below_[a].push_back(static_cast<int>(b));
        p.above_[b].push_back(static_cast<int>(a));
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& v : p.below_) std::sort(v.begin(), v.end());
  for (auto& v : p.above_) std::sort(v.begin(), v.end());
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 1; i <= n; ++i) els.push_back("c" + std::to_string(i));
  for (int i = 1; i < n; ++i) cov.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return build(els, cov);
}

Poset Poset::antichain(int n) {
  std::vector<std::string> els;
  for (int i = 1; i <= n; ++i) els.push_back("e" + std::to_string(i));
  return build(els, {});
}

int Poset::index_of(const std::string& id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) fail(errc::unknown_element, "unknown element: " + id);
  return static_cast<int>(it - names_.begin());
}

bool Poset::has(const std::string& id) const {
  return std::binary_search(names_.begin(), names_.end(), id);
}

Relation Poset::order(int a, int b) const {
  if (a == b) return Relation::equal;
  if (greater(a, b)) return Relation::greater;
  if (greater(b, a)) return Relation::less;
  return Relation::incomparable;
}

bool Poset::is_ideal(const std::vector<int>& subset) const {
  std::vector<bool> in(static_cast<std::size_t>(size()), false);
  for (int x : subset) {
    if (x < 0 || x >= size()) fail(errc::unknown_element, "element index out of range");
    in[static_cast<std::size_t>(x)] = true;
  }
  for (int x : subset)
    for (int y : below_[static_cast<std::size_t>(x)])
      if (!in[static_cast<std::size_t>(y)]) return false;
  return true;
}

std::vector<int> Poset::down_closure(const std::vector<int>& subset) const {
  std::vector<bool> in(static_cast<std::size_t>(size()), false);
  std::vector<int> stack = subset;
  for (int x : stack) {
    if (x < 0 || x >= size()) fail(errc::unknown_element, "element index out of range");
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (in[static_cast<std::size_t>(x)]) continue;
    in[static_cast<std::size_t>(x)] = true;
    for (int y : below_[static_cast<std::size_t>(x)]) stack.push_back(y);
  }
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

FiniteIdeal FiniteIdeal::of(std::shared_ptr<const Poset> poset, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!poset->is_ideal(members)) fail(errc::invalid_argument, "subset is not downward closed");
  return FiniteIdeal{std::move(poset), std::move(members)};
}

Relation order_query(const Poset& p, const std::string& a, const std::string& b) {
  return p.order(p.index_of(a), p.index_of(b));
}

bool is_ideal(const Poset& p, const std::vector<std::string>& subset) {
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (const auto& s : subset) idx.push_back(p.index_of(s));
  return p.is_ideal(idx);
}

BigInt linear_extension_count(const Poset& p, const std::vector<int>& members) {
  const int m = static_cast<int>(members.size());
  if (m == 0) return 1;
  if (m > 24) fail(errc::resource_bound, "linear extension DP capped at 24 elements");
  // below_mask[i]: members below members[i] within the induced subposet.
  std::vector<std::uint32_t> below_mask(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.greater(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]))
        below_mask[static_cast<std::size_t>(i)] |= (1u << j);
  // Count monotone orderings: extend a downward-closed mask one element at a time.
  std::vector<BigInt> dp(std::size_t(1) << m, 0);
  dp[0] = 1;
  for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t(1) << m); ++mask) {
    if (dp[mask] == 0) continue;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) continue;
      if ((below_mask[static_cast<std::size_t>(i)] & mask) == below_mask[static_cast<std::size_t>(i)])
        dp[mask | (1u << i)] += dp[mask];
    }
  }
  return dp[(std::size_t(1) << m) - 1];
}

BigInt linear_extension_count(const FiniteIdeal& ideal) {
  return linear_extension_count(*ideal.parent, ideal.members);
}

namespace {

void check_spectrum(const Poset& poset, const std::vector<double>& freqs) {
  const int n = poset.size();
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    double f = freqs[static_cast<std::size_t>(i)];
    if (!(f > 0.0))
      fail(errc::nonpositive_frequency, "frequency of " + poset.name(i) + " must be positive");
    sum += f;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (freqs[static_cast<std::size_t>(i)] == freqs[static_cast<std::size_t>(j)])
        fail(errc::degenerate_spectrum,
             "repeated frequency for " + poset.name(i) + " and " + poset.name(j));
  for (const auto& [a, b] : poset.covers())
    if (freqs[static_cast<std::size_t>(a)] <= freqs[static_cast<std::size_t>(b)])
      fail(errc::order_violation,
           poset.name(a) + " is above " + poset.name(b) + " but has a smaller frequency");
  if (std::abs(sum - 1.0) > Spectrum::kSumTolerance)
    fail(errc::sum_mismatch, "frequencies sum to " + std::to_string(sum) + ", expected 1");
}

}  // namespace

Spectrum Spectrum::validate(std::shared_ptr<const Poset> poset,
                            const std::map<std::string, double>& freqs) {
  std::vector<double> v(static_cast<std::size_t>(poset->size()), -1.0);
  for (const auto& [name, f] : freqs) v[static_cast<std::size_t>(poset->index_of(name))] = f;
  for (int i = 0; i < poset->size(); ++i)
    if (v[static_cast<std::size_t>(i)] < 0.0 && freqs.find(poset->name(i)) == freqs.end())
      fail(errc::invalid_argument, "missing frequency for " + poset->name(i));
  return validate(std::move(poset), std::move(v));
}

Spectrum Spectrum::validate(std::shared_ptr<const Poset> poset, std::vector<double> freqs) {
  if (static_cast<int>(freqs.size()) != poset->size())
    fail(errc::invalid_argument, "frequency vector size mismatch");
  check_spectrum(*poset, freqs);
  return Spectrum(std::move(poset), std::move(freqs));
}

Spectrum Spectrum::validate_rational(
    std::shared_ptr<const Poset> poset,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& freqs) {
  if (static_cast<int>(freqs.size()) != poset->size())
    fail(errc::invalid_argument, "frequency vector size mismatch");
  // Exact sum check: sum of num/den over a common denominator.
  BigInt den = 1;
  for (const auto& [p, q] : freqs) {
    if (q <= 0) fail(errc::invalid_argument, "denominator must be positive");
    if (p <= 0) fail(errc::nonpositive_frequency, "frequency must be positive");
    den *= q;
  }
  BigInt num = 0;
  for (const auto& [p, q] : freqs) num += BigInt(p) * (den / q);
  if (num != den) fail(errc::sum_mismatch, "rational frequencies do not sum to 1 exactly");
  std::vector<double> v;
  v.reserve(freqs.size());
  for (const auto& [p, q] : freqs)
    v.push_back(static_cast<double>(p) / static_cast<double>(q));
  check_spectrum(*poset, v);
  return Spectrum(std::move(poset), std::move(v));
}

}  // namespace latword
