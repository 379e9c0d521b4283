#include "latword/rsk.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "latword/errors.hpp"
#include "latword/lattice_words.hpp"
#include "latword/rng.hpp"

namespace latword {

namespace {

constexpr std::uint64_t kRskStreamBase = 0x52534bULL << 40;  // decorrelated from the samplers
constexpr int kMaxN = 8;

std::vector<int> shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> s;
  s.reserve(rows.size());
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

void check_args(int n, int samples) {
  if (n < 0) fail(errc::invalid_argument, "word length must be nonnegative");
  if (n > kMaxN)
    fail(errc::resource_bound, "shape projection is capped at length " + std::to_string(kMaxN));
  if (samples <= 0) fail(errc::invalid_argument, "sample count must be positive");
}

}  // namespace

TableauPair rsk_insert(const std::vector<int>& word) {
  TableauPair t;
  t.shape_path.reserve(word.size());
  for (std::size_t idx = 0; idx < word.size(); ++idx) {
    int cur = word[idx];
    if (cur < 1) fail(errc::invalid_argument, "letters must be positive integers");
    std::size_t r = 0;
    while (true) {
      if (r == t.p_tab.size()) {
        t.p_tab.emplace_back();
        t.q_tab.emplace_back();
      }
      auto& row = t.p_tab[r];
      // bump the leftmost entry strictly greater; equal letters settle right
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        t.q_tab[r].push_back(static_cast<int>(idx) + 1);
        break;
      }
      std::swap(cur, *it);
      ++r;
    }
    t.shape_path.push_back(shape_of(t.p_tab));
  }
  return t;
}

std::string shape_path_key(const std::vector<std::vector<int>>& shape_path) {
  std::string s;
  for (std::size_t i = 0; i < shape_path.size(); ++i) {
    if (i) s += "/";
    const auto& shape = shape_path[i];
    std::size_t rows = shape.size();
    while (rows > 0 && shape[rows - 1] == 0) --rows;  // zero rows are not part of the shape
    for (std::size_t r = 0; r < rows; ++r) {
      if (r) s += ",";
      s += std::to_string(shape[r]);
    }
  }
  return s;
}

std::map<std::string, std::int64_t> project_bernoulli(const Spectrum& spectrum, int n, int samples,
                                                      std::uint64_t seed) {
  check_args(n, samples);
  std::vector<double> freqs = spectrum.freqs();
  std::sort(freqs.begin(), freqs.end(), std::greater<double>());  // letter i+1 <-> i-th largest
  std::map<std::string, std::int64_t> hist;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < samples; ++s) {
    Rng rng(seed, kRskStreamBase + static_cast<std::uint64_t>(s));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = rng.pick(freqs) + 1;
    ++hist[shape_path_key(rsk_insert(word).shape_path)];
  }
  return hist;
}

std::map<std::string, std::int64_t> project_central(SurvivalSolver& solver, int n, int samples,
                                                    std::uint64_t seed, double kernel_tolerance) {
  check_args(n, samples);
  const Poset& poset = solver.spectrum().poset();
  const auto k = static_cast<std::size_t>(poset.size());
  content_partition(poset, std::vector<std::int64_t>(k, 0));  // chain check up front
  const CentralSampleReport report =
      sample_central_htransform(solver, n, samples, seed, kernel_tolerance);
  std::map<std::string, std::int64_t> hist;
  for (const auto& word : report.words) {
    std::vector<std::int64_t> counts(k, 0);
    std::vector<std::vector<int>> shapes;
    shapes.reserve(word.size());
    for (int letter : word) {
      ++counts[static_cast<std::size_t>(letter)];
      shapes.push_back(content_partition(poset, counts));
    }
    ++hist[shape_path_key(shapes)];
  }
  return hist;
}

RskComparison compare_to_central(SurvivalSolver& solver, const Spectrum& rsk_spectrum, int n,
                                 int samples, std::uint64_t seed, double kernel_tolerance) {
  check_args(n, samples);
  if (rsk_spectrum.poset().size() != solver.spectrum().poset().size())
    fail(errc::dimension_mismatch, "the two sides need the same number of letters");
  const auto central = project_central(solver, n, samples, seed, kernel_tolerance);
  const auto rsk = project_bernoulli(rsk_spectrum, n, samples, seed);
  RskComparison out;
  out.n = n;
  out.samples = samples;
  out.comparison = compare_empirical(rsk, samples, central, samples);
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& [key, cnt] : rsk) merged[key].first = cnt;
  for (const auto& [key, cnt] : central) merged[key].second = cnt;
  out.rows.reserve(merged.size());
  for (const auto& [key, counts] : merged)
    out.rows.push_back(RskComparisonRow{key, counts.first, counts.second});
  return out;
}

}  // namespace latword
