#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latword/central_measure.hpp"
#include "latword/poset.hpp"

namespace latword {

/// Output of row insertion: the insertion tableau (weakly increasing rows,
/// strictly increasing columns, letters 1..k), the recording tableau
/// (standard, entries 1..n), and the shape after each inserted letter.
struct TableauPair {
  std::vector<std::vector<int>> p_tab;
  std::vector<std::vector<int>> q_tab;
  std::vector<std::vector<int>> shape_path;
};

/// Classical row insertion of a word over letters 1..k.
TableauPair rsk_insert(const std::vector<int>& word);

/// Canonical key of a shape path: partitions joined by '/', parts by ','.
std::string shape_path_key(const std::vector<std::vector<int>>& shape_path);

/// Shape-path histogram of i.i.d. words: letters 1..k drawn with the
/// spectrum's frequencies in descending order, run through rsk_insert.
std::map<std::string, std::int64_t> project_bernoulli(const Spectrum& spectrum, int n, int samples,
                                                      std::uint64_t seed);

/// Shape-path histogram of words drawn from the conditioned-walk sampler
/// over a chain poset: element index i plays the letter i+1, so the shape
/// after a prefix is the prefix content read down the chain.
std::map<std::string, std::int64_t> project_central(SurvivalSolver& solver, int n, int samples,
                                                    std::uint64_t seed,
                                                    double kernel_tolerance = 1e-6);

struct RskComparisonRow {
  std::string path;
  std::int64_t rsk_count = 0;
  std::int64_t central_count = 0;
};

struct RskComparison {
  int n = 0;
  int samples = 0;
  EmpiricalComparison comparison;
  std::vector<RskComparisonRow> rows;  // keyed, deterministic order
};

/// Side-by-side comparison of the two shape-path distributions.  The
/// central side uses the solver's spectrum; the i.i.d. side uses
/// `rsk_spectrum` (pass the same spectrum to test agreement, a different
/// one as a mismatch control).  n is capped at 8.
RskComparison compare_to_central(SurvivalSolver& solver, const Spectrum& rsk_spectrum, int n,
                                 int samples, std::uint64_t seed, double kernel_tolerance = 1e-6);

}  // namespace latword
