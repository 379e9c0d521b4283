#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "latword/interval.hpp"
#include "latword/lattice_words.hpp"
#include "latword/poset.hpp"
#include "latword/rng.hpp"

namespace latword {

/// Two-sided enclosure of a survival probability plus the horizon that
/// produced it.  Re-querying the same state through one solver never widens
/// the bracket (results are intersected against a memo).
struct SurvivalBracket {
  double lower = 0.0;
  double upper = 1.0;
  int horizon = 0;

  Interval interval() const { return Interval{lower, upper}; }
  double width() const { return upper - lower; }
};

struct SurvivalOptions {
  int initial_horizon = 256;
  int max_horizon = 1 << 16;  // doubling stops here -> HorizonCap
  std::size_t max_table_cells = 5'000'000;
};

/// Certified brackets for h(c), the probability that an i.i.d.(spectrum)
/// continuation from counts c satisfies every cover inequality forever.
///
/// The walk is tracked through its cover differences d_i = count(a_i) -
/// count(b_i): a letter moves each difference by +1/-1/0 and the walk dies
/// when a difference would turn negative.  h is monotone in each d_i.
/// Brackets come from value iteration on the box [0,C_1] x ... x [0,C_m]:
///
///   lower: starts from the ruin union bound max(0, 1 - sum_i r_i^(d_i+1)),
///     r_i = freq(b_i)/freq(a_i), a pointwise lower bound of h that the
///     (monotone) one-step operator preserves; transitions past a cap clamp
///     onto it, which only lowers the value.
///   upper: starts from 1, so after N sweeps it dominates the exact N-step
///     survival; a transition clamped at cap C_i pays the additive slack
///     r_i^(C_i+1), since raising one difference by one raises survival by
///     at most the ruin probability from C_i.
///
/// Caps are sized so the accumulated clamp slack stays below the target
/// width, and the horizon doubles until the queried bracket is narrow
/// enough.  Far from every boundary the union-bound bracket
/// [1 - sum_i r_i^(d_i+1), 1] is already narrower than the target and is
/// returned without touching the table.
class SurvivalSolver {
 public:
  explicit SurvivalSolver(Spectrum spectrum, SurvivalOptions options = {});

  /// Bracket of width <= target_width; HorizonCap if unreachable.
  SurvivalBracket survival(const CountVector& state, double target_width);
  SurvivalBracket survival_at(const std::vector<std::int64_t>& diffs, double target_width);

  /// Geometric tail bound sum over covers of exp(-N g^2/2)/(1-exp(-g^2/2)),
  /// g = freq(a)-freq(b): the documented bias bound for guard horizons.
  double tail_bound(int horizon) const;

  /// Cover differences of a count vector (NotLattice if any is negative).
  std::vector<std::int64_t> diffs_of(const CountVector& state) const;
  std::vector<std::int64_t> diffs_of(const std::vector<std::int64_t>& counts) const;

  const Spectrum& spectrum() const { return spectrum_; }
  std::shared_ptr<const Poset> poset() const { return spectrum_.poset_ptr(); }
  int cover_count() const { return static_cast<int>(ratios_.size()); }

 private:
  struct Table {
    int horizon = 0;
    double width_target = 1.0;
    std::vector<int> caps;
    std::vector<std::size_t> strides;
    std::vector<double> cap_slack;
    std::vector<double> lower, upper;
  };

  double ruin_tail(const std::vector<std::int64_t>& diffs) const;
  void ensure_table(int horizon, double width);
  std::shared_ptr<const Table> build_table(int horizon, double width) const;
  SurvivalBracket table_lookup(const Table& t, const std::vector<std::int64_t>& diffs) const;

  Spectrum spectrum_;
  SurvivalOptions options_;
  std::vector<int> cover_a_, cover_b_;
  std::vector<double> ratios_;  // freq(b_i)/freq(a_i), all < 1
  std::vector<double> gaps_;    // freq(a_i)-freq(b_i), all > 0

  mutable std::shared_mutex mutex_;
  std::shared_ptr<const Table> table_;
  std::map<std::vector<std::int64_t>, SurvivalBracket> memo_;
};

/// One-off convenience: fresh solver per call.
SurvivalBracket survival(const CountVector& state, const Spectrum& spectrum, double target_width);

/// SurvivalSolver::tail_bound without a solver.
double guard_tail_bound(const Spectrum& spectrum, int horizon);

/// Doob-kernel row P(p | state) = freq(p) * h(state+e_p) / h(state), as
/// brackets; letters whose appended state is not order-monotone get the
/// exact zero interval.
struct TransitionRow {
  CountVector state;
  std::vector<Interval> probs;  // one per poset element
  std::vector<bool> valid;
  double max_width = 0.0;

  Interval valid_sum() const;  // interval sum over valid letters
};

TransitionRow transition_row(SurvivalSolver& solver, const CountVector& state,
                             double target_width);

struct CentralSampleReport {
  std::string sampler;  // "htransform" | "rejection" | "greedy"
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<std::vector<int>> words;

  // rejection statistics
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  double acceptance_rate = 0.0;
  int guard = 0;
  double bias_bound = 0.0;  // tail_bound(guard)

  // h-transform statistics
  double max_kernel_width = 0.0;
  std::vector<double> step_widths;  // per-step kernel widths of the first word
};

/// Step-by-step sampler from the bracketed kernel; consumes bracket
/// midpoints of width <= kernel_tolerance and records the widths used.
CentralSampleReport sample_central_htransform(SurvivalSolver& solver, int n, int samples,
                                              std::uint64_t seed,
                                              double kernel_tolerance = 1e-6);

/// Draws i.i.d.(spectrum) words of length n+guard and keeps the first n
/// letters of those that stay lattice throughout.  The guard bounds the
/// conditioning bias by tail_bound(guard), reported as bias_bound.
CentralSampleReport sample_central_rejection(const Spectrum& spectrum, int n, int guard,
                                             int samples, std::uint64_t seed,
                                             double min_acceptance = 1e-4);

/// Deliberately non-central control: at each step the Bernoulli weights are
/// renormalized over the currently valid letters.
CentralSampleReport sample_greedy_control(const Spectrum& spectrum, int n, int samples,
                                          std::uint64_t seed);

/// Exact path probability of `letters` under the greedy control kernel.
double greedy_word_probability(const Spectrum& spectrum, const std::vector<int>& letters);

/// Bracket of the restricted-Bernoulli cylinder probability
/// (prod_k freq(letter_k)) * h(content) / h(zero).  The product is taken in
/// content-canonical order, so equal-content words get bit-identical
/// brackets.
Interval cylinder_probability(SurvivalSolver& solver, const std::vector<int>& letters,
                              double target_width);
Interval cylinder_probability(SurvivalSolver& solver, const LatticeWord& word,
                              double target_width);

/// Pooled empirical letter frequencies with 3-sigma binomial radii.
struct FrequencyEstimate {
  double estimate = 0.0;
  double radius = 0.0;
};
std::vector<FrequencyEstimate> estimate_spectrum(const Poset& poset,
                                                 const std::vector<std::vector<int>>& words);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_pvalue(double stat, int dof);

/// Total-variation distance between two empirical histograms plus a
/// conservative envelope: per-key 3-sigma binomial deviations (pooled
/// probabilities), summed and halved.
struct EmpiricalComparison {
  double tv = 0.0;
  double envelope = 0.0;
  bool below_envelope = true;
};
EmpiricalComparison compare_empirical(const std::map<std::string, std::int64_t>& a,
                                      std::int64_t total_a,
                                      const std::map<std::string, std::int64_t>& b,
                                      std::int64_t total_b);

struct ContentBinCheck {
  std::vector<std::int64_t> content;
  std::size_t word_count = 0;  // lattice words with this content
  bool brackets_overlap = true;
  double max_lower = 0.0;
  double min_upper = 0.0;
};

struct SamplerChiSquare {
  std::string sampler;
  std::vector<double> p_values;  // aligned with CentralityReport::contents
  double min_p_value = 1.0;
  bool pass = true;
};

struct CentralityReport {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double p_floor = 1e-3;
  bool exact_pass = true;
  bool statistical_pass = true;
  bool pass = false;
  std::vector<ContentBinCheck> contents;
  std::vector<SamplerChiSquare> chi_square;
};

struct VerifyOptions {
  int guard = 200;
  double kernel_tolerance = 1e-6;
  double exact_width = 1e-9;  // bracket width used by the exact part
  double p_floor = 1e-3;
  bool inject_greedy = false;  // replace the rejection sampler by the greedy control
  std::size_t max_words = 200'000;
};

/// Exact part: per order-monotone content at level n, all lattice words of
/// that content must receive overlapping cylinder brackets.  Statistical
/// part: both samplers are binned by content and chi-square-tested for
/// uniformity over the orderings within each bin.
CentralityReport verify_centrality(SurvivalSolver& solver, int n, int samples,
                                   std::uint64_t seed, const VerifyOptions& options = {});

/// Sampler-vs-sampler agreement on full length-n words.
struct AgreementReport {
  EmpiricalComparison comparison;
  int n = 0;
  int samples = 0;
};
AgreementReport sampler_agreement(SurvivalSolver& solver, int n, int samples,
                                  std::uint64_t seed, int guard,
                                  double kernel_tolerance = 1e-6);

}  // namespace latword
