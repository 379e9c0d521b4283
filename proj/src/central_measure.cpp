#include "latword/central_measure.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <boost/math/special_functions/gamma.hpp>

namespace latword {

namespace {

// Per-sweep absolute slack covering floating-point summation error of one
// value-iteration update (letters <= a few hundred at desk scale).
constexpr double kSweepSlack = 1e-13;

// Letter-budget guard: cells * horizon * letters per table build.
constexpr double kMaxSweepCost = 4e9;

// Stream bases keep the three samplers decorrelated under a shared seed.
constexpr std::uint64_t kHtStreamBase = 0x4854ULL << 48;
constexpr std::uint64_t kRjStreamBase = 0x524aULL << 48;
constexpr std::uint64_t kGrStreamBase = 0x4752ULL << 48;

constexpr double kMinExpectedPerCategory = 5.0;

struct CoverMoves {
  std::vector<std::vector<int>> plus;   // per letter: covers whose difference rises
  std::vector<std::vector<int>> minus;  // per letter: covers whose difference drops
};

CoverMoves cover_moves(const Poset& poset) {
  CoverMoves mv;
  mv.plus.assign(static_cast<std::size_t>(poset.size()), {});
  mv.minus.assign(static_cast<std::size_t>(poset.size()), {});
  const auto& covers = poset.covers();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    mv.plus[static_cast<std::size_t>(covers[i].first)].push_back(static_cast<int>(i));
    mv.minus[static_cast<std::size_t>(covers[i].second)].push_back(static_cast<int>(i));
  }
  return mv;
}

std::string word_key(const std::vector<int>& letters) {
  std::string key;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) key.push_back(',');
    key += std::to_string(letters[i]);
  }
  return key;
}

}  // namespace

double guard_tail_bound(const Spectrum& spectrum, int horizon) {
  if (horizon < 0) fail(errc::invalid_argument, "horizon must be nonnegative");
  double total = 0.0;
  for (const auto& [a, b] : spectrum.poset().covers()) {
    double g = spectrum.freq(a) - spectrum.freq(b);
    double decay = std::exp(-0.5 * g * g);
    total += std::pow(decay, horizon) / (1.0 - decay);
  }
  return total;
}

SurvivalSolver::SurvivalSolver(Spectrum spectrum, SurvivalOptions options)
    : spectrum_(std::move(spectrum)), options_(options) {
  for (const auto& [a, b] : spectrum_.poset().covers()) {
    cover_a_.push_back(a);
    cover_b_.push_back(b);
    ratios_.push_back(spectrum_.freq(b) / spectrum_.freq(a));
    gaps_.push_back(spectrum_.freq(a) - spectrum_.freq(b));
  }
}

double SurvivalSolver::tail_bound(int horizon) const { return guard_tail_bound(spectrum_, horizon); }

std::vector<std::int64_t> SurvivalSolver::diffs_of(const std::vector<std::int64_t>& counts) const {
  if (counts.size() != static_cast<std::size_t>(spectrum_.poset().size()))
    fail(errc::dimension_mismatch, "count vector size does not match the poset");
  for (auto c : counts)
    if (c < 0) fail(errc::invalid_argument, "negative count");
  std::vector<std::int64_t> d(ratios_.size());
  for (std::size_t i = 0; i < ratios_.size(); ++i) {
    d[i] = counts[static_cast<std::size_t>(cover_a_[i])] -
           counts[static_cast<std::size_t>(cover_b_[i])];
    if (d[i] < 0) fail(errc::not_lattice, "state is not order-monotone");
  }
  return d;
}

std::vector<std::int64_t> SurvivalSolver::diffs_of(const CountVector& state) const {
  if (!state.parent || !(*state.parent == spectrum_.poset()))
    fail(errc::invalid_argument, "state belongs to a different poset");
  return diffs_of(state.counts);
}

double SurvivalSolver::ruin_tail(const std::vector<std::int64_t>& diffs) const {
  double tail = 0.0;
  for (std::size_t i = 0; i < ratios_.size(); ++i)
    tail += std::pow(ratios_[i], static_cast<double>(diffs[i] + 1));
  return tail;
}

std::shared_ptr<const SurvivalSolver::Table> SurvivalSolver::build_table(int horizon,
                                                                         double width) const {
  const int m = cover_count();
  const int np = spectrum_.poset().size();
  auto t = std::make_shared<Table>();
  t->horizon = horizon;
  t->width_target = width;
  t->caps.resize(static_cast<std::size_t>(m));
  t->cap_slack.resize(static_cast<std::size_t>(m));

  // Cap each difference where the ruin tail drops below the per-sweep slack
  // budget, so clamping never costs more than a fraction of the target.
  double slack_target = width / (16.0 * m * std::max(horizon, 1));
  std::size_t cells = 1;
  for (int i = 0; i < m; ++i) {
    double need = std::log(slack_target) / std::log(ratios_[static_cast<std::size_t>(i)]);
    int cap = std::max(4, static_cast<int>(std::ceil(need)));
    cap = std::min(cap, 200000);
    t->caps[static_cast<std::size_t>(i)] = cap;
    t->cap_slack[static_cast<std::size_t>(i)] =
        std::pow(ratios_[static_cast<std::size_t>(i)], static_cast<double>(cap + 1));
    if (cells > options_.max_table_cells / static_cast<std::size_t>(cap + 1))
      fail(errc::resource_bound, "survival table exceeds cell cap");
    cells *= static_cast<std::size_t>(cap + 1);
  }
  if (static_cast<double>(cells) * horizon * np > kMaxSweepCost)
    fail(errc::resource_bound, "survival value iteration exceeds sweep budget");

  t->strides.assign(static_cast<std::size_t>(m), 1);
  for (int i = m - 2; i >= 0; --i)
    t->strides[static_cast<std::size_t>(i)] =
        t->strides[static_cast<std::size_t>(i + 1)] *
        static_cast<std::size_t>(t->caps[static_cast<std::size_t>(i + 1)] + 1);

  CoverMoves mv = cover_moves(spectrum_.poset());

  std::vector<double> lo(cells), hi(cells, 1.0);
  {
    std::vector<std::int64_t> d(static_cast<std::size_t>(m), 0);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      lo[idx] = std::max(0.0, 1.0 - ruin_tail(d));
      for (int i = m - 1; i >= 0; --i) {
        if (++d[static_cast<std::size_t>(i)] <= t->caps[static_cast<std::size_t>(i)]) break;
        d[static_cast<std::size_t>(i)] = 0;
      }
    }
  }

  std::vector<double> next_lo(cells), next_hi(cells);
  std::vector<int> d(static_cast<std::size_t>(m), 0);
  for (int sweep = 0; sweep < horizon; ++sweep) {
    std::fill(d.begin(), d.end(), 0);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      double acc_lo = 0.0, acc_hi = 0.0;
      for (int p = 0; p < np; ++p) {
        bool dead = false;
        std::size_t tidx = idx;
        for (int i : mv.minus[static_cast<std::size_t>(p)]) {
          if (d[static_cast<std::size_t>(i)] == 0) {
            dead = true;
            break;
          }
          tidx -= t->strides[static_cast<std::size_t>(i)];
        }
        if (dead) continue;
        double up_slack = 0.0;
        for (int i : mv.plus[static_cast<std::size_t>(p)]) {
          if (d[static_cast<std::size_t>(i)] == t->caps[static_cast<std::size_t>(i)])
            up_slack += t->cap_slack[static_cast<std::size_t>(i)];
          else
            tidx += t->strides[static_cast<std::size_t>(i)];
        }
        double f = spectrum_.freq(p);
        acc_lo += f * lo[tidx];
        acc_hi += f * std::min(1.0, hi[tidx] + up_slack);
      }
      next_lo[idx] = std::max(0.0, acc_lo - kSweepSlack);
      next_hi[idx] = std::min(1.0, acc_hi + kSweepSlack);
      for (int i = m - 1; i >= 0; --i) {
        if (++d[static_cast<std::size_t>(i)] <= t->caps[static_cast<std::size_t>(i)]) break;
        d[static_cast<std::size_t>(i)] = 0;
      }
    }
    lo.swap(next_lo);
    hi.swap(next_hi);
  }
  t->lower = std::move(lo);
  t->upper = std::move(hi);
  return t;
}

SurvivalBracket SurvivalSolver::table_lookup(const Table& t,
                                             const std::vector<std::int64_t>& diffs) const {
  std::size_t idx = 0;
  double clamp_slack = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    std::int64_t d = diffs[i];
    if (d > t.caps[i]) {
      clamp_slack += t.cap_slack[i];  // h rises by at most the ruin tail past the cap
      d = t.caps[i];
    }
    idx += static_cast<std::size_t>(d) * t.strides[i];
  }
  return SurvivalBracket{t.lower[idx], std::min(1.0, t.upper[idx] + clamp_slack), t.horizon};
}

void SurvivalSolver::ensure_table(int horizon, double width) {
  {
    std::shared_lock lk(mutex_);
    if (table_ && table_->horizon >= horizon && table_->width_target <= width) return;
  }
  std::unique_lock lk(mutex_);
  if (table_ && table_->horizon >= horizon && table_->width_target <= width) return;
  int h = table_ ? std::max(horizon, table_->horizon) : horizon;
  double w = table_ ? std::min(width, table_->width_target) : width;
  table_ = build_table(h, w);
}

SurvivalBracket SurvivalSolver::survival_at(const std::vector<std::int64_t>& diffs,
                                            double target_width) {
  if (target_width <= 0) fail(errc::invalid_argument, "target width must be positive");
  if (diffs.size() != ratios_.size())
    fail(errc::dimension_mismatch, "difference vector size does not match the covers");
  for (auto d : diffs)
    if (d < 0) fail(errc::not_lattice, "state is not order-monotone");
  if (cover_count() == 0) return SurvivalBracket{1.0, 1.0, 0};

  {
    std::shared_lock lk(mutex_);
    auto it = memo_.find(diffs);
    if (it != memo_.end() && it->second.width() <= target_width) return it->second;
  }

  double tail = ruin_tail(diffs);
  if (tail <= target_width) {
    SurvivalBracket b{std::max(0.0, 1.0 - tail), 1.0, 0};
    std::shared_lock lk(mutex_);
    auto it = memo_.find(diffs);
    if (it != memo_.end()) {
      b.lower = std::max(b.lower, it->second.lower);
      b.upper = std::min(b.upper, it->second.upper);
      b.horizon = std::max(b.horizon, it->second.horizon);
    }
    return b;
  }

  int horizon = std::max(1, options_.initial_horizon);
  for (;;) {
    ensure_table(horizon, target_width);
    SurvivalBracket b;
    {
      std::shared_lock lk(mutex_);
      b = table_lookup(*table_, diffs);
    }
    SurvivalBracket out;
    {
      std::unique_lock lk(mutex_);
      auto [it, fresh] = memo_.try_emplace(diffs, b);
      if (!fresh) {
        it->second.lower = std::max(it->second.lower, b.lower);
        it->second.upper = std::min(it->second.upper, b.upper);
        it->second.horizon = std::max(it->second.horizon, b.horizon);
      }
      out = it->second;
    }
    if (out.width() <= target_width) return out;
    if (horizon >= options_.max_horizon)
      fail(errc::horizon_cap, "survival bracket did not reach the target width at the horizon cap");
    horizon = std::min(options_.max_horizon, horizon * 2);
  }
}

SurvivalBracket SurvivalSolver::survival(const CountVector& state, double target_width) {
  return survival_at(diffs_of(state), target_width);
}

SurvivalBracket survival(const CountVector& state, const Spectrum& spectrum,
                         double target_width) {
  SurvivalSolver solver(spectrum);
  return solver.survival(state, target_width);
}

Interval TransitionRow::valid_sum() const {
  Interval total = Interval::exact(0.0);
  for (std::size_t p = 0; p < probs.size(); ++p)
    if (valid[p]) total = total + probs[p];
  return total;
}

TransitionRow transition_row(SurvivalSolver& solver, const CountVector& state,
                             double target_width) {
  if (target_width <= 0) fail(errc::invalid_argument, "target width must be positive");
  const Poset& poset = solver.spectrum().poset();
  auto diffs = solver.diffs_of(state);
  const int np = poset.size();

  TransitionRow row;
  row.state = state;
  row.probs.assign(static_cast<std::size_t>(np), Interval::exact(0.0));
  row.valid.assign(static_cast<std::size_t>(np), false);

  CoverMoves mv = cover_moves(poset);
  std::vector<std::vector<std::int64_t>> succ(static_cast<std::size_t>(np));
  for (int p = 0; p < np; ++p) {
    bool ok = true;
    for (int i : mv.minus[static_cast<std::size_t>(p)])
      if (diffs[static_cast<std::size_t>(i)] == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    row.valid[static_cast<std::size_t>(p)] = true;
    auto d = diffs;
    for (int i : mv.minus[static_cast<std::size_t>(p)]) --d[static_cast<std::size_t>(i)];
    for (int i : mv.plus[static_cast<std::size_t>(p)]) ++d[static_cast<std::size_t>(i)];
    succ[static_cast<std::size_t>(p)] = std::move(d);
  }

  double hw = target_width / 4.0;
  for (;;) {
    SurvivalBracket hb = solver.survival_at(diffs, hw);
    if (hb.lower <= 0.0) {
      if (hw > 1e-14) {
        hw /= 8.0;
        continue;
      }
      fail(errc::vanishing_survival, "survival bracket touches zero at the requested width");
    }
    Interval denom = hb.interval();
    double max_width = 0.0;
    for (int p = 0; p < np; ++p) {
      if (!row.valid[static_cast<std::size_t>(p)]) continue;
      Interval num = Interval::exact(solver.spectrum().freq(p)) *
                     solver.survival_at(succ[static_cast<std::size_t>(p)], hw).interval();
      Interval prob = (num / denom).clamp01();
      row.probs[static_cast<std::size_t>(p)] = prob;
      max_width = std::max(max_width, prob.width());
    }
    row.max_width = max_width;
    if (max_width <= target_width) return row;
    if (hw <= 1e-14)
      fail(errc::horizon_cap, "kernel brackets did not reach the target width");
    hw /= 8.0;
  }
}

CentralSampleReport sample_central_htransform(SurvivalSolver& solver, int n, int samples,
                                              std::uint64_t seed, double kernel_tolerance) {
  if (n < 0 || samples < 0) fail(errc::invalid_argument, "n and samples must be nonnegative");
  CentralSampleReport report;
  report.sampler = "htransform";
  report.seed = seed;
  report.n = n;
  auto poset = solver.poset();
  const int np = poset->size();
  for (int w = 0; w < samples; ++w) {
    Rng rng(seed, kHtStreamBase + static_cast<std::uint64_t>(w));
    CountVector counts = CountVector::zero(poset);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
      TransitionRow row = transition_row(solver, counts, kernel_tolerance);
      std::vector<int> letters;
      std::vector<double> weights;
      for (int p = 0; p < np; ++p) {
        if (!row.valid[static_cast<std::size_t>(p)]) continue;
        double mid = row.probs[static_cast<std::size_t>(p)].mid();
        if (mid <= 0.0) continue;
        letters.push_back(p);
        weights.push_back(mid);
      }
      if (letters.empty()) fail(errc::vanishing_survival, "no valid letter at state");
      int letter = letters[static_cast<std::size_t>(rng.pick(weights))];
      if (w == 0) report.step_widths.push_back(row.max_width);
      report.max_kernel_width = std::max(report.max_kernel_width, row.max_width);
      ++counts.counts[static_cast<std::size_t>(letter)];
      word.push_back(letter);
    }
    report.words.push_back(std::move(word));
  }
  return report;
}

CentralSampleReport sample_central_rejection(const Spectrum& spectrum, int n, int guard,
                                             int samples, std::uint64_t seed,
                                             double min_acceptance) {
  if (n < 0 || samples < 0) fail(errc::invalid_argument, "n and samples must be nonnegative");
  if (guard < 0) fail(errc::invalid_argument, "guard must be nonnegative");
  CentralSampleReport report;
  report.sampler = "rejection";
  report.seed = seed;
  report.n = n;
  report.guard = guard;
  report.bias_bound = guard_tail_bound(spectrum, guard);

  const Poset& poset = spectrum.poset();
  const int m = static_cast<int>(poset.covers().size());
  CoverMoves mv = cover_moves(poset);
  const std::vector<double>& freqs = spectrum.freqs();
  const int total_len = n + guard;

  std::uint64_t attempts = 0;
  while (static_cast<int>(report.words.size()) < samples) {
    Rng rng(seed, kRjStreamBase + attempts);
    ++attempts;
    std::vector<std::int64_t> diffs(static_cast<std::size_t>(m), 0);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    bool ok = true;
    for (int step = 0; step < total_len; ++step) {
      int p = rng.pick(freqs);
      for (int i : mv.minus[static_cast<std::size_t>(p)]) {
        if (diffs[static_cast<std::size_t>(i)] == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      for (int i : mv.minus[static_cast<std::size_t>(p)]) --diffs[static_cast<std::size_t>(i)];
      for (int i : mv.plus[static_cast<std::size_t>(p)]) ++diffs[static_cast<std::size_t>(i)];
      if (step < n) word.push_back(p);
    }
    if (ok) report.words.push_back(std::move(word));
    if (attempts >= 16384 && attempts % 8192 == 0) {
      double rate = static_cast<double>(report.words.size()) / static_cast<double>(attempts);
      if (rate < min_acceptance)
        fail(errc::acceptance_too_low, "rejection acceptance rate below the configured floor");
    }
  }
  report.attempts = attempts;
  report.accepted = report.words.size();
  report.acceptance_rate =
      attempts ? static_cast<double>(report.accepted) / static_cast<double>(attempts) : 0.0;
  return report;
}

CentralSampleReport sample_greedy_control(const Spectrum& spectrum, int n, int samples,
                                          std::uint64_t seed) {
  if (n < 0 || samples < 0) fail(errc::invalid_argument, "n and samples must be nonnegative");
  CentralSampleReport report;
  report.sampler = "greedy";
  report.seed = seed;
  report.n = n;
  const Poset& poset = spectrum.poset();
  const int np = poset.size();
  const int m = static_cast<int>(poset.covers().size());
  CoverMoves mv = cover_moves(poset);
  for (int w = 0; w < samples; ++w) {
    Rng rng(seed, kGrStreamBase + static_cast<std::uint64_t>(w));
    std::vector<std::int64_t> diffs(static_cast<std::size_t>(m), 0);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
      std::vector<int> letters;
      std::vector<double> weights;
      for (int p = 0; p < np; ++p) {
        bool ok = true;
        for (int i : mv.minus[static_cast<std::size_t>(p)])
          if (diffs[static_cast<std::size_t>(i)] == 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        letters.push_back(p);
        weights.push_back(spectrum.freq(p));
      }
      int letter = letters[static_cast<std::size_t>(rng.pick(weights))];
      for (int i : mv.minus[static_cast<std::size_t>(letter)]) --diffs[static_cast<std::size_t>(i)];
      for (int i : mv.plus[static_cast<std::size_t>(letter)]) ++diffs[static_cast<std::size_t>(i)];
      word.push_back(letter);
    }
    report.words.push_back(std::move(word));
  }
  return report;
}

double greedy_word_probability(const Spectrum& spectrum, const std::vector<int>& letters) {
  const Poset& poset = spectrum.poset();
  const int np = poset.size();
  const int m = static_cast<int>(poset.covers().size());
  CoverMoves mv = cover_moves(poset);
  std::vector<std::int64_t> diffs(static_cast<std::size_t>(m), 0);
  double prob = 1.0;
  for (int letter : letters) {
    if (letter < 0 || letter >= np) fail(errc::unknown_element, "letter index out of range");
    double denom = 0.0;
    bool letter_valid = false;
    for (int p = 0; p < np; ++p) {
      bool ok = true;
      for (int i : mv.minus[static_cast<std::size_t>(p)])
        if (diffs[static_cast<std::size_t>(i)] == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      denom += spectrum.freq(p);
      if (p == letter) letter_valid = true;
    }
    if (!letter_valid) return 0.0;
    prob *= spectrum.freq(letter) / denom;
    for (int i : mv.minus[static_cast<std::size_t>(letter)]) --diffs[static_cast<std::size_t>(i)];
    for (int i : mv.plus[static_cast<std::size_t>(letter)]) ++diffs[static_cast<std::size_t>(i)];
  }
  return prob;
}

Interval cylinder_probability(SurvivalSolver& solver, const std::vector<int>& letters,
                              double target_width) {
  if (target_width <= 0) fail(errc::invalid_argument, "target width must be positive");
  const Poset& poset = solver.spectrum().poset();
  if (!is_lattice(poset, letters, Convention::weak))
    fail(errc::not_lattice, "word violates the lattice condition");
  auto content = content_of(poset, letters);

  // Content-canonical product: equal contents multiply the same factors in
  // the same order, so their brackets agree bit for bit.
  Interval prod = Interval::exact(1.0);
  for (int p = 0; p < poset.size(); ++p)
    for (std::int64_t k = 0; k < content[static_cast<std::size_t>(p)]; ++k)
      prod = prod * Interval::exact(solver.spectrum().freq(p));

  auto diffs = solver.diffs_of(content);
  std::vector<std::int64_t> zero(diffs.size(), 0);
  double hw = target_width / 4.0;
  for (;;) {
    Interval hc = solver.survival_at(diffs, hw).interval();
    Interval h0 = solver.survival_at(zero, hw).interval();
    Interval out = (prod * hc / h0).clamp01();
    if (out.width() <= target_width) return out;
    if (hw <= 1e-14)
      fail(errc::horizon_cap, "cylinder bracket did not reach the target width");
    hw /= 8.0;
  }
}

Interval cylinder_probability(SurvivalSolver& solver, const LatticeWord& word,
                              double target_width) {
  return cylinder_probability(solver, word.letters, target_width);
}

std::vector<FrequencyEstimate> estimate_spectrum(const Poset& poset,
                                                 const std::vector<std::vector<int>>& words) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(poset.size()), 0);
  std::int64_t total = 0;
  for (const auto& w : words)
    for (int p : w) {
      if (p < 0 || p >= poset.size()) fail(errc::unknown_element, "letter index out of range");
      ++counts[static_cast<std::size_t>(p)];
      ++total;
    }
  if (total == 0) fail(errc::invalid_argument, "no letters to estimate from");
  std::vector<FrequencyEstimate> out(static_cast<std::size_t>(poset.size()));
  for (std::size_t p = 0; p < out.size(); ++p) {
    double est = static_cast<double>(counts[p]) / static_cast<double>(total);
    out[p].estimate = est;
    out[p].radius = 3.0 * std::sqrt(est * (1.0 - est) / static_cast<double>(total));
  }
  return out;
}

double chi_square_pvalue(double stat, int dof) {
  if (dof <= 0) fail(errc::invalid_argument, "degrees of freedom must be positive");
  if (stat <= 0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * stat);
}

EmpiricalComparison compare_empirical(const std::map<std::string, std::int64_t>& a,
                                      std::int64_t total_a,
                                      const std::map<std::string, std::int64_t>& b,
                                      std::int64_t total_b) {
  if (total_a <= 0 || total_b <= 0) fail(errc::invalid_argument, "empty sample");
  EmpiricalComparison cmp;
  auto it_a = a.begin();
  auto it_b = b.begin();
  double tv = 0.0, env = 0.0;
  auto accumulate = [&](std::int64_t ca, std::int64_t cb) {
    double pa = static_cast<double>(ca) / static_cast<double>(total_a);
    double pb = static_cast<double>(cb) / static_cast<double>(total_b);
    double pooled = static_cast<double>(ca + cb) / static_cast<double>(total_a + total_b);
    tv += std::abs(pa - pb);
    env += 3.0 * std::sqrt(pooled * (1.0 - pooled) *
                           (1.0 / static_cast<double>(total_a) + 1.0 / static_cast<double>(total_b)));
  };
  while (it_a != a.end() || it_b != b.end()) {
    if (it_b == b.end() || (it_a != a.end() && it_a->first < it_b->first)) {
      accumulate(it_a->second, 0);
      ++it_a;
    } else if (it_a == a.end() || it_b->first < it_a->first) {
      accumulate(0, it_b->second);
      ++it_b;
    } else {
      accumulate(it_a->second, it_b->second);
      ++it_a;
      ++it_b;
    }
  }
  cmp.tv = 0.5 * tv;
  cmp.envelope = 0.5 * env;
  cmp.below_envelope = cmp.tv <= cmp.envelope;
  return cmp;
}

CentralityReport verify_centrality(SurvivalSolver& solver, int n, int samples,
                                   std::uint64_t seed, const VerifyOptions& options) {
  if (n < 0 || samples < 0) fail(errc::invalid_argument, "n and samples must be nonnegative");
  CentralityReport report;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  report.p_floor = options.p_floor;

  const Poset& poset = solver.spectrum().poset();
  Enumeration enumeration = enumerate_lattice_words(poset, n, Convention::weak, options.max_words);

  std::map<std::vector<std::int64_t>, std::vector<const std::vector<int>*>> bins;
  for (const auto& word : enumeration.words) bins[content_of(poset, word)].push_back(&word);

  // Exact part: within each content, the Helly check on the word brackets.
  for (const auto& [content, words] : bins) {
    ContentBinCheck check;
    check.content = content;
    check.word_count = words.size();
    bool first = true;
    for (const auto* w : words) {
      Interval b = options.inject_greedy
                       ? Interval::exact(greedy_word_probability(solver.spectrum(), *w))
                       : cylinder_probability(solver, *w, options.exact_width);
      if (first) {
        check.max_lower = b.lo;
        check.min_upper = b.hi;
        first = false;
      } else {
        check.max_lower = std::max(check.max_lower, b.lo);
        check.min_upper = std::min(check.min_upper, b.hi);
      }
    }
    check.brackets_overlap = words.empty() || check.max_lower <= check.min_upper;
    report.exact_pass = report.exact_pass && check.brackets_overlap;
    report.contents.push_back(std::move(check));
  }

  // Statistical part: bin each sampler's words by content; chi-square the
  // ordering counts within each bin against uniformity.
  std::vector<CentralSampleReport> runs;
  runs.push_back(sample_central_htransform(solver, n, samples, seed, options.kernel_tolerance));
  runs.push_back(options.inject_greedy
                     ? sample_greedy_control(solver.spectrum(), n, samples, seed)
                     : sample_central_rejection(solver.spectrum(), n, options.guard, samples,
                                                seed));
  for (const auto& run : runs) {
    SamplerChiSquare sc;
    sc.sampler = run.sampler;
    std::map<std::vector<int>, std::int64_t> word_counts;
    for (const auto& w : run.words) ++word_counts[w];
    for (const auto& [content, words] : bins) {
      double p = 1.0;
      if (words.size() >= 2) {
        std::vector<std::int64_t> observed;
        std::int64_t bin_total = 0;
        for (const auto* w : words) {
          auto it = word_counts.find(*w);
          std::int64_t c = it == word_counts.end() ? 0 : it->second;
          observed.push_back(c);
          bin_total += c;
        }
        double expected = static_cast<double>(bin_total) / static_cast<double>(words.size());
        if (expected >= kMinExpectedPerCategory) {
          double stat = 0.0;
          for (auto c : observed) {
            double dev = static_cast<double>(c) - expected;
            stat += dev * dev / expected;
          }
          p = chi_square_pvalue(stat, static_cast<int>(words.size()) - 1);
        }
      }
      sc.p_values.push_back(p);
      sc.min_p_value = std::min(sc.min_p_value, p);
    }
    sc.pass = sc.min_p_value > options.p_floor;
    report.statistical_pass = report.statistical_pass && sc.pass;
    report.chi_square.push_back(std::move(sc));
  }

  report.pass = report.exact_pass && report.statistical_pass;
  return report;
}

AgreementReport sampler_agreement(SurvivalSolver& solver, int n, int samples,
                                  std::uint64_t seed, int guard, double kernel_tolerance) {
  AgreementReport report;
  report.n = n;
  report.samples = samples;
  CentralSampleReport a = sample_central_htransform(solver, n, samples, seed, kernel_tolerance);
  CentralSampleReport b =
      sample_central_rejection(solver.spectrum(), n, guard, samples, seed);
  std::map<std::string, std::int64_t> ca, cb;
  for (const auto& w : a.words) ++ca[word_key(w)];
  for (const auto& w : b.words) ++cb[word_key(w)];
  report.comparison = compare_empirical(ca, samples, cb, samples);
  return report;
}

}  // namespace latword
