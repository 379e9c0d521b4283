#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "doctest.h"
#include "latword/central_measure.hpp"
#include "latword/lattice_words.hpp"
#include "latword/poset.hpp"

using namespace latword;

namespace {

std::shared_ptr<const Poset> chain_ptr(int n) {
  return std::make_shared<const Poset>(Poset::chain(n));
}

Spectrum two_chain_spectrum() {
  return Spectrum::validate_rational(chain_ptr(2), {{7, 10}, {3, 10}});
}

Spectrum three_chain_spectrum() {
  return Spectrum::validate_rational(chain_ptr(3), {{1, 2}, {3, 10}, {1, 5}});
}

// One-cover gambler's ruin: starting gap d, up-probability p, down q = 1-p,
// survival is 1 - (q/p)^(d+1).
double ruin_survival(double p, std::int64_t d) {
  return 1.0 - std::pow((1.0 - p) / p, static_cast<double>(d + 1));
}

// Exact finite-horizon survival S_N(0) by dynamic programming, independent
// of the production value iteration (no caps, no interval bookkeeping).
double finite_horizon_survival(double p, int steps) {
  const std::size_t size = static_cast<std::size_t>(steps) + 300;
  std::vector<double> s(size, 1.0), next(size, 1.0);
  for (int k = 0; k < steps; ++k) {
    for (std::size_t d = 0; d + 1 < size; ++d) {
      double up = s[d + 1];
      double down = d == 0 ? 0.0 : s[d - 1];
      next[d] = p * up + (1.0 - p) * down;
    }
    s.swap(next);
  }
  return s[0];
}

}  // namespace

TEST_SUITE("central_measure") {
  TEST_CASE("two-chain survival brackets contain the ruin closed form") {
    SurvivalSolver solver(two_chain_spectrum());
    for (std::int64_t d = 0; d <= 6; ++d) {
      const auto b = solver.survival_at({d}, 1e-8);
      CHECK(b.width() <= 1e-8);
      const double exact = ruin_survival(0.7, d);
      CHECK(b.lower <= exact);
      CHECK(exact <= b.upper);
    }
    // re-query never widens
    const auto narrow = solver.survival_at({0}, 1e-10);
    const auto again = solver.survival_at({0}, 1e-6);
    CHECK(again.width() <= narrow.width());
  }

  TEST_CASE("two-chain survival brackets sit against the finite-horizon oracle") {
    const double s200 = finite_horizon_survival(0.7, 200);
    const double tail = guard_tail_bound(two_chain_spectrum(), 200);
    // oracle self-check against the closed form
    CHECK(s200 >= 4.0 / 7.0 - 1e-12);
    CHECK(s200 <= 4.0 / 7.0 + tail);

    SurvivalSolver solver(two_chain_spectrum());
    const auto b = solver.survival_at({0}, 1e-8);
    CHECK(b.lower <= s200 + 1e-10);            // lower <= h <= S_200
    CHECK(b.upper >= s200 - tail - 1e-10);     // upper >= h >= S_200 - tail
    CHECK(b.upper <= s200 + 1e-8 + 1e-10);     // width target pins the rest
    CHECK(b.lower >= s200 - tail - 1e-8 - 1e-10);
  }

  TEST_CASE("three-chain survival at the origin") {
    SurvivalSolver solver(three_chain_spectrum());
    const auto b = solver.survival_at({0, 0}, 1e-6);
    CHECK(b.width() <= 1e-6);
    // product over ordered frequency pairs of (1 - ratio)
    const double expected = (1 - 0.3 / 0.5) * (1 - 0.2 / 0.5) * (1 - 0.2 / 0.3);
    CHECK(b.lower <= expected);
    CHECK(expected <= b.upper);
  }

  TEST_CASE("survival input validation") {
    SurvivalSolver solver(two_chain_spectrum());
    CHECK_THROWS_AS(solver.survival_at({0, 0}, 1e-6), Error);
    CHECK_THROWS_AS(solver.survival_at({-1}, 1e-6), Error);
    CHECK_THROWS_AS(solver.survival_at({0}, 0.0), Error);
    const CountVector foreign{chain_ptr(3), {0, 0, 0}};
    CHECK_THROWS_AS(solver.survival(foreign, 1e-6), Error);
    // no covers: survival is exactly one
    SurvivalSolver anti(Spectrum::validate_rational(
        std::make_shared<const Poset>(Poset::antichain(2)), {{3, 5}, {2, 5}}));
    const auto b = anti.survival_at({}, 1e-9);
    CHECK(b.lower == 1.0);
    CHECK(b.upper == 1.0);
  }

  TEST_CASE("horizon cap fires when the width target is unreachable") {
    SurvivalOptions opts;
    opts.initial_horizon = 4;
    opts.max_horizon = 8;
    SurvivalSolver solver(two_chain_spectrum(), opts);
    try {
      solver.survival_at({0}, 1e-12);
      FAIL("horizon cap not enforced");
    } catch (const Error& e) {
      CHECK(e.code() == errc::horizon_cap);
      CHECK(e.is_resource());
    }
  }

  TEST_CASE("guard tail bound") {
    const Spectrum spec = two_chain_spectrum();
    const double expected = std::exp(-200 * 0.08) / (1.0 - std::exp(-0.08));
    CHECK(guard_tail_bound(spec, 200) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(guard_tail_bound(spec, 200) == doctest::Approx(1.4637e-6).epsilon(1e-3));
    CHECK(guard_tail_bound(spec, 400) < guard_tail_bound(spec, 200));
    SurvivalSolver solver(spec);
    CHECK(solver.tail_bound(200) == guard_tail_bound(spec, 200));
    CHECK_THROWS_AS(guard_tail_bound(spec, -1), Error);
  }

  TEST_CASE("transition rows reproduce the conditioned kernel") {
    SurvivalSolver solver(two_chain_spectrum());
    const auto poset = solver.poset();

    // at gap 1 both letters are valid: 0.7*h(2)/h(1) and 0.3*h(0)/h(1)
    const auto row = transition_row(solver, CountVector{poset, {1, 0}}, 1e-9);
    CHECK(row.valid == std::vector<bool>{true, true});
    CHECK(row.max_width <= 1e-9);
    CHECK(row.probs[0].contains(0.79));
    CHECK(row.probs[1].contains(0.21));
    CHECK(row.valid_sum().contains(1.0));

    // at the origin only the top letter can fire, with probability one
    const auto origin = transition_row(solver, CountVector::zero(poset), 1e-9);
    CHECK(origin.valid == std::vector<bool>{true, false});
    CHECK(origin.probs[0].contains(1.0));
    CHECK(origin.probs[1].lo == 0.0);
    CHECK(origin.probs[1].hi == 0.0);
  }

  TEST_CASE("cylinder probabilities depend only on content") {
    SurvivalSolver solver(two_chain_spectrum());
    const auto ab = cylinder_probability(solver, std::vector<int>{0, 1}, 1e-9);
    CHECK(ab.width() <= 1e-9);
    CHECK(ab.contains(0.21));

    const auto aab = cylinder_probability(solver, std::vector<int>{0, 0, 1}, 1e-9);
    const auto aba = cylinder_probability(solver, std::vector<int>{0, 1, 0}, 1e-9);
    CHECK(aab.lo == aba.lo);
    CHECK(aab.hi == aba.hi);
    CHECK(aab.contains(0.21));  // 0.7^2*0.3 * h(1)/h(0) = 0.21 as well

    const auto empty = cylinder_probability(solver, std::vector<int>{}, 1e-9);
    CHECK(empty.contains(1.0));
    CHECK_THROWS_AS(cylinder_probability(solver, std::vector<int>{1, 0}, 1e-9), Error);
  }

  TEST_CASE("greedy control probabilities") {
    const Spectrum spec = two_chain_spectrum();
    CHECK(greedy_word_probability(spec, {0, 0, 1}) == doctest::Approx(0.21));
    CHECK(greedy_word_probability(spec, {0, 1, 0}) == doctest::Approx(0.30));
    CHECK(greedy_word_probability(spec, {1}) == 0.0);
    CHECK(greedy_word_probability(spec, {}) == 1.0);
    CHECK_THROWS_AS(greedy_word_probability(spec, {7}), Error);
  }

  TEST_CASE("h-transform sampler output") {
    SurvivalSolver solver(two_chain_spectrum());
    const auto report = sample_central_htransform(solver, 6, 400, 11);
    CHECK(report.sampler == "htransform");
    CHECK(report.words.size() == 400);
    CHECK(report.step_widths.size() == 6);
    CHECK(report.max_kernel_width <= 1e-6);
    const Poset& poset = solver.spectrum().poset();
    for (const auto& w : report.words) {
      REQUIRE(w.size() == 6);
      CHECK(is_lattice(poset, w));
    }
    const auto again = sample_central_htransform(solver, 6, 400, 11);
    CHECK(again.words == report.words);
  }

  TEST_CASE("rejection sampler acceptance matches the survival bracket") {
    const Spectrum spec = two_chain_spectrum();
    const auto report = sample_central_rejection(spec, 4, 200, 2000, 3);
    CHECK(report.words.size() == 2000);
    CHECK(report.guard == 200);
    CHECK(report.bias_bound == doctest::Approx(guard_tail_bound(spec, 200)));
    for (const auto& w : report.words) {
      REQUIRE(w.size() == 4);
      CHECK(is_lattice(spec.poset(), w));
    }
    // acceptance ~ Binomial(attempts, S_{n+guard}(0)); S is within tail of h
    const double h0 = 4.0 / 7.0;
    const double sigma =
        std::sqrt(h0 * (1 - h0) / static_cast<double>(report.attempts));
    CHECK(std::abs(report.acceptance_rate - h0) <=
          3 * sigma + guard_tail_bound(spec, 200));
    const auto again = sample_central_rejection(spec, 4, 200, 2000, 3);
    CHECK(again.words == report.words);
  }

  TEST_CASE("rejection sampler enforces the acceptance floor") {
    const Spectrum spec = two_chain_spectrum();
    try {
      sample_central_rejection(spec, 4, 200, 20000, 1, 0.9);
      FAIL("acceptance floor not enforced");
    } catch (const Error& e) {
      CHECK(e.code() == errc::acceptance_too_low);
      CHECK(e.is_resource());
    }
  }

  TEST_CASE("spectrum estimation pools letters") {
    const Poset chain = Poset::chain(2);
    const auto est = estimate_spectrum(chain, {{0, 1}, {0, 0}});
    REQUIRE(est.size() == 2);
    CHECK(est[0].estimate == doctest::Approx(0.75));
    CHECK(est[1].estimate == doctest::Approx(0.25));
    CHECK(est[0].radius == doctest::Approx(3 * std::sqrt(0.75 * 0.25 / 4)));
    CHECK_THROWS_AS(estimate_spectrum(chain, {}), Error);
    CHECK_THROWS_AS(estimate_spectrum(chain, {{5}}), Error);
  }

  TEST_CASE("chi-square tail values") {
    CHECK(chi_square_pvalue(3.841, 1) == doctest::Approx(0.05).epsilon(1e-3));
    CHECK(chi_square_pvalue(5.991, 2) == doctest::Approx(0.05).epsilon(1e-3));
    CHECK(chi_square_pvalue(0.0, 3) == 1.0);
    CHECK(chi_square_pvalue(1000.0, 1) < 1e-100);
    CHECK_THROWS_AS(chi_square_pvalue(1.0, 0), Error);
  }

  TEST_CASE("empirical comparison bounds") {
    const std::map<std::string, std::int64_t> x{{"u", 50}, {"v", 50}};
    const auto same = compare_empirical(x, 100, x, 100);
    CHECK(same.tv == doctest::Approx(0.0));
    CHECK(same.below_envelope);

    const std::map<std::string, std::int64_t> y{{"w", 100}};
    const auto far = compare_empirical(x, 100, y, 100);
    CHECK(far.tv == doctest::Approx(1.0));
    CHECK_FALSE(far.below_envelope);
    CHECK_THROWS_AS(compare_empirical(x, 0, y, 100), Error);
  }

  TEST_CASE("centrality verification passes on the real kernel") {
    SurvivalSolver solver(two_chain_spectrum());
    const auto report = verify_centrality(solver, 4, 4000, 5);
    CHECK(report.exact_pass);
    CHECK(report.statistical_pass);
    CHECK(report.pass);
    REQUIRE(report.contents.size() == 3);  // contents (2,2), (3,1), (4,0)
    for (const auto& c : report.contents) CHECK(c.brackets_overlap);
    REQUIRE(report.chi_square.size() == 2);
    for (const auto& sc : report.chi_square) {
      CHECK(sc.pass);
      CHECK(sc.min_p_value > report.p_floor);
    }
  }

  TEST_CASE("centrality verification rejects the greedy control") {
    SurvivalSolver solver(two_chain_spectrum());
    VerifyOptions opts;
    opts.inject_greedy = true;
    const auto report = verify_centrality(solver, 4, 4000, 5, opts);
    CHECK_FALSE(report.exact_pass);
    CHECK_FALSE(report.statistical_pass);
    CHECK_FALSE(report.pass);
  }

  TEST_CASE("sampler agreement on full words") {
    SurvivalSolver solver(two_chain_spectrum());
    const auto report = sampler_agreement(solver, 5, 3000, 7, 200);
    CHECK(report.n == 5);
    CHECK(report.comparison.below_envelope);
    CHECK(report.comparison.tv < report.comparison.envelope + 1e-12);
  }
}
