#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "latword/poset.hpp"

using namespace latword;

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

// Closure oracle: Floyd-Warshall reachability over the cover relation,
// independent of Poset's own closure construction.
std::vector<std::vector<bool>> closure_oracle(const Poset& p, const Covers& covers) {
  const int n = p.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) r[p.index_of(a)][p.index_of(b)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Linear-extension oracle: filter all |members|! orderings.
long long extensions_brute(const Poset& p, const std::vector<int>& members) {
  std::vector<int> perm = members;
  std::sort(perm.begin(), perm.end());
  long long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i)
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
        if (p.greater(perm[i], perm[j])) ok = false;  // larger element listed first
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

struct Case {
  std::vector<std::string> elements;
  Covers covers;
};

std::vector<Case> small_cases() {
  return {
      {{"a"}, {}},
      {{"a", "b"}, {{"a", "b"}}},
      {{"x", "y", "z"}, {}},
      {{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}},
      {{"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}},
      {{"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}},  // diamond
      {{"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}},                          // 2 + 2
      {{"p", "q", "r", "s", "t"}, {{"p", "q"}, {"q", "r"}, {"p", "s"}, {"s", "t"}}},
  };
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("order matches the reachability oracle") {
    for (const auto& c : small_cases()) {
      const Poset p = Poset::build(c.elements, c.covers);
      const auto oracle = closure_oracle(p, c.covers);
      for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
          CHECK(p.greater(i, j) == oracle[i][j]);
          const Relation r = p.order(i, j);
          if (i == j)
            CHECK(r == Relation::equal);
          else if (oracle[i][j])
            CHECK(r == Relation::greater);
          else if (oracle[j][i])
            CHECK(r == Relation::less);
          else
            CHECK(r == Relation::incomparable);
        }
      }
    }
  }

  TEST_CASE("covers are a transitive reduction") {
    const Poset with_implied =
        Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const Poset reduced = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(with_implied == reduced);
    CHECK(with_implied.covers().size() == 2);
  }

  TEST_CASE("chain and antichain constructors") {
    const Poset c3 = Poset::chain(3);
    CHECK(c3.names() == std::vector<std::string>{"c1", "c2", "c3"});
    CHECK(c3.greater(0, 2));
    CHECK(c3.covers().size() == 2);
    const Poset a3 = Poset::antichain(3);
    CHECK(a3.covers().empty());
    CHECK(a3.order(0, 1) == Relation::incomparable);
  }

  TEST_CASE("validation errors") {
    CHECK_THROWS_AS(Poset::build({}, {}), Error);
    CHECK_THROWS_AS(Poset::build({"a", "a"}, {}), Error);
    try {
      Poset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
      FAIL("cycle accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::cycle_detected);
    }
    try {
      Poset::build({"a"}, {{"a", "q"}});
      FAIL("unknown element accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::unknown_element);
    }
  }

  TEST_CASE("ideals and down closures against brute force") {
    for (const auto& c : small_cases()) {
      const Poset p = Poset::build(c.elements, c.covers);
      const int n = p.size();
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) subset.push_back(i);
        bool ideal = true;
        for (int i : subset)
          for (int j = 0; j < n && ideal; ++j)
            if (p.greater(i, j) && !(mask & (1 << j))) ideal = false;
        CHECK(p.is_ideal(subset) == ideal);
        const auto closed = p.down_closure(subset);
        CHECK(p.is_ideal(closed));
        for (int i : subset) CHECK(std::count(closed.begin(), closed.end(), i) == 1);
      }
    }
  }

  TEST_CASE("linear extension counts match the permutation filter") {
    for (const auto& c : small_cases()) {
      const Poset p = Poset::build(c.elements, c.covers);
      std::vector<int> all(static_cast<std::size_t>(p.size()));
      std::iota(all.begin(), all.end(), 0);
      CHECK(linear_extension_count(p, all) == BigInt(extensions_brute(p, all)));
      // and on a proper ideal
      if (p.size() >= 3) {
        std::vector<int> members;
        for (int i = 0; i < p.size() - 1; ++i) members.push_back(i);
        CHECK(linear_extension_count(p, members) == BigInt(extensions_brute(p, members)));
      }
    }
  }

  TEST_CASE("spectrum validation") {
    auto chain2 = std::make_shared<const Poset>(Poset::chain(2));
    const Spectrum s = Spectrum::validate(chain2, {{"c1", 0.7}, {"c2", 0.3}});
    CHECK(s.freq(0) == doctest::Approx(0.7));

    auto expect = [&](std::map<std::string, double> freqs, errc code) {
      try {
        Spectrum::validate(chain2, freqs);
        FAIL("expected failure");
      } catch (const Error& e) {
        CHECK(e.code() == code);
      }
    };
    expect({{"c1", 0.5}, {"c2", 0.5}}, errc::degenerate_spectrum);
    expect({{"c1", 0.3}, {"c2", 0.7}}, errc::order_violation);
    expect({{"c1", 0.7}, {"c2", -0.3}}, errc::nonpositive_frequency);
    expect({{"c1", 0.7}, {"c2", 0.2}}, errc::sum_mismatch);

    const Spectrum r = Spectrum::validate_rational(chain2, {{7, 10}, {3, 10}});
    CHECK(r.freq(1) == doctest::Approx(0.3));
    try {
      Spectrum::validate_rational(chain2, {{7, 10}, {2, 10}});
      FAIL("expected sum mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == errc::sum_mismatch);
    }
  }

  TEST_CASE("sum tolerance admits near-1 decimal input") {
    auto chain3 = std::make_shared<const Poset>(Poset::chain(3));
    CHECK_NOTHROW(Spectrum::validate(chain3, {{"c1", 0.5}, {"c2", 0.3}, {"c3", 0.2}}));
  }
}
