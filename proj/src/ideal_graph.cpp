#include "latword/ideal_graph.hpp"

#include <algorithm>

namespace latword {

std::vector<int> FinitePosetProvider::addable(const Ideal& ideal) const {
  std::vector<bool> in(static_cast<std::size_t>(poset_->size()), false);
  for (int x : ideal) in[static_cast<std::size_t>(x)] = true;
  std::vector<int> out;
  for (int x = 0; x < poset_->size(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    bool ok = true;
    for (int y : poset_->covers_below(x))
      if (!in[static_cast<std::size_t>(y)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;  // ascending index order = lexicographic identifier order
}

std::vector<int> FinitePosetProvider::removable(const Ideal& ideal) const {
  std::vector<bool> in(static_cast<std::size_t>(poset_->size()), false);
  for (int x : ideal) in[static_cast<std::size_t>(x)] = true;
  std::vector<int> out;
  for (int x : ideal) {
    bool maximal = true;
    for (int y : poset_->covers_above(x))
      if (in[static_cast<std::size_t>(y)]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::string FinitePosetProvider::label(const Ideal& ideal) const {
  std::string s = "{";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) s += ",";
    s += poset_->name(ideal[i]);
  }
  s += "}";
  return s;
}

BigInt hook_length_count(const std::vector<int>& partition) {
  int n = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 0) fail(errc::invalid_argument, "negative row length");
    if (i > 0 && partition[i] > partition[i - 1])
      fail(errc::invalid_argument, "row lengths must weakly decrease");
    n += partition[i];
  }
  BigInt num = factorial(static_cast<unsigned>(n));
  BigInt hooks = 1;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (int j = 0; j < partition[i]; ++j) {
      int arm = partition[i] - j - 1;
      int leg = 0;
      for (std::size_t r = i + 1; r < partition.size(); ++r)
        if (partition[r] > j) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return num / hooks;  // exact by the hook length formula
}

}  // namespace latword
