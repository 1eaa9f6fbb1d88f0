#include "ratgk/search.hpp"

#include <algorithm>

#include "ratgk/construct.hpp"
#include "ratgk/module.hpp"
#include "ratgk/subgroups.hpp"

namespace ratgk {

const std::vector<std::string>& named_product_pool() {
  static const std::vector<std::string> pool = {"C2",  "C3", "C4",    "C5",      "S3",      "C6", "D8", "Q8",
                                                "D10", "A4", "C3:C4", "SL(2,3)", "GL(2,3)", "S4", "A5", "S5"};
  return pool;
}

namespace {

std::vector<SearchCandidate> named_candidates() {
  const auto& pool = named_product_pool();
  std::vector<std::size_t> orders;
  for (const auto& name : pool) orders.push_back(named_group(name).order());

  struct Key {
    std::size_t order;
    std::vector<std::size_t> factors;
  };
  std::vector<Key> keys;
  const std::size_t n = pool.size();
  for (std::size_t a = 0; a < n; ++a) {
    keys.push_back({orders[a], {a}});
    for (std::size_t b = a; b < n; ++b) {
      keys.push_back({orders[a] * orders[b], {a, b}});
      for (std::size_t c = b; c < n; ++c) keys.push_back({orders[a] * orders[b] * orders[c], {a, b, c}});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    if (x.order != y.order) return x.order < y.order;
    if (x.factors.size() != y.factors.size()) return x.factors.size() < y.factors.size();
    return x.factors < y.factors;
  });

  std::vector<SearchCandidate> out;
  for (const auto& k : keys) {
    std::string desc;
    for (std::size_t f : k.factors) desc += (desc.empty() ? "" : " x ") + pool[f];
    auto factors = k.factors;
    out.push_back({desc, k.order, [factors] {
                     FiniteGroup g = named_group(named_product_pool()[factors.front()]);
                     for (std::size_t i = 1; i < factors.size(); ++i)
                       g = direct_product(g, named_group(named_product_pool()[factors[i]]), kDefaultOrderCap * 64);
                     return g;
                   }});
  }
  return out;
}

std::vector<SearchCandidate> affine_candidates() {
  std::vector<SearchCandidate> out;
  for (std::size_t n = 1; n <= 2; ++n) {
    const FiniteGroup gl = general_linear_group(5, n);
    const std::size_t vsize = n == 1 ? 5 : 25;
    const auto reps = subgroup_class_representatives(gl);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Subgroup s = reps[i];
      const std::string desc = "F5^" + std::to_string(n) + ":S" + std::to_string(i) + " (|S|=" +
                               std::to_string(s.order()) + ")";
      out.push_back({desc, vsize * s.order(), [s, desc] {
                       const EmbeddedSubgroup e = realize(s);
                       return semidirect_product(ModuleAction::natural(e.group), kDefaultOrderCap * 64).renamed(desc);
                     }});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return out;
}

}  // namespace

std::vector<SearchCandidate> search_candidates(SearchSpace space) {
  return space == SearchSpace::NamedProducts ? named_candidates() : affine_candidates();
}

SearchResult search_witness(const PrimeGraph& target, SearchSpace space, std::size_t order_cap) {
  SearchResult result;
  const auto candidates = search_candidates(space);
  result.space_size = candidates.size();
  for (const auto& c : candidates) {
    if (c.order > order_cap) {
      ++result.skipped_over_cap;
      continue;
    }
    ++result.examined;
    // Cheap filter: the vertex set is fixed by the order alone.
    if (prime_divisors(c.order) != target.vertices) continue;
    const FiniteGroup g = c.build();
    if (gk_graph(g) != target || !is_solvable(g) || !is_rational(g)) continue;
    result.group = g;
    result.description = c.description;
    return result;
  }
  return result;
}

}  // namespace ratgk
