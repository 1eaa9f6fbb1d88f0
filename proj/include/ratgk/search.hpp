#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratgk/group.hpp"
#include "ratgk/rationality.hpp"

namespace ratgk {

enum class SearchSpace {
  /// Direct products of one to three factors from named_product_pool(),
  /// factors in non-decreasing pool position, ordered by group order, then
  /// by factor count, then lexicographically by pool positions.
  NamedProducts,
  /// V x| S with V = GF(5)^n, n in {1, 2}, S running over representatives
  /// of the conjugacy classes of subgroups of GL(n, 5). Ordered by |V||S|,
  /// then n, then the subgroup order used by subgroup_class_representatives.
  AffineF5,
};

/// Factors used by the NamedProducts space.
const std::vector<std::string>& named_product_pool();

struct SearchCandidate {
  std::string description;
  std::size_t order = 0;
  std::function<FiniteGroup()> build;
};

/// The full candidate list of a space, in enumeration order. Candidates
/// above the cap are kept (search skips them).
std::vector<SearchCandidate> search_candidates(SearchSpace space);

struct SearchResult {
  std::optional<FiniteGroup> group;
  std::string description;
  std::size_t examined = 0;
  std::size_t skipped_over_cap = 0;
  std::size_t space_size = 0;
};

/// First candidate that is solvable, rational and has GK graph `target`.
SearchResult search_witness(const PrimeGraph& target, SearchSpace space, std::size_t order_cap = kDefaultOrderCap);

}  // namespace ratgk
