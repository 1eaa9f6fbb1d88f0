#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ratgk/group.hpp"
#include "ratgk/module.hpp"

namespace ratgk {

struct GroupOptions {
  MultiplicationRule rule = MultiplicationRule::LeftToRight;
  std::size_t order_cap = kDefaultOrderCap;
};

/// Closure of permutation or matrix generators. Element ids follow
/// breadth-first discovery from the identity, multiplying on the right by
/// the generators in the order given.
///
/// Throws GroupError: CapExceeded, InconsistentGenerators (mixed kinds,
/// degrees, dimensions or primes) or NotInvertible (singular matrix).
FiniteGroup generate_group(const std::vector<GroupElement>& generators, const GroupOptions& options = {},
                           std::string name = {});

/// G x H with id(g, h) = g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap = kDefaultOrderCap);

/// V x| S for V = GF(p)^n carrying `act`. Elements are pairs s*v with
/// (s, v)(t, w) = (st, v.rep(t) + w), so conjugating v by s gives v.rep(s).
/// Element id is s * |V| + index(v).
FiniteGroup semidirect_product(const ModuleAction& act, std::size_t order_cap = kDefaultOrderCap);

/// Id of s*v inside a group built by semidirect_product.
ElemId semidirect_id(const ModuleAction& act, ElemId s, const FpVector& v);

struct Quotient {
  FiniteGroup group;
  /// projection[g] = id of the coset Ng.
  std::vector<ElemId> projection;
  /// Least id of each coset, indexed by quotient id.
  std::vector<ElemId> representatives;
};

/// G/N for N normal, realized over least coset representatives. Throws
/// GroupError(NotNormal).
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// GL(n, p) from two standard generators.
FiniteGroup general_linear_group(int p, std::size_t n);
/// Every matrix of GL(n, p), in lexicographic order of its entries.
std::vector<FpMatrix> all_invertible_matrices(int p, std::size_t n);

/// Named small groups:
///   Cn       cyclic, the n-cycle on n points
///   Sn, An   symmetric / alternating on n points (n <= 7)
///   D2n      dihedral of order 2n on n points (e.g. D8)
///   Q8       quaternion, regular permutation representation
///   C3:C4    a = (0 1 2), b = (1 2)(3 4 5 6)
///   SL(2,3), GL(2,3)   matrices over GF(3)
/// Throws GroupError(Unknown) for anything else.
FiniteGroup named_group(std::string_view name);
std::vector<std::string> named_group_examples();

}  // namespace ratgk
