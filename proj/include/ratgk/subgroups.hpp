#pragma once

#include <span>
#include <vector>

#include "ratgk/group.hpp"

namespace ratgk {

/// A subgroup re-realized as a group in its own right. `to_parent[id]` maps
/// ids of `group` back into the parent; ids follow the parent order.
struct EmbeddedSubgroup {
  FiniteGroup group;
  Subgroup image;
  std::vector<ElemId> to_parent;

  /// Parent id -> id in `group`, if the element belongs to the subgroup.
  std::optional<ElemId> from_parent(ElemId parent_id) const;
};

EmbeddedSubgroup realize(const Subgroup& h, std::string name = {});

/// C_G(X). Throws GroupError(NotMember) if an id is outside G.
Subgroup centralizer(const FiniteGroup& g, std::span<const ElemId> x);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& x);
/// N_G(H).
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);

/// Smallest subgroup containing `seeds` and closed under conjugation by
/// `conjugators`.
Subgroup normal_closure(const FiniteGroup& g, std::span<const ElemId> seeds, std::span<const ElemId> conjugators);

/// [H, H], computed as a subgroup of H's parent.
Subgroup derived_subgroup(const Subgroup& h);
/// G = G^(0) > G^(1) > ... until the series stabilizes.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_abelian(const Subgroup& h);

/// A Sylow p-subgroup grown through normalizers: starting from the trivial
/// group, repeatedly adjoin the least element x of N_G(P) outside P with
/// x^p in P. Trivial when p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p);

/// Product set HK = {hk}; a subgroup only when HK = KH.
std::vector<ElemId> product_set(const Subgroup& h, const Subgroup& k);

/// Subgroup generated by all elements of p-power order.
Subgroup p_elements_subgroup(const FiniteGroup& g, unsigned p);

enum class TwistVariant { Alpha, Beta };

/// alpha_n(x) = x^(a^(n-1)) ... x^a x, or beta_n(x) with the exponents of a
/// doubled. Satisfies (ax)^n = a^n alpha_n(x) and (a^2 x)^n = a^2n beta_n(x).
ElemId twisted_power_factor(const FiniteGroup& g, ElemId a, ElemId x, unsigned n, TwistVariant variant);

/// Representatives of all subgroups of G up to conjugacy, sorted by order
/// and then by the least conjugate element set. Intended for small G.
std::vector<Subgroup> subgroup_class_representatives(const FiniteGroup& g);

/// Least sorted element list over all conjugates of H.
std::vector<ElemId> conjugacy_key(const Subgroup& h);

}  // namespace ratgk
