#pragma once

// Invariants every group in the corpus must satisfy. Shared by the property
// test binary and the acceptance runner.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ratgk/construct.hpp"
#include "ratgk/module.hpp"
#include "ratgk/rationality.hpp"
#include "ratgk/subgroups.hpp"

namespace props {

struct Violation {
  std::string group;
  std::string property;
};

/// Normal subgroups reachable as normal closures of single elements, plus the
/// center and derived subgroup.
inline std::vector<ratgk::Subgroup> some_normal_subgroups(const ratgk::FiniteGroup& g) {
  using namespace ratgk;
  std::vector<Subgroup> out;
  std::set<std::vector<ElemId>> seen;
  auto keep = [&](const Subgroup& n) {
    if (seen.insert({n.elements().begin(), n.elements().end()}).second) out.push_back(n);
  };
  std::vector<ElemId> all(g.order());
  for (ElemId x = 0; x < g.order(); ++x) all[x] = x;
  for (const auto& cls : g.conjugacy_classes().classes) {
    const ElemId seed[] = {cls.front()};
    keep(normal_closure(g, seed, all));
  }
  keep(center(g));
  keep(derived_subgroup(Subgroup::whole(g)));
  return out;
}

inline bool sylow5_oracle(const ratgk::FiniteGroup& g) {
  using namespace ratgk;
  const Subgroup p = sylow_subgroup(g, 5);
  if (p.order() != p_part(g.order(), 5)) return false;
  for (ElemId x : p.elements()) {
    if (x != 0 && oracle::order_by_powers(g, x) != 5) return false;
    for (ElemId c = 0; c < g.order(); ++c)
      if (!p.contains(g.conjugate(x, c))) return false;
    for (ElemId y : p.elements())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  }
  return true;
}

/// Checks all invariants on one corpus entry and appends any violations.
inline void check_entry(const corpus::Entry& e, std::vector<Violation>& out, std::size_t& quotients) {
  using namespace ratgk;
  const FiniteGroup& g = e.group;
  auto fail = [&](std::string what) { out.push_back({g.name() + " (order " + std::to_string(g.order()) + ")", std::move(what)}); };

  const bool rational = is_rational(g);
  if (rational && !is_cut(g)) fail("rational but not cut");
  if (rationality_normalizer_criterion(g) != rational) fail("class and normalizer criteria disagree");
  const bool solvable = is_solvable(g);

  if (rational) {
    for (const Subgroup& n : some_normal_subgroups(g)) {
      if (n.order() == g.order()) continue;
      const Quotient q = quotient(g, n);
      ++quotients;
      if (!is_rational(q.group)) fail("quotient by a normal subgroup of order " + std::to_string(n.order()) + " is not rational");
    }
  }
  if (solvable && rational) {
    for (unsigned p : gk_graph(g).vertices)
      if (p != 2 && p != 3 && p != 5) fail("vertex " + std::to_string(p) + " outside {2,3,5}");
    if (g.order() % 5 == 0 && !sylow5_normal_elementary_abelian(g)) fail("Sylow 5-subgroup not normal elementary abelian");
    if (g.order() % 5 == 0 && !sylow5_oracle(g)) fail("Sylow 5-subgroup fails the brute-force check");
  }
  if (e.action && rational && !eigenvector_property(*e.action).holds) fail("rational V x| S without the eigenvector property");
}

struct Summary {
  std::size_t groups = 0;
  std::size_t rational = 0;
  std::size_t affine_rational = 0;
  std::size_t quotients = 0;
  std::vector<Violation> violations;
};

inline Summary run_corpus() {
  Summary s;
  for (const auto& e : corpus::groups()) {
    ++s.groups;
    if (ratgk::is_rational(e.group)) {
      ++s.rational;
      if (e.action) ++s.affine_rational;
    }
    check_entry(e, s.violations, s.quotients);
  }
  return s;
}

}  // namespace props
