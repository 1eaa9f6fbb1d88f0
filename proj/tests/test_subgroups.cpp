#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "ratgk/construct.hpp"
#include "ratgk/subgroups.hpp"

using namespace ratgk;

TEST_CASE("centralizer, normalizer and center by brute force") {
  for (const char* name : {"S4", "SL(2,3)", "D8", "C3:C4"}) {
    const FiniteGroup g = named_group(name);
    std::set<ElemId> z;
    for (ElemId c = 0; c < g.order(); ++c) {
      bool central = true;
      for (ElemId x = 0; x < g.order(); ++x) central &= g.mul(c, x) == g.mul(x, c);
      if (central) z.insert(c);
    }
    const Subgroup zz = center(g);
    CHECK(std::set<ElemId>(zz.elements().begin(), zz.elements().end()) == z);

    for (ElemId x = 0; x < g.order(); x += 3) {
      const ElemId xs[] = {x};
      const Subgroup cx = centralizer(g, xs);
      const Subgroup h = Subgroup::generated_by(g, xs);
      const Subgroup nh = normalizer(g, h);
      for (ElemId c = 0; c < g.order(); ++c) {
        CHECK(cx.contains(c) == (g.mul(c, x) == g.mul(x, c)));
        bool norm = true;
        for (ElemId y : h.elements()) norm &= h.contains(g.conjugate(y, c));
        CHECK(nh.contains(c) == norm);
      }
    }
  }
}

TEST_CASE("solvability agrees with the derived-series oracle") {
  for (const char* name : {"S3", "S4", "A4", "A5", "S5", "SL(2,3)", "GL(2,3)", "Q8"}) {
    const FiniteGroup g = named_group(name);
    CHECK(is_solvable(g) == oracle::solvable(g));
  }
  CHECK_FALSE(is_solvable(named_group("A5")));
  CHECK(derived_series(named_group("S4")).back().order() == 1);
}

TEST_CASE("Sylow subgroups have full p-part") {
  for (const char* name : {"S4", "A5", "GL(2,3)", "SL(2,3)", "D10"}) {
    const FiniteGroup g = named_group(name);
    for (unsigned p : prime_divisors(g.order())) {
      const Subgroup s = sylow_subgroup(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      for (ElemId x : s.elements()) CHECK(p_part(g.element_order(x), p) == g.element_order(x));
    }
  }
}

TEST_CASE("product set equals naive products") {
  const FiniteGroup g = named_group("S4");
  const Subgroup a = sylow_subgroup(g, 2), b = sylow_subgroup(g, 3);
  std::set<ElemId> naive;
  for (ElemId x : a.elements())
    for (ElemId y : b.elements()) naive.insert(g.mul(x, y));
  CHECK(product_set(a, b) == std::vector<ElemId>(naive.begin(), naive.end()));
}

TEST_CASE("twisted power factor satisfies the defining recursion") {
  const FiniteGroup g = named_group("SL(2,3)");
  for (ElemId a = 0; a < g.order(); ++a) {
    if (g.element_order(a) != 3) continue;
    for (ElemId x = 0; x < g.order(); ++x) {
      ElemId alpha = x, beta = x;
      const ElemId a2 = g.mul(a, a);
      for (unsigned n = 1; n <= 8; ++n) {
        if (n > 1) {
          alpha = g.mul(g.conjugate(alpha, a), x);
          beta = g.mul(g.conjugate(beta, a2), x);
        }
        CHECK(twisted_power_factor(g, a, x, n, TwistVariant::Alpha) == alpha);
        CHECK(twisted_power_factor(g, a, x, n, TwistVariant::Beta) == beta);
      }
    }
  }
}

TEST_CASE("subgroup classes of small groups match a brute-force census") {
  // Oracle: every subgroup is generated by at most two elements in these
  // groups; collect them all and count classes by direct conjugation.
  for (const char* name : {"S3", "S4", "D8", "Q8", "SL(2,3)", "C3:C4"}) {
    const FiniteGroup g = named_group(name);
    std::set<std::vector<ElemId>> subs;
    for (ElemId x = 0; x < g.order(); ++x)
      for (ElemId y = x; y < g.order(); ++y) subs.insert(oracle::closure(g, {x, y}));
    std::set<std::vector<ElemId>> seen;
    std::size_t classes = 0;
    for (const auto& h : subs) {
      if (seen.count(h)) continue;
      ++classes;
      for (ElemId c = 0; c < g.order(); ++c) {
        std::set<ElemId> conj;
        for (ElemId e : h) conj.insert(g.conjugate(e, c));
        seen.insert({conj.begin(), conj.end()});
      }
    }
    INFO(name);
    CHECK(subgroup_class_representatives(g).size() == classes);
  }
}

TEST_CASE("GL(2,5) subgroup classes against a lattice walk") {
  // Oracle: walk up from the trivial subgroup, joining one element at a time.
  // Every subgroup sits at the top of such a chain, so every class is reached.
  const FiniteGroup g = named_group("GL(2,5)");
  REQUIRE(g.order() == 480);
  std::set<std::vector<ElemId>> seen;
  std::vector<std::vector<ElemId>> reps, rep_gens;
  auto admit = [&](const std::vector<ElemId>& gens) {
    const auto h = oracle::closure(g, gens);
    if (seen.count(h)) return;
    for (ElemId c = 0; c < g.order(); ++c) {
      std::vector<ElemId> conj;
      for (ElemId e : h) conj.push_back(g.conjugate(e, c));
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
    reps.push_back(h);
    rep_gens.push_back(gens);
  };
  admit({});
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (ElemId z = 0; z < g.order(); ++z) {
      if (std::binary_search(reps[i].begin(), reps[i].end(), z)) continue;
      std::vector<ElemId> gens = rep_gens[i];
      gens.push_back(z);
      admit(gens);
    }
  CHECK(reps.size() == 48);
  CHECK(subgroup_class_representatives(g).size() == reps.size());
}
