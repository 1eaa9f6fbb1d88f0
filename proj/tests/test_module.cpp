#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ratgk/construct.hpp"
#include "ratgk/facts.hpp"
#include "ratgk/module.hpp"
#include "ratgk/subgroups.hpp"

using namespace ratgk;

namespace {

FiniteGroup q8_in_gl25() { return build_case_action(CaseTag::A).action.group(); }

}  // namespace

TEST_CASE("orbit-stabilizer on every vector") {
  for (CaseTag t : {CaseTag::A, CaseTag::B, CaseTag::C}) {
    const ModuleAction act = build_case_action(t).action;
    for (std::uint64_t i = 0; i < act.module_size(); ++i) {
      const FpVector v = FpVector::from_index(5, act.dim(), i);
      const auto orb = orbit(act, v);
      CHECK(orb.size() * stabilizer(act, v).order() == act.group().order());
      std::set<FpVector> naive;
      for (ElemId g = 0; g < act.group().order(); ++g) naive.insert(act.act(v, g));
      CHECK(std::set<FpVector>(orb.begin(), orb.end()) == naive);
    }
  }
}

TEST_CASE("nonzero orbits partition the module") {
  const ModuleAction act = build_case_action(CaseTag::C).action;
  std::size_t total = 0;
  for (const auto& o : nonzero_orbits(act)) total += o.size();
  CHECK(total == act.module_size() - 1);
}

TEST_CASE("action is a right action") {
  const ModuleAction act = build_case_action(CaseTag::B).action;
  const FiniteGroup& g = act.group();
  const FpVector v(5, {1, 3});
  for (ElemId a = 0; a < g.order(); ++a)
    for (ElemId b = 0; b < g.order(); ++b) CHECK(act.act(act.act(v, a), b) == act.act(v, g.mul(a, b)));
}

TEST_CASE("inconsistent generator images are rejected") {
  const FiniteGroup s3 = named_group("S3");
  std::vector<FpMatrix> images(s3.generators().size(), FpMatrix(5, {{2}}));
  CHECK_THROWS_AS(ModuleAction::from_generator_images(s3, images), GroupError);
  const FiniteGroup c4 = named_group("C4");
  CHECK_NOTHROW(ModuleAction::from_generator_images(c4, {FpMatrix(5, {{3}})}));
}

TEST_CASE("Brauer rationality of small actions") {
  // C4 acting on F5 by 2: the eigenvalue 2 lifts to a primitive 4th root of unity.
  const FiniteGroup c4 = generate_group({FpMatrix(5, {{2}})});
  CHECK_FALSE(brauer_character_is_rational(ModuleAction::natural(c4)));
  // Q8 in GL(2,5): traces 2, -2, 0.
  CHECK(brauer_character_is_rational(ModuleAction::natural(q8_in_gl25())));
  // GL(1,5) = C4 on F5 is not rational either.
  CHECK_FALSE(brauer_character_is_rational(ModuleAction::natural(general_linear_group(5, 1))));
}

TEST_CASE("eigenvector property, scalar subgroups of Q8 and GL(2,5)") {
  const FiniteGroup q8 = q8_in_gl25();
  // Center of Q8 is {I, -I}: only scales by 1 and 4.
  const FiniteGroup z = generate_group({FpMatrix(5, {{4, 0}, {0, 4}})});
  CHECK_FALSE(eigenvector_property(ModuleAction::natural(z)).holds);
  ElemId i = 0;
  for (ElemId x = 0; x < q8.order(); ++x)
    if (q8.element_order(x) == 4) {
      i = x;
      break;
    }
  const FiniteGroup ci = generate_group({q8.element(i)});
  CHECK_FALSE(eigenvector_property(ModuleAction::natural(ci)).holds);
  const FiniteGroup two = generate_group({FpMatrix(5, {{2, 0}, {0, 2}})});
  const auto w = eigenvector_property(ModuleAction::natural(two));
  CHECK(w.holds);
  CHECK_FALSE(w.counterexample.has_value());
}

TEST_CASE("eigenvector property matches a direct search") {
  for (CaseTag t : all_case_tags()) {
    const ModuleAction act = build_case_action(t).action;
    bool direct = true;
    for (std::uint64_t k = 1; k < act.module_size() && direct; ++k) {
      const FpVector v = FpVector::from_index(5, act.dim(), k);
      bool found = false;
      for (ElemId g = 0; g < act.group().order() && !found; ++g) found = act.act(v, g) == v.scaled(2);
      direct = found;
    }
    CHECK(eigenvector_property(act).holds == direct);
  }
}

TEST_CASE("simplicity by orbit spans") {
  CHECK(is_simple_module(build_case_action(CaseTag::A).action));
  const FiniteGroup diag = generate_group({FpMatrix(5, {{2, 0}, {0, 1}})});
  CHECK_FALSE(is_simple_module(ModuleAction::natural(diag)));
}

TEST_CASE("induced module obeys the dimension and stabilizer laws") {
  const FiniteGroup s = named_group("GL(2,3)");
  // H = SL(2,3) of index 2, W = F5 with H acting trivially.
  Subgroup h = derived_subgroup(Subgroup::whole(s));
  REQUIRE(h.order() == 24);
  const EmbeddedSubgroup eh = realize(h, "SL(2,3)");
  std::vector<FpMatrix> triv(eh.group.order(), FpMatrix::identity(5, 1));
  const ModuleAction inner = ModuleAction::from_matrices(eh.group, triv);
  const InducedModule ind = induce_module(inner, eh);
  CHECK(ind.action.dim() == inner.dim() * h.index());
  CHECK(ind.transversal.size() == h.index());
  // The first block is stabilized exactly by H.
  const FpVector e0(5, {1, 0});
  const Subgroup st = stabilizer(ind.action, e0);
  CHECK(st == h);
  for (ElemId t : ind.transversal) CHECK((t == 0 || !h.contains(t)));
}

TEST_CASE("right transversal covers every coset once") {
  const FiniteGroup g = named_group("S4");
  const Subgroup h = sylow_subgroup(g, 3);
  const auto t = right_transversal(h);
  CHECK(t.size() == h.index());
  std::set<ElemId> covered;
  for (ElemId r : t)
    for (ElemId x : h.elements()) covered.insert(g.mul(x, r));
  CHECK(covered.size() == g.order());
}

TEST_CASE("orbit examples and errors") {
  const ModuleAction sl = build_case_action(CaseTag::C).action;
  CHECK(orbit(sl, FpVector::zero(5, 2)).size() == 1);
  for (std::uint64_t i = 1; i < 25; ++i) CHECK(orbit(sl, FpVector::from_index(5, 2, i)).size() == 24);
  CHECK_THROWS_AS(orbit(sl, FpVector::zero(5, 3)), std::invalid_argument);
}

TEST_CASE("simplicity examples") {
  const FiniteGroup c4 = generate_group({FpMatrix(5, {{2}})});
  CHECK(is_simple_module(ModuleAction::natural(c4)));
  const ModuleAction sl = build_case_action(CaseTag::C).action;
  CHECK(is_simple_module(sl));
  CHECK_FALSE(is_simple_module(sl.direct_sum(sl)));
}

TEST_CASE("Brauer examples and errors") {
  const ModuleAction sl = build_case_action(CaseTag::C).action;
  CHECK(brauer_character_is_rational(sl));
  std::vector<FpMatrix> triv(sl.group().order(), FpMatrix::identity(5, 3));
  CHECK(brauer_character_is_rational(ModuleAction::from_matrices(sl.group(), triv)));
  const FiniteGroup p5 = generate_group({FpMatrix(5, {{1, 1}, {0, 1}})});
  CHECK_THROWS_AS(brauer_character_is_rational(ModuleAction::natural(p5)), std::domain_error);
}

TEST_CASE("Brauer rationality is invariant under change of basis") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  for (CaseTag t : all_case_tags()) {
    const ModuleAction act = build_case_action(t).action;
    for (int trial = 0; trial < 3; ++trial) {
      FpMatrix c;
      do {
        std::vector<int> e(act.dim() * act.dim());
        for (auto& x : e) x = d(rng);
        c = FpMatrix(5, act.dim(), e);
      } while (!c.is_invertible());
      CHECK(brauer_character_is_rational(act.change_basis(c)) == brauer_character_is_rational(act));
    }
  }
  // A non-rational action stays non-rational.
  const FiniteGroup c4 = generate_group({FpMatrix(5, {{2, 0}, {0, 1}})});
  CHECK_FALSE(brauer_character_is_rational(ModuleAction::natural(c4).change_basis(FpMatrix(5, {{1, 1}, {0, 1}}))));
}

TEST_CASE("representation is a homomorphism on random pairs") {
  std::mt19937 rng(99);
  for (CaseTag t : all_case_tags()) {
    const ModuleAction act = build_case_action(t).action;
    const FiniteGroup& g = act.group();
    CHECK(act.rep(0) == FpMatrix::identity(5, act.dim()));
    for (int i = 0; i < 1000; ++i) {
      const ElemId a = rng() % g.order(), b = rng() % g.order();
      CHECK(act.rep(g.mul(a, b)) == act.rep(a) * act.rep(b));
    }
  }
}

TEST_CASE("eigenvector examples and errors") {
  const ModuleAction sl = build_case_action(CaseTag::C).action;
  const auto w = eigenvector_property(sl);
  CHECK(w.holds);
  const FiniteGroup c2 = generate_group({FpMatrix(3, {{2}})});
  CHECK_THROWS_AS(eigenvector_property(ModuleAction::natural(c2)), std::invalid_argument);
}

TEST_CASE("induction from the trivial subgroup gives the regular module") {
  const FiniteGroup s = named_group("S3");
  const EmbeddedSubgroup triv = realize(Subgroup::trivial(s), "1");
  const ModuleAction inner = ModuleAction::from_matrices(triv.group, {FpMatrix::identity(5, 1)});
  const InducedModule ind = induce_module(inner, triv);
  CHECK(ind.action.dim() == s.order());
  CHECK(ind.transversal.front() == 0);
}

TEST_CASE("induction with H = S returns the inner module") {
  const ModuleAction sl = build_case_action(CaseTag::C).action;
  const EmbeddedSubgroup whole = realize(Subgroup::whole(sl.group()), "S");
  const ModuleAction inner = ModuleAction::from_matrices(
      whole.group, [&] {
        std::vector<FpMatrix> rep;
        for (ElemId x = 0; x < whole.group.order(); ++x) rep.push_back(sl.rep(whole.to_parent[x]));
        return rep;
      }());
  const InducedModule ind = induce_module(inner, whole);
  REQUIRE(ind.action.dim() == 2);
  for (ElemId x = 0; x < sl.group().order(); ++x) CHECK(ind.action.rep(x) == sl.rep(x));
}

TEST_CASE("induced block W^1 is moved back into itself exactly by H") {
  // Case e group inside the case d group, inducing its action on GF(5)^4.
  const CaseAction d = build_case_action(CaseTag::D), e = build_case_action(CaseTag::E);
  const FiniteGroup& s = d.action.group();
  std::vector<ElemId> ids;
  for (ElemId x = 0; x < e.action.group().order(); ++x) ids.push_back(s.id_of(e.action.group().element(x)));
  const Subgroup h = Subgroup::from_elements(s, ids);
  REQUIRE(h.index() == 2);
  const EmbeddedSubgroup eh = realize(h, "H");
  std::vector<FpMatrix> rep;
  for (ElemId x = 0; x < eh.group.order(); ++x) rep.push_back(d.action.rep(eh.to_parent[x]));
  const ModuleAction inner = ModuleAction::from_matrices(eh.group, rep);
  const InducedModule ind = induce_module(inner, eh);
  REQUIRE(ind.action.dim() == 8);
  auto in_first_block = [](const FpVector& v) {
    for (std::size_t i = 4; i < 8; ++i)
      if (v[i] != 0) return false;
    return true;
  };
  const bool inner_eigen = eigenvector_property(inner).holds;
  for (std::uint64_t k = 1; k < 625; k += 7) {
    const FpVector w4 = FpVector::from_index(5, 4, k);
    std::vector<int> e8(w4.entries().begin(), w4.entries().end());
    e8.resize(8, 0);
    const FpVector w(5, e8);
    bool witness_in_h = false;
    for (ElemId g = 0; g < s.order(); ++g) {
      const FpVector img = ind.action.act(w, g);
      CHECK(in_first_block(img) == h.contains(g));
      if (h.contains(g) && img == w.scaled(2)) witness_in_h = true;
    }
    // Witnesses for block vectors can be chosen in the block stabilizer.
    if (inner_eigen) CHECK(witness_in_h);
  }
}
