#include "ratgk/facts.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ratgk/construct.hpp"
#include "ratgk/search.hpp"
#include "ratgk/subgroups.hpp"

namespace ratgk {

char case_letter(CaseTag tag) { return static_cast<char>('a' + static_cast<int>(tag)); }

std::optional<CaseTag> parse_case_tag(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  const char c = static_cast<char>(s.front() | 0x20);
  if (c < 'a' || c > 'e') return std::nullopt;
  return static_cast<CaseTag>(c - 'a');
}

const std::vector<CaseTag>& all_case_tags() {
  static const std::vector<CaseTag> tags = {CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D, CaseTag::E};
  return tags;
}

namespace literal {
FpMatrix alpha() { return FpMatrix(5, {{3, 3, 0, 0}, {4, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 2, 3}}); }
FpMatrix beta() { return FpMatrix(5, {{0, 0, 2, 3}, {0, 0, 3, 3}, {1, 4, 0, 0}, {4, 4, 0, 0}}); }
FpMatrix gamma() { return FpMatrix(5, {{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}); }
FpMatrix mu_u() { return FpMatrix(5, {{0, 0, 3, 2}, {0, 0, 2, 2}, {4, 1, 0, 0}, {1, 1, 0, 0}}); }
FpMatrix mu_v() { return FpMatrix(5, {{0, 0, 4, 2}, {0, 0, 2, 4}, {3, 1, 0, 0}, {1, 3, 0, 0}}); }
FpMatrix mu_quotient() { return FpMatrix(5, {{4, 1, 0, 0}, {2, 2, 0, 0}, {0, 0, 2, 3}, {0, 0, 4, 4}}); }
FpVector u() { return FpVector(5, {0, 1, 1, 1}); }
FpVector v() { return FpVector(5, {0, 1, 1, 2}); }
}  // namespace literal

// ---------------------------------------------------------------------------
// Case construction

namespace {

ElemId locate_matrix(const FiniteGroup& g, const FpMatrix& m) {
  auto id = g.find(GroupElement(m));
  if (!id) throw GroupError(GroupError::Kind::NotMember, "matrix " + m.to_string() + " is not in " + g.name());
  return *id;
}

std::size_t count_order(const FiniteGroup& g, std::uint64_t n) {
  const auto orders = g.element_orders();
  return static_cast<std::size_t>(std::count(orders.begin(), orders.end(), n));
}

FiniteGroup find_q8_in_gl25() {
  std::vector<FpMatrix> pool;
  for (auto& m : all_invertible_matrices(5, 2))
    if (m.determinant() == 1 && m.order() == 4) pool.push_back(std::move(m));
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      FiniteGroup g = generate_group({pool[a], pool[b]}, {}, "Q8 < GL(2,5)");
      if (g.order() == 8 && count_order(g, 2) == 1) return g;
    }
  throw GroupError(GroupError::Kind::Unknown, "no quaternion subgroup found in SL(2,5)");
}

CaseAction build_a() {
  FiniteGroup q8 = find_q8_in_gl25();
  const ElemId i = q8.generators()[0], j = q8.generators()[1];
  CaseAction out{CaseTag::A, ModuleAction::natural(q8), {}, {}};
  out.elements = {{"i", i}, {"j", j}, {"k", q8.mul(i, j)}};
  return out;
}

CaseAction build_b() {
  FiniteGroup h = named_group("C3:C4");
  auto act = ModuleAction::from_generator_images(h, {FpMatrix(5, {{0, 1}, {4, 4}}), FpMatrix(5, {{2, 0}, {3, 3}})});
  CaseAction out{CaseTag::B, std::move(act), {}, {}};
  out.elements = {{"a", h.generators()[0]}, {"b", h.generators()[1]}};
  out.vectors = {{"u", FpVector(5, {1, 0})}, {"v", FpVector(5, {0, 1})}};
  return out;
}

CaseAction build_c() {
  const FiniteGroup q8 = find_q8_in_gl25();
  const FpMatrix mi = q8.element(q8.generators()[0]).as<FpMatrix>();
  const FpMatrix mj = q8.element(q8.generators()[1]).as<FpMatrix>();
  std::optional<FpMatrix> three;
  for (const auto& m : all_invertible_matrices(5, 2)) {
    if (m.order() != 3) continue;
    const FpMatrix inv = m.inverse();
    bool normalizes = true;
    for (ElemId x = 0; x < q8.order() && normalizes; ++x)
      normalizes = q8.find(GroupElement(inv * q8.element(x).as<FpMatrix>() * m)).has_value();
    if (normalizes) {
      three = m;
      break;
    }
  }
  if (!three) throw GroupError(GroupError::Kind::Unknown, "no order-3 matrix normalizes the quaternion subgroup");
  FiniteGroup h = generate_group({mi, mj, *three}, {}, "SL(2,3) < GL(2,5)");
  if (h.order() != 24) throw GroupError(GroupError::Kind::Unknown, "extension of Q8 has the wrong order");
  CaseAction out{CaseTag::C, ModuleAction::natural(h), {}, {}};

  const ElemId a = h.generators()[2];
  std::optional<ElemId> i;
  for (ElemId x = 0; x < h.order() && !i; ++x) {
    if (h.element_order(x) != 4) continue;
    const ElemId a2 = h.mul(a, a);
    if (h.mul(h.mul(h.conjugate(x, a2), h.conjugate(x, a)), x) == 0) i = x;
  }
  if (!i) throw GroupError(GroupError::Kind::Unknown, "no order-4 element i with i^(a^2) i^a i = 1");
  const ElemId j = h.conjugate(*i, a), k = h.conjugate(j, a);
  out.elements = {{"a", a}, {"i", *i}, {"j", j}, {"k", k}, {"z", h.mul(*i, *i)}};

  const ModuleAction& act = out.action;
  std::optional<FpVector> ui;
  for (std::uint64_t idx = 1; idx < act.module_size() && !ui; ++idx) {
    FpVector w = FpVector::from_index(5, 2, idx);
    if (act.act(w, *i) == w.scaled(2)) ui = w;
  }
  if (!ui) throw GroupError(GroupError::Kind::Unknown, "i has no eigenvalue 2");
  const FpVector ui_inv = act.act(*ui, j);
  const FpVector uj = act.act(*ui, a), uj_inv = act.act(ui_inv, a);
  const FpVector uk = act.act(uj, a), uk_inv = act.act(uj_inv, a);
  out.vectors = {{"u_i", *ui}, {"u_i^-1", ui_inv}, {"u_j", uj}, {"u_j^-1", uj_inv}, {"u_k", uk}, {"u_k^-1", uk_inv}};
  return out;
}

CaseAction build_de(CaseTag tag) {
  const bool full = tag == CaseTag::D;
  const FpMatrix third = full ? literal::gamma() : literal::gamma().power(2);
  FiniteGroup h = generate_group({literal::alpha(), literal::beta(), third}, {},
                                 full ? "<alpha,beta,gamma>" : "<alpha,beta,gamma^2>");
  CaseAction out{tag, ModuleAction::natural(h), {}, {}};
  out.elements = {{"alpha", h.generators()[0]}, {"beta", h.generators()[1]}, {full ? "gamma" : "gamma^2", h.generators()[2]}};
  out.vectors = {{"u", literal::u()}, {"v", literal::v()}};
  return out;
}

}  // namespace

CaseAction build_case_action(CaseTag tag) {
  switch (tag) {
    case CaseTag::A:
      return build_a();
    case CaseTag::B:
      return build_b();
    case CaseTag::C:
      return build_c();
    case CaseTag::D:
    case CaseTag::E:
      return build_de(tag);
  }
  throw GroupError(GroupError::Kind::Unknown, "unknown case tag");
}

// ---------------------------------------------------------------------------
// FactReport

void FactReport::add(std::string id, std::string location, bool verdict, std::string evidence) {
  facts.push_back({std::move(id), std::move(location), verdict, std::move(evidence)});
}

void FactReport::append(const FactReport& other) { facts.insert(facts.end(), other.facts.begin(), other.facts.end()); }

bool FactReport::all_passed() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.verdict; });
}

const Fact* FactReport::find(std::string_view id) const {
  for (const auto& f : facts)
    if (f.id == id) return &f;
  return nullptr;
}

std::string FactReport::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << "# " << title << "\n";
  std::size_t passed = 0;
  for (const auto& f : facts) {
    passed += f.verdict;
    os << (f.verdict ? "[PASS] " : "[FAIL] ") << f.id << "\n";
    os << "    at: " << f.location << "\n";
    std::istringstream ev(f.evidence);
    for (std::string line; std::getline(ev, line);) os << "    " << line << "\n";
  }
  os << passed << "/" << facts.size() << " facts passed\n";
  return os.str();
}

std::string FactReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["title"] = title;
  doc["passed"] = all_passed();
  doc["facts"] = nlohmann::ordered_json::array();
  for (const auto& f : facts)
    doc["facts"].push_back({{"id", f.id}, {"location", f.location}, {"verdict", f.verdict}, {"evidence", f.evidence}});
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

std::string vectors_text(const std::vector<FpVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + v.to_string();
  return out;
}

std::set<std::uint64_t> orbit_indices(const ModuleAction& act, const FpVector& v, std::span<const ElemId> elems) {
  std::set<std::uint64_t> out;
  for (ElemId g : elems) out.insert(act.act(v, g).index());
  return out;
}

std::set<std::uint64_t> line_minus_zero(const FpVector& v) {
  std::set<std::uint64_t> out;
  for (int c = 1; c < v.prime(); ++c) out.insert(v.scaled(c).index());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Unique Sylow 2-subgroup of C, when the 2-elements form one.
std::optional<Subgroup> unique_sylow2(const Subgroup& c) {
  const FiniteGroup& g = c.parent();
  std::vector<ElemId> twos;
  for (ElemId x : c.elements()) {
    std::uint64_t o = g.element_order(x);
    while (o % 2 == 0) o /= 2;
    if (o == 1) twos.push_back(x);
  }
  if (twos.size() != p_part(c.order(), 2)) return std::nullopt;
  return Subgroup::from_elements(g, std::move(twos));
}

std::string join_ids(const FiniteGroup& g, std::span<const ElemId> ids) {
  std::string out;
  for (ElemId x : ids) out += (out.empty() ? "" : ", ") + g.element(x).to_string();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cases D and E

FactReport verify_case_de_facts() {
  FactReport report;
  report.title = "GL(4,5) cases <alpha,beta,gamma> and <alpha,beta,gamma^2>";
  const CaseAction d = build_case_action(CaseTag::D);
  const CaseAction e = build_case_action(CaseTag::E);
  const FiniteGroup& gd = d.action.group();
  const FiniteGroup& ge = e.action.group();

  const FpMatrix al = literal::alpha(), be = literal::beta(), ga = literal::gamma();
  const FpMatrix ga_inv = ga.inverse();
  const FpMatrix al_conj = ga_inv * al * ga;  // gamma^-1 alpha gamma

  {
    const bool contains = ge.order() * 2 == gd.order() &&
                          std::all_of(ge.generators().begin(), ge.generators().end(), [&](ElemId x) {
                            return gd.find(ge.element(x)).has_value();
                          });
    std::ostringstream ev;
    ev << "|<alpha,beta,gamma>| = " << gd.order() << ", |<alpha,beta,gamma^2>| = " << ge.order()
       << "; gamma^2 subgroup generators lie in the gamma group: " << yes_no(contains);
    report.add("de.orders", "cases (d)/(e): the two matrix groups", contains, ev.str());
  }

  for (const CaseAction* ca : {&d, &e}) {
    const FiniteGroup& g = ca->action.group();
    const std::string tag(1, case_letter(ca->tag));
    const std::string where = "case (" + tag + ") analysis: ";

    // (1) subgroup generated by 3-elements
    const Subgroup l3 = p_elements_subgroup(g, 3);
    const auto conj_id = g.find(GroupElement(al_conj));
    bool ok = conj_id.has_value();
    std::optional<Subgroup> lgen;
    if (ok) {
      const std::vector<ElemId> gens{locate_matrix(g, al), *conj_id};
      lgen = Subgroup::generated_by(g, gens);
      ok = *lgen == l3;
    }
    {
      std::ostringstream ev;
      ev << "|<3-elements>| = " << l3.order() << ", gamma^-1 alpha gamma = " << al_conj.to_string()
         << (conj_id ? "" : " (not a member)");
      if (lgen) ev << ", |<alpha, gamma^-1 alpha gamma>| = " << lgen->order();
      report.add("de.L." + tag, where + "subgroup generated by the 3-elements is <alpha, gamma^-1 alpha gamma>", ok,
                 ev.str());
    }

    // (2) its Sylow 2-subgroup
    {
      const FpMatrix x1 = al * al_conj, x2 = al_conj * al;
      const auto i1 = g.find(GroupElement(x1)), i2 = g.find(GroupElement(x2));
      bool good = i1 && i2;
      std::ostringstream ev;
      if (good) {
        const std::vector<ElemId> gens{*i1, *i2};
        const Subgroup l2 = Subgroup::generated_by(g, gens);
        const bool inside = std::all_of(l2.elements().begin(), l2.elements().end(),
                                        [&](ElemId x) { return l3.contains(x); });
        const auto unique = unique_sylow2(l3);
        good = inside && l2.order() == p_part(l3.order(), 2) && unique && *unique == l2;
        ev << "|<alpha gamma^-1 alpha gamma, gamma^-1 alpha gamma alpha>| = " << l2.order()
           << ", 2-part of |L| = " << p_part(l3.order(), 2) << ", contained in L: " << yes_no(inside)
           << ", equals the unique Sylow 2-subgroup of L: " << yes_no(unique && *unique == l2);
      } else {
        ev << "a generator is not in the group";
      }
      report.add("de.L2." + tag, where + "Sylow 2-subgroup of L is <alpha gamma^-1 alpha gamma, gamma^-1 alpha gamma alpha>",
                 good, ev.str());
    }

    // (3) C(alpha)_2
    {
      const ElemId a = locate_matrix(g, al);
      const std::vector<ElemId> just_a{a};
      const Subgroup c = centralizer(g, just_a);
      const auto c2 = unique_sylow2(c);
      std::vector<FpMatrix> stated;
      if (ca->tag == CaseTag::D) {
        stated = {al * ga * be * al, al * be * ga * (al * be).power(2)};
      } else {
        stated = {al * ga * be * al.power(2) * be * ga * (al * be).power(2)};
      }
      std::vector<ElemId> stated_ids;
      bool members = true;
      for (const auto& m : stated) {
        auto id = g.find(GroupElement(m));
        if (id) stated_ids.push_back(*id);
        else members = false;
      }
      std::ostringstream ev;
      ev << "|C(alpha)| = " << c.order();
      bool good = members && c2.has_value();
      if (c2) {
        const Subgroup gen = Subgroup::generated_by(g, stated_ids);
        const bool equal = gen == *c2;
        const bool normal = c2->is_normal();
        good = good && equal && normal;
        ev << ", |C(alpha)_2| = " << c2->order() << ", stated generators give order " << gen.order()
           << ", equal: " << yes_no(equal) << ", normal in the group: " << yes_no(normal);
      } else {
        ev << ", the 2-elements of C(alpha) do not form a unique Sylow subgroup";
      }
      if (!members) ev << "; a stated generator is not a member";
      report.add("de.centralizer2." + tag, where + "C(alpha)_2 from the stated generators, normal", good, ev.str());
    }

    // (4) orbit separation
    {
      const auto ou = orbit(ca->action, literal::u());
      const auto ov = orbit(ca->action, literal::v());
      std::set<std::uint64_t> su, sv;
      for (const auto& w : ou) su.insert(w.index());
      for (const auto& w : ov) sv.insert(w.index());
      std::vector<std::uint64_t> common;
      std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(common));
      std::ostringstream ev;
      ev << "|orbit(u)| = " << ou.size() << ", |orbit(v)| = " << ov.size() << ", common vectors: " << common.size();
      report.add("de.orbits." + tag, where + "u = (0,1,1,1) and v = (0,1,1,2) lie in two different orbits",
                 common.empty(), ev.str());
    }
  }

  // (5) mu_u, mu_v
  {
    const auto in_e_u = ge.find(GroupElement(literal::mu_u()));
    const auto in_e_v = ge.find(GroupElement(literal::mu_v()));
    std::ostringstream ev;
    ev << "mu_u = " << literal::mu_u().to_string() << " in <alpha,beta,gamma^2>: " << yes_no(in_e_u.has_value())
       << "\nmu_v = " << literal::mu_v().to_string() << " in <alpha,beta,gamma^2>: " << yes_no(in_e_v.has_value());
    report.add("de.mu.membership", "cases (d)/(e) analysis: mu_u and mu_v belong to <alpha,beta,gamma^2>",
               in_e_u && in_e_v, ev.str());
  }
  for (const auto& [name, vec, mu] : {std::tuple{"u", literal::u(), literal::mu_u()},
                                      std::tuple{"v", literal::v(), literal::mu_v()}}) {
    std::vector<ElemId> hits;
    const FpVector target = vec.scaled(2);
    for (ElemId g = 0; g < gd.order(); ++g)
      if (d.action.act(vec, g) == target) hits.push_back(g);
    const bool ok = hits.size() == 1 && d.action.rep(hits.front()) == mu;
    std::ostringstream ev;
    ev << "elements of <alpha,beta,gamma> sending " << name << " to 2" << name << ": " << hits.size();
    for (ElemId h : hits) ev << "\n  " << d.action.rep(h).to_string();
    report.add(std::string("de.mu.unique.") + name,
               std::string("cases (d)/(e) analysis: mu_") + name + " is the unique matrix with " + name + ".mu = 2" + name,
               ok, ev.str());
  }

  // (6) mu_u^-1 mu_v
  const FpMatrix q = literal::mu_u().inverse() * literal::mu_v();
  {
    std::ostringstream ev;
    ev << "computed " << q.to_string() << "\nstated   " << literal::mu_quotient().to_string();
    report.add("de.mumv.literal", "cases (d)/(e) analysis: value of mu_u^-1 mu_v", q == literal::mu_quotient(), ev.str());
  }
  for (const CaseAction* ca : {&d, &e}) {
    const FiniteGroup& g = ca->action.group();
    const std::string tag(1, case_letter(ca->tag));
    const auto l2 = unique_sylow2(p_elements_subgroup(g, 3));
    const ElemId a = locate_matrix(g, al);
    const std::vector<ElemId> just_a{a};
    const auto c2 = unique_sylow2(centralizer(g, just_a));
    const auto qid = g.find(GroupElement(q));
    std::ostringstream ev;
    bool ok = false;
    if (l2 && c2 && qid) {
      const auto prod = product_set(*l2, *c2);
      const bool member = std::binary_search(prod.begin(), prod.end(), *qid);
      ok = !member;
      ev << "|(L)_2| = " << l2->order() << ", |C(alpha)_2| = " << c2->order() << ", |(L)_2 C(alpha)_2| = " << prod.size()
         << ", mu_u^-1 mu_v in the group: yes, in the product: " << yes_no(member);
    } else {
      ev << (qid ? "(L)_2 or C(alpha)_2 is not a unique Sylow subgroup" : "mu_u^-1 mu_v is not in the group");
    }
    report.add("de.mumv.nonmember." + tag, "case (" + tag + ") analysis: mu_u^-1 mu_v is not in (L)_2 C(alpha)_2", ok,
               ev.str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Case B

FactReport verify_case_b_facts() {
  FactReport report;
  report.title = "C3:C4 acting on GF(5)^2";
  const CaseAction cb = build_case_action(CaseTag::B);
  const ModuleAction& act = cb.action;
  const FiniteGroup& h = act.group();
  const ElemId a = cb.elements.at("a"), b = cb.elements.at("b");
  const FpVector u = cb.vectors.at("u"), v = cb.vectors.at("v");
  const std::string where = "case (b) analysis: ";

  {
    const Subgroup p3 = sylow_subgroup(h, 3);
    const bool ok = h.order() == 12 && p3.is_normal() && act.kernel().order() == 1;
    std::ostringstream ev;
    ev << "|H| = " << h.order() << ", Sylow 3-subgroup order " << p3.order() << " normal: " << yes_no(p3.is_normal())
       << ", kernel order " << act.kernel().order() << "\na -> " << act.rep(a).to_string() << ", b -> "
       << act.rep(b).to_string();
    report.add("b.structure", where + "H/K is C3:C4 acting faithfully on GF(5)^2", ok, ev.str());
  }
  {
    const bool r1 = act.act(u, b) == u.scaled(2);
    const bool r2 = act.act(u, a) == v;
    const bool r3 = act.act(v, a) == u.scaled(4) + v.scaled(4);
    const bool r4 = act.act(v, b) == u.scaled(3) + v.scaled(3);
    std::ostringstream ev;
    ev << "u^b = u^2: " << yes_no(r1) << ", u^a = v: " << yes_no(r2) << ", v^a = u^4 v^4: " << yes_no(r3)
       << ", v^b = u^3 v^3: " << yes_no(r4);
    report.add("b.relations", where + "u^b = u^2, v = u^a, v^a = u^4 v^4, v^b = u^3 v^3", r1 && r2 && r3 && r4, ev.str());
  }
  {
    const auto o = orbit(act, u);
    std::set<std::uint64_t> stated;
    for (int i = 1; i <= 4; ++i) {
      stated.insert(u.scaled(i).index());
      stated.insert(v.scaled(i).index());
      stated.insert((u + v).scaled(i).index());
    }
    std::set<std::uint64_t> got;
    for (const auto& w : o) got.insert(w.index());
    std::ostringstream ev;
    ev << "|O_u| = " << o.size() << ": " << vectors_text(o);
    report.add("b.orbit", where + "O_u = {u^i, v^i, (uv)^i : i = 1..4}", got == stated && o.size() == 12, ev.str());
  }
  std::vector<ElemId> order4;
  for (ElemId x = 0; x < h.order(); ++x)
    if (h.element_order(x) == 4) order4.push_back(x);
  {
    const auto lines = (act.module_size() - 1) / 4;
    std::ostringstream ev;
    ev << "order-4 elements: " << order4.size() << ", one-dimensional subspaces of W: " << lines;
    report.add("b.order4", where + "exactly 6 elements of order 4 and 6 lines", order4.size() == 6 && lines == 6,
               ev.str());
  }
  {
    const Subgroup z = center(h);
    const bool none = std::none_of(order4.begin(), order4.end(), [&](ElemId x) { return z.contains(x); });
    report.add("b.noncentral", where + "no element of order 4 is central", none,
               "|Z(H)| = " + std::to_string(z.order()));
  }
  {
    bool all_one = true;
    std::map<std::uint64_t, ElemId> line_to_elem;  // keyed by least index on the line
    std::ostringstream ev;
    for (std::uint64_t idx = 1; idx < act.module_size(); ++idx) {
      const FpVector w = FpVector::from_index(5, 2, idx);
      std::vector<ElemId> xw;
      for (ElemId x = 0; x < h.order(); ++x)
        if (act.act(w, x) == w.scaled(2)) xw.push_back(x);
      if (xw.size() != 1) {
        all_one = false;
        ev << "|X_w| = " << xw.size() << " at w = " << w.to_string() << "\n";
        continue;
      }
      const std::uint64_t key = *line_minus_zero(w).begin();
      auto [it, fresh] = line_to_elem.emplace(key, xw.front());
      if (!fresh && it->second != xw.front()) all_one = false;
    }
    ev << "|X_w| = 1 for all 24 nonzero w: " << yes_no(all_one);
    report.add("b.Xw", where + "|X_w| = 1 for every nonzero w", all_one, ev.str());

    std::set<ElemId> image;
    for (const auto& [line, x] : line_to_elem) image.insert(x);
    const bool bijection = all_one && line_to_elem.size() == 6 && image == std::set<ElemId>(order4.begin(), order4.end());
    std::ostringstream ev2;
    for (const auto& [line, x] : line_to_elem)
      ev2 << "<" << FpVector::from_index(5, 2, line).to_string() << "> -> " << act.rep(x).to_string() << "\n";
    ev2 << "lines: " << line_to_elem.size() << ", distinct images: " << image.size();
    report.add("b.bijection", where + "lines of W correspond bijectively to the elements of order 4", bijection,
               ev2.str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// SL(2,3)

FactReport verify_sl23_facts() {
  FactReport report;
  report.title = "SL(2,3) acting on GF(5)^2";
  const CaseAction cc = build_case_action(CaseTag::C);
  const ModuleAction& act = cc.action;
  const FiniteGroup& h = act.group();
  const ElemId a = cc.elements.at("a"), i = cc.elements.at("i"), j = cc.elements.at("j"), k = cc.elements.at("k");
  const std::string where = "SL(2,3) case: ";

  {
    std::ostringstream ev;
    ev << "|H| = " << h.order() << ", conjugacy classes: " << h.conjugacy_classes().classes.size();
    report.add("sl23.order", where + "H/K is SL(2,3)", h.order() == 24, ev.str());
  }
  std::vector<ElemId> order4;
  for (ElemId x = 0; x < h.order(); ++x)
    if (h.element_order(x) == 4) order4.push_back(x);
  {
    const Subgroup z = center(h);
    const bool none = std::none_of(order4.begin(), order4.end(), [&](ElemId x) { return z.contains(x); });
    std::ostringstream ev;
    ev << "order-4 elements: " << order4.size() << ", |Z| = " << z.order() << ", any central: " << yes_no(!none);
    report.add("sl23.order4", where + "six elements of order 4, not central", order4.size() == 6 && none, ev.str());
  }
  {
    const auto orbits = nonzero_orbits(act);
    std::ostringstream ev;
    ev << "orbits on nonzero vectors: " << orbits.size();
    for (const auto& o : orbits) ev << " (size " << o.size() << ")";
    report.add("sl23.transitive", where + "H acts transitively on the nonzero vectors of W",
               orbits.size() == 1 && orbits.front().size() == 24, ev.str());
  }
  {
    const ElemId a2 = h.mul(a, a);
    const bool rel = h.mul(h.mul(h.conjugate(i, a2), h.conjugate(i, a)), i) == 0;
    const std::uint64_t ai = h.element_order(h.mul(a, i));
    std::ostringstream ev;
    ev << "a = " << act.rep(a).to_string() << ", i = " << act.rep(i).to_string() << "\n|a i| = " << ai
       << ", i^(a^2) i^a i = 1: " << yes_no(rel);
    report.add("sl23.witness", where + "a i has order 3 and i^(a^2) i^a i = 1", rel && ai == 3, ev.str());
  }
  {
    const std::vector<ElemId> gens{a, i};
    const Subgroup ai = Subgroup::generated_by(h, gens);
    const ElemId z = h.mul(i, i);
    const bool i4 = h.power(i, 4) == 0 && h.element_order(i) == 4;
    const bool a3 = h.power(a, 3) == 0 && h.element_order(a) == 3;
    const ElemId a2 = h.mul(a, a);
    const bool rel = h.mul(h.mul(h.conjugate(i, a2), h.conjugate(i, a)), i) == 0;
    const bool central = h.mul(z, a) == h.mul(a, z) && h.mul(z, i) == h.mul(i, z);
    const ElemId ia = h.conjugate(i, a);
    const bool moved = ia != i && ia != h.inverse(i);
    std::ostringstream ev;
    ev << "|<a, i>| = " << ai.order() << ", i^4 = 1 with |i| = 4: " << yes_no(i4) << ", a^3 = 1 with |a| = 3: "
       << yes_no(a3) << ", i^(a^2) i^a i = 1: " << yes_no(rel) << ", i^2 central: " << yes_no(central)
       << ", i^a not in {i, i^-1}: " << yes_no(moved);
    report.add("sl23.presentation", where + "the relations on a and i give a group of order 24",
               ai.order() == 24 && i4 && a3 && rel && central && moved, ev.str());
  }
  {
    std::set<ElemId> stated{i, h.inverse(i), j, h.inverse(j), k, h.inverse(k)};
    const bool ok = stated == std::set<ElemId>(order4.begin(), order4.end());
    report.add("sl23.I", where + "{i, i^-1, j, j^-1, k, k^-1} is the set of elements of order 4", ok,
               "distinct listed elements: " + std::to_string(stated.size()));
  }

  const auto& vec = cc.vectors;
  {
    const std::vector<FpVector> basis{vec.at("u_i"), vec.at("u_i^-1")};
    std::ostringstream ev;
    for (const auto& [name, w] : vec) ev << name << " = " << w.to_string() << "  ";
    report.add("sl23.basis", where + "W = <u_i> x <u_i^-1>", rank(basis) == 2, ev.str());
  }
  {
    const std::vector<std::pair<ElemId, std::string>> pairs{{i, "u_i"}, {h.inverse(i), "u_i^-1"}, {j, "u_j"},
                                                            {h.inverse(j), "u_j^-1"}, {k, "u_k"}, {h.inverse(k), "u_k^-1"}};
    bool ok = true;
    std::ostringstream ev;
    for (const auto& [l, name] : pairs) {
      const auto line = line_minus_zero(vec.at(name));
      for (std::uint64_t idx = 1; idx < act.module_size(); ++idx) {
        const FpVector w = FpVector::from_index(5, 2, idx);
        const bool eigen = act.act(w, l) == w.scaled(2);
        if (eigen != line.contains(idx)) {
          ok = false;
          ev << "mismatch at " << w.to_string() << " for " << name << "\n";
        }
      }
    }
    ev << "checked 6 elements x 24 vectors";
    report.add("sl23.eigenlines", where + "w^l = w^2 iff w in <u_l>, for l of order 4", ok, ev.str());
  }

  const Subgroup h2 = sylow_subgroup(h, 2);
  auto stated_orbit = [&](const std::string& l) {
    auto s = line_minus_zero(vec.at("u_" + l));
    s.merge(line_minus_zero(vec.at("u_" + l + "^-1")));
    return s;
  };
  const std::set<std::uint64_t> oi = stated_orbit("i"), oj = stated_orbit("j"), ok_ = stated_orbit("k");
  {
    std::set<std::set<std::uint64_t>> found;
    std::vector<bool> seen(act.module_size(), false);
    for (std::uint64_t idx = 1; idx < act.module_size(); ++idx) {
      if (seen[idx]) continue;
      auto o = orbit_indices(act, FpVector::from_index(5, 2, idx), h2.elements());
      for (auto x : o) seen[x] = true;
      found.insert(std::move(o));
    }
    const std::set<std::set<std::uint64_t>> expected{oi, oj, ok_};
    std::ostringstream ev;
    ev << "|H_2| = " << h2.order() << ", orbits:";
    for (const auto& o : found) ev << " " << o.size();
    report.add("sl23.sylow2_orbits", where + "the H_2-orbits on W minus 0 are O_i, O_j, O_k", found == expected,
               ev.str());
  }
  {
    auto image = [&](const std::set<std::uint64_t>& s) {
      std::set<std::uint64_t> out;
      for (auto idx : s) out.insert(act.act(FpVector::from_index(5, 2, idx), a).index());
      return out;
    };
    const bool ok = image(oi) == oj && image(oj) == ok_ && image(ok_) == oi;
    report.add("sl23.cyclic", where + "O_i^a = O_j, O_j^a = O_k, O_k^a = O_i", ok,
               "a = " + act.rep(a).to_string());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Premises

FactReport verify_prop_premises() {
  FactReport report;
  report.title = "Premises of the five explicit actions";
  for (CaseTag tag : all_case_tags()) {
    const CaseAction ca = build_case_action(tag);
    const std::string t(1, case_letter(tag));
    const std::string where = "case (" + t + "): ";
    std::ostringstream head;
    head << ca.action.group().name() << ", |H| = " << ca.action.group().order() << ", W = GF(5)^" << ca.action.dim();
    report.add("premise.brauer." + t, where + "the Brauer character of W is rational",
               brauer_character_is_rational(ca.action), head.str());
    const auto ev = eigenvector_property(ca.action);
    report.add("premise.eigenvector." + t, where + "W has the eigenvector property", ev.holds,
               ev.holds ? "witnesses for all " + std::to_string(ev.witness.size()) + " vectors"
                        : "no witness for " + ev.counterexample->to_string());
    report.add("premise.simple." + t, where + "W is a simple module", is_simple_module(ca.action), head.str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Twisted powers

FactReport verify_twisted_power_facts() {
  FactReport report;
  report.title = "Twisted power identities";
  std::vector<FiniteGroup> groups{named_group("SL(2,3)"), build_case_action(CaseTag::D).action.group(),
                                  named_group("GL(2,3)")};
  for (const auto& g : groups) {
    std::size_t checks = 0, failures = 0, b_pairs = 0;
    for (ElemId a = 0; a < g.order(); ++a) {
      if (g.element_order(a) != 3) continue;
      const ElemId a2 = g.mul(a, a);
      std::vector<ElemId> bs;
      for (ElemId b = 0; b < g.order(); ++b)
        if (g.conjugate(a, b) == a2) bs.push_back(b);
      b_pairs += bs.size();
      for (ElemId x = 0; x < g.order(); ++x) {
        ElemId ax_n = 0, a2x_n = 0;
        const ElemId ax = g.mul(a, x), a2x = g.mul(a2, x);
        for (unsigned n = 1; n <= 8; ++n) {
          ax_n = g.mul(ax_n, ax);
          a2x_n = g.mul(a2x_n, a2x);
          const ElemId al = twisted_power_factor(g, a, x, n, TwistVariant::Alpha);
          const ElemId be = twisted_power_factor(g, a, x, n, TwistVariant::Beta);
          checks += 2;
          if (ax_n != g.mul(g.power(a, n), al)) ++failures;
          if (a2x_n != g.mul(g.power(a, 2 * n), be)) ++failures;
          for (ElemId b : bs) {
            ++checks;
            if (g.conjugate(be, b) != twisted_power_factor(g, a, g.conjugate(x, b), n, TwistVariant::Alpha)) ++failures;
          }
        }
      }
    }
    std::ostringstream ev;
    ev << g.name() << " (order " << g.order() << "): " << checks << " identities checked, " << failures
       << " failures; pairs (a, b) with a^b = a^2: " << b_pairs;
    report.add("twisted." + g.name(), "twisted powers: (ax)^n = a^n alpha_n(x), (a^2 x)^n = a^2n beta_n(x), "
                                      "beta_n(x)^b = alpha_n(x^b) when a^b = a^2",
               failures == 0, ev.str());
  }
  return report;
}

FactReport verify_paper() {
  FactReport report;
  report.title = "Computational claims";
  report.append(verify_case_de_facts());
  report.append(verify_case_b_facts());
  report.append(verify_sl23_facts());
  report.append(verify_prop_premises());
  report.append(verify_twisted_power_facts());
  return report;
}

// ---------------------------------------------------------------------------
// Witnesses

std::vector<WitnessOutcome> build_witnesses(std::size_t order_cap) {
  const FiniteGroup c2 = named_group("C2"), s3 = named_group("S3");
  const FiniteGroup q8 = build_case_action(CaseTag::A).action.group();
  auto affine = [&] { return semidirect_product(ModuleAction::natural(q8), order_cap).renamed("F5^2:Q8"); };

  struct Candidate {
    std::string name;
    std::function<FiniteGroup()> build;
  };
  const std::vector<Candidate> candidates{
      {"C2", [&] { return c2; }},
      {"S3", [&] { return s3; }},
      {"S3 x S3", [&] { return direct_product(s3, s3, order_cap); }},
      {"F5^2:Q8", affine},
      {"(F5^2:Q8) x C2", [&] { return direct_product(affine(), c2, order_cap).renamed("(F5^2:Q8) x C2"); }},
      {"(F5^2:Q8) x S3", [&] { return direct_product(affine(), s3, order_cap).renamed("(F5^2:Q8) x S3"); }},
  };

  std::vector<WitnessOutcome> out;
  const auto& figures = admissible_graphs();
  for (std::size_t f = 0; f < figures.size(); ++f) {
    WitnessOutcome w;
    w.figure = static_cast<int>(f + 1);
    w.candidate = candidates[f].name;
    try {
      FiniteGroup g = candidates[f].build();
      w.classification = classify_rational_solvable(g);
      w.group = std::move(g);
    } catch (const GroupError& e) {
      w.search_note = std::string("candidate failed to build: ") + e.what();
    }
    if (!w.group || !w.classification.matches || w.classification.figure != w.figure) {
      w.group.reset();
      for (SearchSpace space : {SearchSpace::AffineF5, SearchSpace::NamedProducts}) {
        const SearchResult r = search_witness(figures[f], space, order_cap);
        w.search_note += (w.search_note.empty() ? "" : "; ") + std::string("searched ") + std::to_string(r.examined) +
                         " of " + std::to_string(r.space_size) + " candidates";
        if (r.group) {
          w.group = r.group;
          w.candidate = r.description;
          w.classification = classify_rational_solvable(*r.group);
          w.from_search = true;
          break;
        }
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

FactReport witness_suite(std::size_t order_cap) {
  FactReport report;
  report.title = "Realizable GK graphs of solvable rational groups";
  const auto witnesses = build_witnesses(order_cap);
  const auto& figures = admissible_graphs();
  std::set<std::string> graphs;
  for (const auto& w : witnesses) {
    const bool ok = w.group && w.classification.matches && w.classification.figure == w.figure;
    std::ostringstream ev;
    ev << "candidate " << w.candidate;
    if (w.group) {
      ev << " (order " << w.group->order() << "): graph " << w.classification.graph.to_string()
         << ", solvable: " << yes_no(w.classification.solvable) << ", rational: " << yes_no(w.classification.rational);
      if (ok) graphs.insert(w.classification.graph.to_string());
    }
    if (w.from_search) ev << ", supplied by search";
    if (!w.search_note.empty()) ev << "\n" << w.search_note;
    report.add("witness.figure" + std::to_string(w.figure),
               "realizable graphs: " + figures[static_cast<std::size_t>(w.figure - 1)].to_string(), ok, ev.str());
  }
  {
    std::set<std::string> expected;
    for (const auto& g : figures) expected.insert(g.to_string());
    std::ostringstream ev;
    for (const auto& g : graphs) ev << g << " ";
    report.add("witness.all_six", "realizable graphs: exactly the six figures", graphs == expected, ev.str());
  }
  {
    const auto& tri = witnesses.back();
    bool ok = false;
    std::ostringstream ev;
    if (tri.group) {
      const CorollaryVerdict v = check_corollary(*tri.group);
      ok = v.preconditions_met && v.holds;
      ev << tri.candidate << " contains:";
      if (!v.preconditions_met) ev << "precondition failed: " << v.precondition_failure;
      for (const auto& [n, x] : {std::pair{6, v.order6}, std::pair{10, v.order10}, std::pair{15, v.order15}}) {
        ev << "\n  order " << n << ": ";
        if (x) ev << tri.group->element(*x).to_string();
        else ev << "none";
      }
    } else {
      ev << "no triangle witness";
    }
    report.add("witness.corollary", "corollary: elements of order 6, 10 and 15", ok, ev.str());
  }
  return report;
}

}  // namespace ratgk
