#include "ratgk/rationality.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ratgk/fp.hpp"
#include "ratgk/subgroups.hpp"

namespace ratgk {

// ---------------------------------------------------------------------------
// PrimeGraph

PrimeGraph::PrimeGraph(std::vector<unsigned> vs, std::vector<std::pair<unsigned, unsigned>> es)
    : vertices(std::move(vs)), edges(std::move(es)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (unsigned v : vertices)
    if (!is_prime(v)) throw std::invalid_argument("graph vertex " + std::to_string(v) + " is not prime");
  for (auto& [p, q] : edges) {
    if (p == q) throw std::invalid_argument("prime graph edges join distinct primes");
    if (p > q) std::swap(p, q);
    if (!std::binary_search(vertices.begin(), vertices.end(), p) ||
        !std::binary_search(vertices.begin(), vertices.end(), q))
      throw std::invalid_argument("edge endpoint is not a vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool PrimeGraph::has_edge(unsigned p, unsigned q) const {
  if (p > q) std::swap(p, q);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(p, q));
}

std::string PrimeGraph::to_dot() const {
  std::ostringstream os;
  os << "graph gk {\n";
  for (unsigned v : vertices) os << "  \"" << v << "\" [label=\"" << v << "\"];\n";
  for (const auto& [p, q] : edges) os << "  \"" << p << "\" -- \"" << q << "\";\n";
  os << "}\n";
  return os.str();
}

std::string PrimeGraph::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
  os << " |";
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : " ") << edges[i].first << '-' << edges[i].second;
  os << '}';
  return os.str();
}

const std::vector<PrimeGraph>& admissible_graphs() {
  static const std::vector<PrimeGraph> graphs = {
      PrimeGraph({2}, {}),
      PrimeGraph({2, 3}, {}),
      PrimeGraph({2, 3}, {{2, 3}}),
      PrimeGraph({2, 5}, {}),
      PrimeGraph({2, 5}, {{2, 5}}),
      PrimeGraph({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}}),
  };
  return graphs;
}

int admissible_graph_index(const PrimeGraph& g) {
  const auto& all = admissible_graphs();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == g) return static_cast<int>(i + 1);
  return 0;
}

// ---------------------------------------------------------------------------
// Rationality

namespace {

/// [N_G(<g>) : C_G(g)] by direct conjugation.
std::uint64_t normalizer_centralizer_index(const FiniteGroup& g, ElemId x) {
  std::vector<bool> in_cyclic(g.order(), false);
  for (ElemId y = x;; y = g.mul(y, x)) {
    in_cyclic[y] = true;
    if (y == 0) break;
  }
  std::uint64_t norm = 0, cent = 0;
  for (ElemId c = 0; c < g.order(); ++c) {
    const ElemId y = g.conjugate(x, c);
    if (y == x) ++cent;
    if (in_cyclic[y]) ++norm;
  }
  return norm / cent;
}

}  // namespace

bool is_rational(const FiniteGroup& g) {
  const auto& cc = g.conjugacy_classes();
  for (const auto& cls : cc.classes) {
    const ElemId x = cls.front();
    const std::uint64_t k = g.element_order(x);
    ElemId y = x;
    for (std::uint64_t m = 2; m < k; ++m) {
      y = g.mul(y, x);
      if (std::gcd(m, k) == 1 && cc.class_of[y] != cc.class_of[x]) return false;
    }
  }
  return true;
}

bool rationality_normalizer_criterion(const FiniteGroup& g) {
  for (const auto& cls : g.conjugacy_classes().classes) {
    const ElemId x = cls.front();
    if (normalizer_centralizer_index(g, x) != euler_phi(g.element_order(x))) return false;
  }
  return true;
}

bool is_cut(const FiniteGroup& g) {
  const auto& cc = g.conjugacy_classes();
  for (const auto& cls : cc.classes) {
    const ElemId x = cls.front();
    const std::uint64_t k = g.element_order(x);
    const auto own = cc.class_of[x], inv = cc.class_of[g.inverse(x)];
    ElemId y = x;
    for (std::uint64_t m = 2; m < k; ++m) {
      y = g.mul(y, x);
      if (std::gcd(m, k) == 1 && cc.class_of[y] != own && cc.class_of[y] != inv) return false;
    }
  }
  return true;
}

RationalityReport rationality_report(const FiniteGroup& g) {
  const auto& cc = g.conjugacy_classes();
  RationalityReport report;
  std::vector<bool> covered(cc.classes.size(), false);
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    if (covered[c]) continue;
    const ElemId x = cc.classes[c].front();
    CyclicSubgroupRecord rec;
    rec.representative = x;
    rec.order = g.element_order(x);
    rec.phi = euler_phi(rec.order);
    const auto own = cc.class_of[x], inv = cc.class_of[g.inverse(x)];
    std::set<std::uint32_t> gen_classes;
    ElemId y = 0;
    for (std::uint64_t m = 1; m <= rec.order; ++m) {
      y = g.mul(y, x);
      if (std::gcd(m, rec.order) != 1) continue;
      const auto cls = cc.class_of[y];
      gen_classes.insert(cls);
      covered[cls] = true;
      if (cls != own && cls != inv) ++rec.non_cut_generators;
    }
    rec.generator_classes = gen_classes.size();
    rec.normalizer_index = normalizer_centralizer_index(g, x);
    report.records.push_back(rec);
  }
  report.rational = std::all_of(report.records.begin(), report.records.end(),
                                [](const auto& r) { return r.generator_classes == 1; });
  report.cut = std::all_of(report.records.begin(), report.records.end(),
                           [](const auto& r) { return r.non_cut_generators == 0; });
  report.normalizer_criterion = std::all_of(report.records.begin(), report.records.end(),
                                            [](const auto& r) { return r.normalizer_index == r.phi; });
  return report;
}

std::string RationalityReport::to_text(const FiniteGroup& g) const {
  std::ostringstream os;
  os << "group: " << g.name() << "\n";
  os << "order: " << g.order() << "\n";
  os << "cyclic subgroup classes: " << records.size() << "\n";
  os << "  order  phi  generator-classes  non-cut  [N:C]  representative\n";
  for (const auto& r : records) {
    os << "  " << r.order << "  " << r.phi << "  " << r.generator_classes << "  " << r.non_cut_generators << "  "
       << r.normalizer_index << "  " << g.element(r.representative).to_string() << "\n";
  }
  os << "rational: " << (rational ? "yes" : "no") << "\n";
  os << "normalizer criterion: " << (normalizer_criterion ? "yes" : "no") << "\n";
  os << "cut: " << (cut ? "yes" : "no") << "\n";
  return os.str();
}

PrimeGraph gk_graph(const FiniteGroup& g) {
  const auto primes = prime_divisors(g.order());
  std::set<std::uint64_t> orders(g.element_orders().begin(), g.element_orders().end());
  std::vector<std::pair<unsigned, unsigned>> edges;
  // An element whose order is divisible by pq has a power of order pq.
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::uint64_t pq = static_cast<std::uint64_t>(primes[i]) * primes[j];
      if (std::any_of(orders.begin(), orders.end(), [&](std::uint64_t o) { return o % pq == 0; }))
        edges.emplace_back(primes[i], primes[j]);
    }
  return PrimeGraph(primes, std::move(edges));
}

Classification classify_rational_solvable(const FiniteGroup& g) {
  Classification c;
  c.graph = gk_graph(g);
  c.nontrivial = g.order() > 1;
  c.solvable = is_solvable(g);
  c.rational = is_rational(g);
  c.figure = admissible_graph_index(c.graph);
  if (!c.nontrivial)
    c.reason = "trivial group";
  else if (!c.solvable)
    c.reason = "not solvable";
  else if (!c.rational)
    c.reason = "not rational";
  else if (c.figure == 0)
    c.reason = "graph is not one of the six admissible graphs";
  c.matches = c.reason.empty();
  return c;
}

std::optional<ElemId> element_of_order(const FiniteGroup& g, std::uint64_t n) {
  const auto orders = g.element_orders();
  for (ElemId x = 0; x < g.order(); ++x)
    if (orders[x] == n) return x;
  return std::nullopt;
}

CorollaryVerdict check_corollary(const FiniteGroup& g) {
  CorollaryVerdict v;
  if (g.order() % 15 != 0)
    v.precondition_failure = "15 does not divide the group order";
  else if (!is_solvable(g))
    v.precondition_failure = "not solvable";
  else if (!is_rational(g))
    v.precondition_failure = "not rational";
  v.preconditions_met = v.precondition_failure.empty();
  if (!v.preconditions_met) return v;
  v.order6 = element_of_order(g, 6);
  v.order10 = element_of_order(g, 10);
  v.order15 = element_of_order(g, 15);
  v.holds = v.order6 && v.order10 && v.order15;
  return v;
}

SylowShapeCheck cut_sylow_implication(const FiniteGroup& g, unsigned p, unsigned q) {
  SylowShapeCheck out;
  if (p == q || g.order() % p != 0 || g.order() % q != 0) return out;
  const Subgroup gp = sylow_subgroup(g, p);
  const bool no_pq = !gk_graph(g).has_edge(p, q);
  out.applicable = no_pq && gp.is_normal() && is_cut(g);
  if (!out.applicable) return out;

  const Subgroup gq = sylow_subgroup(g, q);
  const std::uint64_t m = gq.order();
  bool cyclic = false;
  std::size_t involutions = 0;
  for (ElemId x : gq.elements()) {
    if (g.element_order(x) == m) cyclic = true;
    if (g.element_order(x) == 2) ++involutions;
  }
  const bool quaternion = m == 8 && involutions == 1 && !cyclic && !is_abelian(gq);
  if (quaternion) {
    out.sylow_q_shape = "Q8";
  } else if (cyclic) {
    out.sylow_q_shape = "C" + std::to_string(m);
  } else {
    out.sylow_q_shape = "non-cyclic of order " + std::to_string(m);
  }
  out.holds = quaternion || (cyclic && (4 % m == 0 || q % m == 0));
  return out;
}

bool sylow5_normal_elementary_abelian(const FiniteGroup& g) {
  const Subgroup p5 = sylow_subgroup(g, 5);
  if (p5.order() == 1) return true;
  if (!p5.is_normal() || !is_abelian(p5)) return false;
  for (ElemId x : p5.elements())
    if (x != 0 && g.element_order(x) != 5) return false;
  return true;
}

}  // namespace ratgk
