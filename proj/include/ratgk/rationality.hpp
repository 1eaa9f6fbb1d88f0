#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratgk/group.hpp"

namespace ratgk {

/// Gruenberg-Kegel graph: primes dividing |G|, with an edge p-q when G has
/// an element of order pq.
struct PrimeGraph {
  std::vector<unsigned> vertices;                    // ascending
  std::vector<std::pair<unsigned, unsigned>> edges;  // p < q, ascending

  PrimeGraph() = default;
  /// Normalizes order; throws std::invalid_argument for a loop, a non-prime
  /// vertex or an edge endpoint that is not a vertex.
  PrimeGraph(std::vector<unsigned> vertices, std::vector<std::pair<unsigned, unsigned>> edges);

  bool has_edge(unsigned p, unsigned q) const;
  std::string to_dot() const;
  /// Compact form such as "{2,3,5 | 2-3,2-5}".
  std::string to_string() const;

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;
};

/// The six graphs admitted for non-trivial solvable rational groups, in
/// order: {2}; {2,3}; 2-3; {2,5}; 2-5; triangle on 2, 3, 5.
const std::vector<PrimeGraph>& admissible_graphs();
/// 1-based position in admissible_graphs(), or 0.
int admissible_graph_index(const PrimeGraph& g);

struct CyclicSubgroupRecord {
  ElemId representative = 0;
  std::uint64_t order = 1;
  std::uint64_t phi = 1;
  /// Distinct conjugacy classes met by the generators of <g>.
  std::size_t generator_classes = 1;
  /// Generators conjugate to neither g nor g^-1.
  std::size_t non_cut_generators = 0;
  /// [N_G(<g>) : C_G(g)].
  std::uint64_t normalizer_index = 1;
};

/// One record per conjugacy class of cyclic subgroups.
struct RationalityReport {
  std::vector<CyclicSubgroupRecord> records;
  bool rational = false;
  bool cut = false;
  bool normalizer_criterion = false;

  std::string to_text(const FiniteGroup& g) const;
};

/// True iff every g^m with gcd(m, |g|) = 1 is conjugate to g.
bool is_rational(const FiniteGroup& g);
/// True iff [N_G(<g>) : C_G(g)] = phi(|g|) for every g.
bool rationality_normalizer_criterion(const FiniteGroup& g);
/// True iff every generator of <g> is conjugate to g or g^-1.
bool is_cut(const FiniteGroup& g);
RationalityReport rationality_report(const FiniteGroup& g);

PrimeGraph gk_graph(const FiniteGroup& g);

struct Classification {
  PrimeGraph graph;
  bool nontrivial = false;
  bool solvable = false;
  bool rational = false;
  /// 1..6 when the graph is one of admissible_graphs(), else 0.
  int figure = 0;
  bool matches = false;
  /// Empty when `matches`; otherwise the first failed condition.
  std::string reason;
};

Classification classify_rational_solvable(const FiniteGroup& g);

struct CorollaryVerdict {
  bool preconditions_met = false;
  std::string precondition_failure;
  std::optional<ElemId> order6, order10, order15;
  bool holds = false;
};

/// For solvable rational G with 15 | |G|: looks for elements of orders 6,
/// 10 and 15 (least ids).
CorollaryVerdict check_corollary(const FiniteGroup& g);

/// Least element of exact order n.
std::optional<ElemId> element_of_order(const FiniteGroup& g, std::uint64_t n);

struct SylowShapeCheck {
  bool applicable = false;  // cut, G_p normal, no element of order pq
  bool holds = true;        // G_q is Q8 or cyclic of order dividing 4 or q
  std::string sylow_q_shape;
};

/// Sylow structure in cut groups: when G is cut, G_p is normal and there is
/// no element of order pq, G_q is Q8 or cyclic of order dividing 4 or q.
SylowShapeCheck cut_sylow_implication(const FiniteGroup& g, unsigned p, unsigned q);

/// Sylow 5-subgroup is normal and elementary abelian (vacuous when 5 does
/// not divide |G|).
bool sylow5_normal_elementary_abelian(const FiniteGroup& g);

}  // namespace ratgk
