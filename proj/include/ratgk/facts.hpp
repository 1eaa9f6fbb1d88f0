#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratgk/fp.hpp"
#include "ratgk/group.hpp"
#include "ratgk/module.hpp"
#include "ratgk/rationality.hpp"

namespace ratgk {

/// The five explicit minimal actions H/K on W.
///   A  Q8 on GF(5)^2
///   B  C3:C4 on GF(5)^2
///   C  SL(2,3) on GF(5)^2
///   D  <alpha, beta, gamma> on GF(5)^4
///   E  <alpha, beta, gamma^2> on GF(5)^4
enum class CaseTag { A, B, C, D, E };

char case_letter(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view s);
const std::vector<CaseTag>& all_case_tags();

/// Literal GL(4,5) data of cases D and E.
namespace literal {
FpMatrix alpha();
FpMatrix beta();
FpMatrix gamma();
FpMatrix mu_u();
FpMatrix mu_v();
/// Expected value of mu_u^-1 mu_v.
FpMatrix mu_quotient();
FpVector u();
FpVector v();
}  // namespace literal

struct CaseAction {
  CaseTag tag = CaseTag::A;
  ModuleAction action;
  /// Distinguished vectors: u, v (B, D, E); u_i, u_i^-1, u_j, u_j^-1, u_k, u_k^-1 (C).
  std::map<std::string, FpVector> vectors;
  /// Distinguished elements of action.group(): i, j, k (A, C); a, z (C); a, b (B);
  /// alpha, beta, gamma or gamma^2 (D, E).
  std::map<std::string, ElemId> elements;
};

/// Builds the action for `tag`.
///   A  first pair (lexicographic over matrix entries) of determinant-1
///      order-4 matrices of GL(2,5) generating a group of order 8 with one
///      involution.
///   B  C3:C4 with a -> [[0,1],[4,4]] and b -> [[2,0],[3,3]] in the basis
///      {u, v = u^a}.
///   C  case A extended by the first order-3 matrix normalizing it.
///   D, E  the literal alpha, beta, gamma (gamma^2 for E).
/// Throws GroupError(Unknown) if a search comes up empty.
CaseAction build_case_action(CaseTag tag);

struct Fact {
  std::string id;
  std::string location;
  bool verdict = false;
  std::string evidence;
};

struct FactReport {
  std::string title;
  std::vector<Fact> facts;

  void add(std::string id, std::string location, bool verdict, std::string evidence);
  void append(const FactReport& other);
  bool all_passed() const;
  const Fact* find(std::string_view id) const;
  std::string to_text() const;
  std::string to_json() const;
};

FactReport verify_case_de_facts();
FactReport verify_case_b_facts();
FactReport verify_sl23_facts();
FactReport verify_prop_premises();
/// The twisted power identities, checked exhaustively for every a of order
/// 3, every x and n <= 8 in SL(2,3) and in the case D group.
FactReport verify_twisted_power_facts();
/// All of the above, in that order.
FactReport verify_paper();

struct WitnessOutcome {
  /// 1-based position among admissible_graphs().
  int figure = 0;
  std::string candidate;
  std::optional<FiniteGroup> group;
  Classification classification;
  /// Set when the shipped candidate failed and the search supplied the group.
  bool from_search = false;
  std::string search_note;
};

/// Candidates C2; S3; S3 x S3; F5^2:Q8; (F5^2:Q8) x C2; (F5^2:Q8) x S3 for
/// the six figures, with search fallback.
std::vector<WitnessOutcome> build_witnesses(std::size_t order_cap = kDefaultOrderCap);
FactReport witness_suite(std::size_t order_cap = kDefaultOrderCap);

}  // namespace ratgk
