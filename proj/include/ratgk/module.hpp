#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ratgk/fp.hpp"
#include "ratgk/group.hpp"
#include "ratgk/subgroups.hpp"

namespace ratgk {

/// A finite group acting on GF(p)^n on the right through explicit matrices.
/// The representation is a verified homomorphism.
class ModuleAction {
 public:
  /// Extends generator images to the whole group breadth-first and checks
  /// rep(g s) = rep(g) rep(s) for every element g and generator s, which
  /// proves the homomorphism law. Throws GroupError(InvalidAction).
  static ModuleAction from_generator_images(const FiniteGroup& group, const std::vector<FpMatrix>& images);
  /// The natural action of a matrix group.
  static ModuleAction natural(const FiniteGroup& matrix_group);
  /// Uses one matrix per element id; verified like from_generator_images.
  static ModuleAction from_matrices(const FiniteGroup& group, std::vector<FpMatrix> rep);

  const FiniteGroup& group() const { return group_; }
  int prime() const { return p_; }
  std::size_t dim() const { return n_; }
  const FpMatrix& rep(ElemId g) const { return rep_[g]; }
  std::uint64_t module_size() const;

  FpVector act(const FpVector& v, ElemId g) const { return v * rep_[g]; }
  /// C_S(W): elements acting trivially.
  Subgroup kernel() const;
  /// Same module with every matrix conjugated by `change` (x -> P^-1 x P).
  ModuleAction change_basis(const FpMatrix& change) const;
  /// Direct sum with another action of the same group.
  ModuleAction direct_sum(const ModuleAction& other) const;

 private:
  ModuleAction(FiniteGroup group, int p, std::size_t n, std::vector<FpMatrix> rep);
  void verify_homomorphism() const;

  FiniteGroup group_;
  int p_;
  std::size_t n_;
  std::vector<FpMatrix> rep_;
};

/// Orbit of `v`, sorted by vector index. Throws on dimension mismatch.
std::vector<FpVector> orbit(const ModuleAction& act, const FpVector& v);
Subgroup stabilizer(const ModuleAction& act, const FpVector& v);
/// All orbits on nonzero vectors, ordered by their least vector index.
std::vector<std::vector<FpVector>> nonzero_orbits(const ModuleAction& act);

/// Right transversal of H in its parent: 1 first, every other
/// representative the least id of its coset Ht, listed by increasing id.
std::vector<ElemId> right_transversal(const Subgroup& h);

struct InducedModule {
  ModuleAction action;
  std::vector<ElemId> transversal;  // block order
  std::size_t block_dim = 0;
};

/// W^S = sum over t in T of W^t, for `inner` an action of `h.group`.
/// Block-monomial: if t g = x r with x in H and r in T, block t maps to
/// block r through inner.rep(x).
InducedModule induce_module(const ModuleAction& inner, const EmbeddedSubgroup& h);

/// Every nonzero vector spans the whole space under the group.
bool is_simple_module(const ModuleAction& act);

/// Rationality of the Brauer character, tested as charpoly(g) ==
/// charpoly(g^m) for every g and every m prime to the order of rep(g).
/// Throws std::domain_error if p divides the order of some rep(g).
bool brauer_character_is_rational(const ModuleAction& act);

struct EigenvectorWitnesses {
  bool holds = false;
  /// vector index -> least element id g with v.rep(g) = 2v.
  std::map<std::uint64_t, ElemId> witness;
  /// First vector without witness, when !holds.
  std::optional<FpVector> counterexample;
};

/// For p = 5: every v has some g with v.g = 2v. Throws std::invalid_argument
/// for other primes.
EigenvectorWitnesses eigenvector_property(const ModuleAction& act);

}  // namespace ratgk
