#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratgk/element.hpp"

namespace ratgk {

inline constexpr std::size_t kDefaultOrderCap = 50'000;

/// Failures of group construction and queries.
class GroupError : public std::runtime_error {
 public:
  enum class Kind { CapExceeded, InconsistentGenerators, NotInvertible, NotMember, NotSubgroup, NotNormal, InvalidAction, Unknown };

  GroupError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Backend of a realized group: elements are the ids 0..order()-1 and the
/// identity is id 0. Implementations are immutable once constructed.
class Realization {
 public:
  virtual ~Realization() = default;
  virtual std::size_t order() const = 0;
  virtual ElemId multiply(ElemId a, ElemId b) const = 0;
  virtual GroupElement element(ElemId id) const = 0;
  virtual std::optional<ElemId> locate(const GroupElement& g) const = 0;
};

struct ConjugacyClasses {
  /// Classes ordered by their least member; members sorted ascending.
  std::vector<std::vector<ElemId>> classes;
  /// class_of[g] indexes `classes`.
  std::vector<std::uint32_t> class_of;
};

/// A fully enumerated finite group. Copies share the realization and the
/// lazily computed caches; every query is const and safe to call
/// concurrently.
class FiniteGroup {
 public:
  FiniteGroup(std::shared_ptr<const Realization> impl, std::vector<ElemId> generators, std::string name);

  std::size_t order() const { return order_; }
  ElemId identity() const { return 0; }
  std::span<const ElemId> generators() const { return generators_; }
  const std::string& name() const { return name_; }

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inverse(ElemId g) const;
  /// g^k for any integer k.
  ElemId power(ElemId g, long long k) const;
  /// x^g = g^-1 x g.
  ElemId conjugate(ElemId x, ElemId g) const { return mul(mul(inverse(g), x), g); }
  /// [a, b] = a^-1 b^-1 a b.
  ElemId commutator(ElemId a, ElemId b) const { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }
  std::uint64_t element_order(ElemId g) const;
  std::span<const std::uint64_t> element_orders() const;

  GroupElement element(ElemId g) const;
  std::optional<ElemId> find(const GroupElement& g) const { return impl_->locate(g); }
  /// Throws GroupError(NotMember).
  ElemId id_of(const GroupElement& g) const;
  std::string encoding(ElemId g) const { return element(g).encoding(); }

  const ConjugacyClasses& conjugacy_classes() const;

  bool shares_realization(const FiniteGroup& other) const { return impl_ == other.impl_; }
  const Realization& realization() const { return *impl_; }

  FiniteGroup renamed(std::string name) const;

 private:
  struct Cache;

  std::shared_ptr<const Realization> impl_;
  std::vector<ElemId> generators_;
  std::string name_;
  std::size_t order_;
  std::shared_ptr<Cache> cache_;
};

/// Element set of the subgroup generated by `generators`, in breadth-first
/// discovery order starting from the identity.
std::vector<ElemId> closure(const FiniteGroup& g, std::span<const ElemId> generators);

/// A subgroup of a realized group, stored as a sorted id set.
class Subgroup {
 public:
  static Subgroup generated_by(const FiniteGroup& parent, std::span<const ElemId> generators);
  /// Validates closure; throws GroupError(NotSubgroup) otherwise.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<ElemId> elements);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return parent_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const ElemId> elements() const { return elements_; }
  std::span<const ElemId> generators() const { return generators_; }
  bool contains(ElemId g) const { return g < member_.size() && member_[g]; }
  /// Normal in the parent group.
  bool is_normal() const;
  std::size_t index() const { return parent_.order() / elements_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  Subgroup(FiniteGroup parent, std::vector<ElemId> sorted, std::vector<ElemId> generators);

  FiniteGroup parent_;
  std::vector<ElemId> elements_;
  std::vector<ElemId> generators_;
  std::vector<bool> member_;
};

/// Incremental subgroup closure used by normal closures and subgroup
/// enumeration.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const FiniteGroup& g);
  /// Adds a generator; returns false when it was already a member.
  bool add(ElemId x);
  bool contains(ElemId x) const { return member_[x]; }
  const std::vector<ElemId>& elements() const { return elements_; }
  const std::vector<ElemId>& generators() const { return generators_; }
  Subgroup build() const;

 private:
  const FiniteGroup* group_;
  std::vector<ElemId> elements_;
  std::vector<ElemId> generators_;
  std::vector<bool> member_;
};

}  // namespace ratgk
