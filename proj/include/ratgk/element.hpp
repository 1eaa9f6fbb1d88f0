#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ratgk/fp.hpp"

namespace ratgk {

/// Index of an element inside one realized group. Identity is always 0.
using ElemId = std::uint32_t;

/// How two concrete elements combine. LeftToRight means "apply the left
/// factor first": for permutations (g*h)(x) = h(g(x)); for matrices it is
/// the ordinary product, matching the right action on row vectors.
enum class MultiplicationRule { LeftToRight, RightToLeft };

/// Permutation of {0, ..., n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

class GroupElement;

/// Element s*v of a semidirect product V x| S: acting part s, vector part v.
struct SemidirectPair {
  std::shared_ptr<const GroupElement> acting;
  FpVector vector;
};

/// Element of a direct product.
struct ProductPair {
  std::shared_ptr<const GroupElement> left;
  std::shared_ptr<const GroupElement> right;
};

/// Element of a group known only through its multiplication (quotients).
struct TableIndex {
  ElemId id = 0;
};

/// Concrete group element: a tagged value with an injective encoding.
class GroupElement {
 public:
  using Payload = std::variant<Permutation, FpMatrix, SemidirectPair, ProductPair, TableIndex>;

  GroupElement() = default;
  GroupElement(Permutation p) : payload_(std::move(p)) {}
  GroupElement(FpMatrix m) : payload_(std::move(m)) {}
  GroupElement(SemidirectPair p) : payload_(std::move(p)) {}
  GroupElement(ProductPair p) : payload_(std::move(p)) {}
  GroupElement(TableIndex t) : payload_(t) {}

  const Payload& payload() const { return payload_; }
  template <class T>
  bool holds() const { return std::holds_alternative<T>(payload_); }
  template <class T>
  const T& as() const { return std::get<T>(payload_); }

  /// Canonical encoding; equal encodings iff equal elements.
  std::string encoding() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.encoding() == b.encoding(); }

 private:
  Payload payload_;
};

/// Product of two permutations or two matrices under `rule`.
GroupElement multiply(const GroupElement& a, const GroupElement& b, MultiplicationRule rule);
/// Identity of the same shape as `like` (permutations and matrices only).
GroupElement identity_like(const GroupElement& like);

}  // namespace ratgk
