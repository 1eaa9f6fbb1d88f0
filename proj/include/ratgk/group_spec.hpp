#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratgk/element.hpp"
#include "ratgk/facts.hpp"
#include "ratgk/group.hpp"
#include "ratgk/module.hpp"

namespace ratgk {

/// Current group-spec document version (the "format" field).
inline constexpr int kSpecFormat = 1;

/// Group-spec documents are JSON objects:
///
///   {"format": 1, "kind": "named", "name": "S3"}
///   {"format": 1, "kind": "permutation", "degree": 3, "generators": [[1,0,2], [1,2,0]]}
///   {"format": 1, "kind": "matrix", "prime": 5, "generators": [[[3,3],[4,1]], ...]}
///   {"format": 1, "kind": "direct-product", "factors": [<spec>, <spec>, ...]}
///   {"format": 1, "kind": "semidirect", "acting": <matrix-valued spec>}
///   {"format": 1, "kind": "case", "tag": "d"}
///
/// Nested specs omit "format". Permutation and matrix specs accept
/// "rule": "left-to-right" (default) or "right-to-left". Semidirect specs
/// may add "module": {"prime": p, "dim": n} as a shape check.
enum class SpecKind { Named, Permutation, Matrix, DirectProduct, Semidirect, Case };

struct GroupSpec {
  SpecKind kind = SpecKind::Named;
  std::string name;
  CaseTag tag = CaseTag::A;
  MultiplicationRule rule = MultiplicationRule::LeftToRight;
  std::vector<Permutation> permutations;
  int prime = 0;
  std::vector<FpMatrix> matrices;
  /// Factors of a direct product, or the single acting group of a semidirect product.
  std::vector<GroupSpec> parts;
  std::optional<std::pair<int, std::size_t>> module_shape;
};

/// Parse failure with a JSON-pointer location such as "/factors/1/generators/0".
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string pointer, const std::string& message)
      : std::runtime_error((pointer.empty() ? "/" : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

GroupSpec parse_group_spec(std::string_view document);
GroupSpec load_group_spec(const std::filesystem::path& path);

struct BuiltGroup {
  FiniteGroup group;
  /// Present when the group comes with a module: matrix groups act
  /// naturally, case specs carry their action.
  std::optional<ModuleAction> action;
};

/// Throws GroupError on construction failures (cap, shapes, invalid action).
BuiltGroup build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// RATGK_ORDER_CAP from the environment, else kDefaultOrderCap.
std::size_t default_order_cap();

}  // namespace ratgk
