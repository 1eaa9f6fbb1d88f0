#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratgk/construct.hpp"
#include "ratgk/facts.hpp"
#include "ratgk/module.hpp"

namespace corpus {

struct Entry {
  ratgk::FiniteGroup group;
  /// Set for V x| S entries; `action` is the module S acts on.
  std::optional<ratgk::ModuleAction> action;
};

/// Groups of order at most 400.
inline std::vector<Entry> groups() {
  using namespace ratgk;
  std::vector<Entry> out;
  for (const char* n : {"C2", "C3", "C4", "C5", "C6", "S3", "D8", "Q8", "D10", "D12", "A4", "C3:C4", "SL(2,3)", "GL(2,3)",
                        "S4", "A5", "C7"})
    out.push_back({named_group(n), std::nullopt});
  const auto s3 = named_group("S3"), c2 = named_group("C2"), c3 = named_group("C3"), q8 = named_group("Q8");
  out.push_back({direct_product(s3, s3), std::nullopt});
  out.push_back({direct_product(s3, c2), std::nullopt});
  out.push_back({direct_product(q8, c2), std::nullopt});
  out.push_back({direct_product(c3, c3), std::nullopt});
  out.push_back({direct_product(named_group("A4"), c2), std::nullopt});

  auto affine = [&](const ModuleAction& act) { out.push_back({semidirect_product(act), act}); };
  const FiniteGroup gl15 = general_linear_group(5, 1);
  affine(ModuleAction::natural(gl15));  // F5:C4, order 20
  const CaseAction qa = build_case_action(CaseTag::A);
  affine(qa.action);                                  // F5^2:Q8, order 200
  affine(build_case_action(CaseTag::B).action);       // F5^2:(C3:C4), order 300
  const auto c4 = generate_group({FpMatrix(5, {{2, 0}, {0, 2}})}, {}, "<2I>");
  affine(ModuleAction::natural(c4));  // F5^2:C4 scalar, order 100
  out.push_back({direct_product(semidirect_product(qa.action), c2), std::nullopt});  // order 400
  out.push_back({direct_product(semidirect_product(ModuleAction::natural(gl15)), c2), std::nullopt});  // order 40
  return out;
}

}  // namespace corpus
