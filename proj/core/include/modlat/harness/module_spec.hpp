#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modlat/module.hpp"

namespace modlat::harness {

/// Declarative module description over a ring given separately.
struct ModuleSpec {
  struct Regular { Side side; };
  struct QuotientOf {
    std::shared_ptr<ModuleSpec> of;
    std::vector<Index> by;  ///< generators of the submodule factored out
  };
  struct DirectSumOf {
    std::vector<ModuleSpec> parts;
    std::optional<Side> side;  ///< needed only for the empty sum
  };
  std::variant<Regular, QuotientOf, DirectSumOf> kind;

  static ModuleSpec regular(Side side) { return {Regular{side}}; }
  static ModuleSpec quotient(ModuleSpec of, std::vector<Index> by) {
    return {QuotientOf{std::make_shared<ModuleSpec>(std::move(of)), std::move(by)}};
  }
  static ModuleSpec direct_sum(std::vector<ModuleSpec> parts) { return {DirectSumOf{std::move(parts), std::nullopt}}; }
};

/// Throws InvalidInput on generators outside the carrier or mixed sides.
ModulePtr module_from_spec(const RingPtr& ring, const ModuleSpec& spec);

Side side_of(const ModuleSpec& spec);

/// Display label: "R", "R_R" (right regular), "R/(4)", "R/(2)+R".
std::string describe(const ModuleSpec& spec);

}  // namespace modlat::harness
