#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace modlat {

/// Size limits applied by constructors and exhaustive enumerations.
struct Caps {
  std::size_t elements = 4096;    ///< ring / module order
  std::size_t lattice = 100000;   ///< submodule lattice nodes
  std::size_t homs = 65536;       ///< members of one Hom-set

  /// Parse "elements=N,lattice=N,homs=N" (any subset, any order) on top of `base`.
  /// Throws InvalidInput on unknown keys or malformed numbers.
  static Caps parse(std::string_view text, Caps base);
  static Caps parse(std::string_view text);

  std::string to_string() const;
};

/// Process-wide caps. Initialized from the MODLAT_CAPS environment variable on
/// first use; `set_caps` overrides them (tests, CLI).
const Caps& caps();
void set_caps(const Caps& c);

}  // namespace modlat
