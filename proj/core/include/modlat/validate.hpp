#pragma once

#include <string>
#include <vector>

#include "modlat/element_set.hpp"

namespace modlat {

class FiniteRing;
class FiniteModule;
class Submodule;
struct ModuleHom;

/// One failed axiom together with the tuple that witnesses the failure.
struct Violation {
  std::string axiom;
  std::vector<Index> witness;

  std::string to_string() const;
};

// Each overload checks every invariant of its type exhaustively and reports
// the first witness per axiom. An empty result means the value is valid.

std::vector<Violation> validate(const FiniteRing& r);
std::vector<Violation> validate(const FiniteModule& m);
std::vector<Violation> validate(const FiniteModule& m, const Submodule& n);
std::vector<Violation> validate(const ModuleHom& f);

}  // namespace modlat
