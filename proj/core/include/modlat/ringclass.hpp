#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlat/module.hpp"

namespace modlat {

/// Ring-level invariants. `jacobson` lives on the ring's carrier, i.e. it is a
/// submodule of the left regular module.
struct RingProfile {
  Submodule jacobson;
  std::size_t hdim_left = 0;
  std::size_t hdim_right = 0;
  std::size_t semisimple_quotient_length = 0;  ///< length of R/J as a left module
  ElementSet units;
  bool local = false;         ///< unique maximal left ideal
  bool vnr_quotient = false;  ///< R/J von Neumann regular
};

/// Jac(R), computed as the meet of maximal left ideals, the meet of maximal
/// right ideals, and {a : 1 - ra is a unit for all r}. Throws
/// InternalInconsistency if the three disagree.
Submodule jacobson_radical(const RingPtr& r);

/// Also checks hdim(_R R) = length(R/J) = hdim(R_R).
RingProfile classify(const RingPtr& r);

struct LemmaRaRbReport {
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Index, Index>> counterexample;  ///< (r, a)
};

/// Ra ∩ Rb = Rab with b = 1 - ra, for every pair (r, a).
LemmaRaRbReport verify_lemma_ra_rb(const RingPtr& r);

struct ElementDFailure {
  Index a = 0;
  Index b = 0;
  std::string axiom;
};

struct ElementDReport {
  std::vector<std::size_t> d;  ///< d(a) = hdim(R / Ra), indexed by element
  std::size_t pairs_checked = 0;
  std::optional<ElementDFailure> failure;
};

/// d(a) = hdim(R/Ra) on the left regular module, checked against
///   d(a) = 0 ⇒ a is a unit,
///   d(a(1-ba)) = d(a) + d(1-ba),
///   1-ba not a unit ⇒ d(a(1-ba)) > d(a),
/// over all pairs (a, b).
ElementDReport element_d_function(const RingPtr& r);

struct SemiregularReport {
  bool left_principal_weak_supplements = false;   ///< every Ra has a weak supplement in _R R
  bool vnr_quotient = false;                      ///< ∀a ∃b: a - aba ∈ J
  bool right_principal_weak_supplements = false;  ///< every aR has a weak supplement in R_R
};

/// All three routes; throws InternalInconsistency if they disagree.
SemiregularReport is_semiregular_by_weak_supplements(const RingPtr& r);

}  // namespace modlat
