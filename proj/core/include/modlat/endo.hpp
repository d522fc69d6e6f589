#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlat/lattice.hpp"

namespace modlat {

/// Hom(M, N) as a list of maps.
///
/// Every map is determined by its values on `generators`; maps are sorted by
/// that value vector, lexicographically.
struct HomSet {
  ModulePtr source;
  ModulePtr target;
  std::vector<Index> generators;
  std::vector<ModuleHom> maps;

  std::size_t size() const { return maps.size(); }
  std::vector<Index> key(const ModuleHom& f) const;
  /// Position of `f` in `maps`; throws InvalidInput if absent.
  std::size_t index_of(const ModuleHom& f) const;
  std::size_t zero_index() const;
};

/// Throws InvalidInput on ring or side mismatch, CapExceeded past
/// `caps().homs` maps.
HomSet hom_set(const ModulePtr& m, const ModulePtr& n);

/// End(M) on the carrier of hom_set(M, M). Product s·t applies s first, so
/// M is a right End(M)-module and End(_R R) ≅ R.
struct Endomorphisms {
  HomSet homs;
  RingPtr ring;
};

Endomorphisms endomorphisms(const ModulePtr& m);
inline RingPtr endomorphism_ring(const ModulePtr& m) { return endomorphisms(m).ring; }

/// Every nonzero element is a unit and 0 ≠ 1.
bool is_division_ring(const FiniteRing& r);

struct SelfProjectivity {
  bool holds = true;
  std::optional<Submodule> kernel;   ///< N with Hom(M,M) → Hom(M,M/N) not onto
  std::optional<ModuleHom> unlifted; ///< least map M → M/N outside the image
};

SelfProjectivity is_self_projective(const ModulePtr& m);

/// Outcome of an equality (or bound) check between two computed dimensions.
struct DualityReport {
  bool applicable = true;
  std::string skip_reason;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds = false;
};

/// lhs = hdim(M), rhs = hdim(End(M)). Skipped when M is not self-projective
/// or a cap is hit. Also requires hdim of both regular End(M)-modules to agree.
DualityReport verify_takeuchi(const ModulePtr& m);

/// lhs = hdim(M), rhs = hdim(Hom(R, M)) over End(R), P = R the regular module
/// of M's side; holds iff lhs ≤ rhs.
DualityReport verify_projective_generator_bound(const ModulePtr& m);

struct Injectivity {
  bool holds = true;
  std::optional<Submodule> ideal;     ///< one-sided ideal I of Q's side
  std::optional<ModuleHom> unextended;///< least map I → Q with no q giving x ↦ x·q
};

/// Baer criterion over the ideals of the regular module on Q's side.
Injectivity is_injective(const ModulePtr& q);

struct Cogeneration {
  bool holds = true;
  std::optional<Submodule> missing;  ///< maximal ideal K with R/K not embedding in Q
};

/// Every simple module R/K, K a maximal ideal, embeds in Q.
Cogeneration is_cogenerator(const ModulePtr& q);

/// Hom(M, Q) as a right End(Q)-module, h·t = t∘h.
struct BimoduleView {
  HomSet carrier;
  Endomorphisms endo;
  ModulePtr module;
};

BimoduleView hom_bimodule(const ModulePtr& m, const ModulePtr& q);

/// M as a right End(M)-module, m·s = s(m). Element indexing is M's.
ModulePtr module_over_endomorphisms(const ModulePtr& m, const Endomorphisms& e);

/// lhs = hdim(M), rhs = udim(Hom(M, Q) over End(Q)). Throws InvalidInput
/// unless Q is an injective cogenerator.
DualityReport verify_page(const ModulePtr& m, const ModulePtr& q);

/// lhs = hdim(R as a module over End(R)), rhs = length(R/J), for the left
/// regular module R. Skipped unless R is quasi-Frobenius.
DualityReport verify_qf_generator(const RingPtr& r);

struct GoodModuleReport {
  std::size_t checked = 0;
  std::optional<ModuleHom> counterexample;
};

/// f(Rad M) = Rad(f(M)) for every f in Hom(M, N). Rad(f(M)) is the meet of
/// the lower covers of f(M) in `target`.
GoodModuleReport verify_good_module(const SubmoduleLattice& source, const SubmoduleLattice& target);

struct QuotientSweep {
  std::size_t checked = 0;
  std::optional<Submodule> counterexample;  ///< N ⊆ M^k with M^k/N not semilocal
  std::size_t power = 0;
};

/// Every quotient of M^k, 1 ≤ k ≤ max_power, is semilocal.
QuotientSweep verify_quotients_semilocal(const ModulePtr& m, std::size_t max_power = 2);

}  // namespace modlat
