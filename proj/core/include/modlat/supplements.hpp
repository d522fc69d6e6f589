#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlat/lattice.hpp"

namespace modlat {

/// X ≪ A for submodules X ⊆ A of M, quantified over the nodes below A.
bool is_small_in(const SubmoduleLattice& lat, const Submodule& x, const Submodule& ambient);

/// N + L = M and N ∩ L ≪ M.
struct WeakSupplementWitness {
  Submodule target;        ///< N
  Submodule supplement;    ///< L
  Submodule intersection;  ///< N ∩ L
};

/// Re-checks a witness from scratch: both members are submodules, the sum is
/// recomputed by closure, the intersection elementwise, smallness over the
/// whole lattice. On failure `why` (if given) receives the reason.
bool check_weak_supplement(const SubmoduleLattice& lat, const WeakSupplementWitness& w, std::string* why = nullptr);

/// Least-canonical L minimal with N + L = M. The equivalent N ∩ L ≪ L is
/// asserted. Always present in a finite module.
std::optional<Submodule> find_supplement(const SubmoduleLattice& lat, const Submodule& n);

/// Least-canonical L with N + L = M and N ∩ L ≪ M.
std::optional<WeakSupplementWitness> find_weak_supplement(const SubmoduleLattice& lat, const Submodule& n);

struct WeakSupplementMap {
  bool holds = true;
  std::vector<std::optional<WeakSupplementWitness>> witnesses;  ///< per lattice node
};

struct SupplementMap {
  bool holds = true;
  std::vector<std::optional<Submodule>> supplements;  ///< per lattice node
};

WeakSupplementMap is_weakly_supplemented(const SubmoduleLattice& lat);
SupplementMap is_supplemented(const SubmoduleLattice& lat);

/// M / Rad M is semisimple.
bool is_semilocal_module(const SubmoduleLattice& lat);

struct SemisimpleSplit {
  Submodule m1;  ///< semisimple, a complement of N
  Submodule m2;  ///< N ⊴ M2, M2/N semisimple
};

/// M = M1 ⊕ M2 with M1 = complement_of(N) and M2 ⊇ N the least-canonical
/// node complementing (M1 + N)/N in M/N. Requires M/N semisimple
/// (InvalidInput otherwise); all three properties are verified.
SemisimpleSplit semisimple_quotient_decomposition(const SubmoduleLattice& lat, const Submodule& n);

/// Given f: M → N onto, K ⊆ N, and a weak supplement L of f⁻¹(K) in M,
/// returns (K, f(L)) verified in N.
WeakSupplementWitness push_forward_weak_supplement(const ModuleHom& f, const SubmoduleLattice& source,
                                                   const SubmoduleLattice& target, const Submodule& k,
                                                   const Submodule& l);

/// Given a small epimorphism f: M → N, L ⊆ M, and a weak supplement X of
/// f(L) in N, returns (L, f⁻¹(X)) verified in M. Throws InvalidInput if f is
/// not onto or its kernel is not small.
WeakSupplementWitness pull_back_weak_supplement(const ModuleHom& f, const SubmoduleLattice& source,
                                                const SubmoduleLattice& target, const Submodule& l,
                                                const Submodule& x);

/// With M1 weakly supplemented and N a weak supplement of M1 + K in M: takes
/// a weak supplement L of (K + N) ∩ M1 inside M1 and returns (K, N + L).
WeakSupplementWitness weak_supplement_from_summands(const SubmoduleLattice& lat, const Submodule& m1,
                                                    const Submodule& k, const Submodule& n);

/// For M = M1 + M2, builds a weak supplement of N by applying
/// `weak_supplement_from_summands` twice, starting from the trivial weak
/// supplement 0 of M1 + (M2 + N) = M.
WeakSupplementWitness weak_supplement_via_sum(const SubmoduleLattice& lat, const Submodule& m1, const Submodule& m2,
                                              const Submodule& n);

/// Small generating set: repeatedly adds the element with the largest
/// closure gain, ties by least index.
std::vector<Index> greedy_generators(const FiniteModule& m);

struct FreeCover {
  std::size_t k = 0;
  std::vector<Index> generators;
  ModulePtr free;                      ///< R^k
  ModuleHom map;                       ///< R^k → M, e_i ↦ generators[i]
  WeakSupplementWitness supplement;    ///< L, weak supplement of ker(map) in R^k
  ModuleHom cover;                     ///< R^k → M ⊕ R^k/L
  Submodule cover_kernel;              ///< ker(map) ∩ L
  bool cover_surjective = false;
  bool cover_kernel_small = false;
};

/// Free module R^k mapping onto M, and the certificate that R^k → M ⊕ R^k/L
/// is a small epimorphism.
FreeCover free_cover_decomposition(const ModulePtr& m);

}  // namespace modlat
