#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modlat/lattice.hpp"

namespace modlat {

/// Intersection of all maximal submodules; M itself when there are none.
Submodule radical(const SubmoduleLattice& lat);

/// Sum of all minimal nonzero submodules; {0} when there are none.
Submodule socle(const SubmoduleLattice& lat);

/// Every submodule has a direct complement. Also compares against
/// socle(M) = M and throws InternalInconsistency if the routes disagree.
bool is_semisimple(const SubmoduleLattice& lat);

/// Length of a maximal chain from node `from` up to node `to` (from ⊆ to).
/// `take_last` walks through the last upper cover at each step instead of the
/// first; by Jordan–Hölder both give the same count.
std::size_t chain_length(const SubmoduleLattice& lat, std::size_t from, std::size_t to, bool take_last = false);

/// Composition length of M; checked on two differently ordered chains.
std::size_t length(const SubmoduleLattice& lat);

struct UniformDimension {
  std::size_t value = 0;
  std::vector<Submodule> witness;  ///< independent simple submodules summing to the socle
};

/// length(socle(M)), with an independent family of uniform (simple) submodules
/// whose sum is essential.
UniformDimension uniform_dimension(const SubmoduleLattice& lat);

/// Size of a largest independent family of nonzero submodules, by exhaustive
/// search over minimal submodules. Oracle for `uniform_dimension`.
std::size_t max_independent_family(const SubmoduleLattice& lat);

struct HollowDecomposition {
  std::vector<Submodule> family;      ///< K_1..K_n, coindependent
  std::vector<bool> quotient_hollow;  ///< M/K_i hollow
  Submodule intersection;             ///< K_1 ∩ … ∩ K_n, small in M
};

struct HollowDimension {
  std::size_t value = 0;
  HollowDecomposition decomposition;
};

/// (A) Greedy coindependent family of maximal submodules with hollow
/// quotients and small intersection. Verifies the decomposition.
HollowDecomposition hollow_decomposition(const SubmoduleLattice& lat);

enum class CoindependentSearchSpace {
  maximal,  ///< maximal submodules only (any coindependent family enlarges to one)
  all,      ///< every proper submodule; exponential, for audits on small lattices
};

/// (B) Largest coindependent family, exact branch-and-bound.
std::size_t max_coindependent_family(const SubmoduleLattice& lat,
                                     CoindependentSearchSpace space = CoindependentSearchSpace::maximal);

/// (C) length(M / Rad M).
std::size_t radical_quotient_length(const SubmoduleLattice& lat);

/// Runs (A), (B) and (C); throws InternalInconsistency unless all agree.
HollowDimension hollow_dimension(const SubmoduleLattice& lat);

/// M ≠ 0 and every proper submodule small; cross-checked against hdim = 1.
bool is_hollow(const SubmoduleLattice& lat);

/// M ≠ 0 and every nonzero submodule essential; cross-checked against udim = 1.
bool is_uniform(const SubmoduleLattice& lat);

/// d(N) = hdim(M/N), through the quotient module and `hollow_dimension`.
std::size_t camps_dicks_d(const SubmoduleLattice& lat, const Submodule& n);

/// d for every node at once, via the interval [N, M] ≅ L(M/N): the radical of
/// M/N corresponds to the meet of the maximal submodules above N.
std::vector<std::size_t> d_table(const SubmoduleLattice& lat);

struct DAxiomFailure {
  std::size_t n = 0;  ///< node index
  std::size_t l = 0;  ///< node index (== n for axiom (i))
  std::string axiom;
};

/// Checks d(N) = 0 ⇒ N = M, and d(N ∩ L) = d(N) + d(L) whenever N + L = M,
/// over all node pairs. The d-table is cross-checked against `camps_dicks_d`
/// on every node when the lattice has at most `cross_check_limit` nodes.
std::optional<DAxiomFailure> verify_d_axioms(const SubmoduleLattice& lat, std::size_t cross_check_limit = 256);

struct DimensionProfile {
  Submodule radical;
  Submodule socle;
  std::size_t length = 0;
  std::size_t udim = 0;
  std::size_t hdim = 0;
  bool semisimple = false;
  bool hollow = false;
  bool uniform = false;
};

DimensionProfile dimension_profile(const SubmoduleLattice& lat);

}  // namespace modlat
