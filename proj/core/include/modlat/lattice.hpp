#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlat/module.hpp"

namespace modlat {

/// R·m (left) or m·R (right): the least submodule containing m.
Submodule cyclic_submodule(const FiniteModule& m, Index x);

/// A + B, computed as the union of the cosets A + b for b in B.
Submodule submodule_sum(const FiniteModule& m, const Submodule& a, const Submodule& b);

/// Least submodule containing `gens`; {0} for no generators.
Submodule generated_submodule(const FiniteModule& m, std::span<const Index> gens);

/// A + B = M, decided from |A + B| = |A||B| / |A ∩ B|.
inline bool sums_to_whole(const FiniteModule& m, const Submodule& a, const Submodule& b) {
  return a.size() * b.size() == m.order() * a.members().intersection_size(b.members());
}

/// Complete lattice of submodules of a finite module.
///
/// Nodes are sorted in canonical order (cardinality, then member list), so
/// node 0 is {0} and the last node is M. Immutable after construction.
class SubmoduleLattice {
 public:
  /// Seeds with every cyclic submodule and closes under joins with cyclic
  /// submodules. Throws CapExceeded past `caps().lattice` nodes.
  static SubmoduleLattice build(ModulePtr m);

  const ModulePtr& module() const { return module_; }
  std::size_t size() const { return nodes_.size(); }
  const Submodule& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Submodule>& nodes() const { return nodes_; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  std::optional<std::size_t> find(const Submodule& n) const;
  /// Like `find`, but throws InvalidInput when `n` is not a submodule.
  std::size_t index_of(const Submodule& n) const;

  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  bool sums_to_whole(std::size_t a, std::size_t b) const {
    return modlat::sums_to_whole(*module_, nodes_[a], nodes_[b]);
  }

  /// Covering relation of the Hasse diagram, each list in canonical order.
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }

  /// Maximal proper submodules (lower covers of M).
  const std::vector<std::size_t>& maximal() const { return lower_[top()]; }
  /// Minimal nonzero submodules (upper covers of {0}).
  const std::vector<std::size_t>& minimal() const { return upper_[bottom()]; }

  /// Nodes contained in node `i`, i.e. the lattice of node(i) as a module.
  std::vector<std::size_t> below(std::size_t i) const;

 private:
  ModulePtr module_;
  std::vector<Submodule> nodes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
};

inline SubmoduleLattice all_submodules(ModulePtr m) { return SubmoduleLattice::build(std::move(m)); }

/// Some L ≠ M with N + L = M, if one exists (N is then not small).
std::optional<std::size_t> supplement_witness(const SubmoduleLattice& lat, const Submodule& n);

/// N ≪ M: N + L = M forces L = M, quantified over every node.
bool is_small(const SubmoduleLattice& lat, const Submodule& n);

/// N ⊴ M: N meets every nonzero node nontrivially.
bool is_essential(const SubmoduleLattice& lat, const Submodule& n);

/// Least-canonical node maximal among those meeting N trivially.
Submodule complement_of(const SubmoduleLattice& lat, const Submodule& n);

enum class CoindependenceMode {
  monotone,  ///< J = all other members only; smaller J only enlarge the intersection
  full,      ///< every subset J of the other members, as in the definition
};

struct CoindependenceCheck {
  bool coindependent = true;
  std::string reason;                 ///< empty when coindependent
  std::optional<std::size_t> member;  ///< failing λ
  std::vector<std::size_t> subset;    ///< failing J (family positions)
};

/// Every member proper and K_λ + ⋂_{j∈J} K_j = M for all λ and J ⊆ family∖{λ}.
CoindependenceCheck is_coindependent(const SubmoduleLattice& lat, std::span<const Submodule> family,
                                     CoindependenceMode mode = CoindependenceMode::monotone);

struct GeneratedMember {
  Submodule submodule;
  std::vector<Index> generators;
};

/// Shrinks a coindependent family to explicitly generated members L_i ⊆ N_i
/// that remain coindependent: choose X_i ⊆ N_i and Y_i ⊆ ⋂_{j≠i} N_j with
/// X_i + Y_i = M greedily, then L_i = X_i + Σ_{j≠i} Y_j.
/// Throws InvalidInput if the input is not coindependent.
std::vector<GeneratedMember> refine_coindependent_fg(const SubmoduleLattice& lat, std::span<const Submodule> family);

/// A + (B ∩ C) = (A + B) ∩ C for A ⊆ C, over up to `max_triples` triples taken
/// in canonical order. Returns the first failing (A, B, C) node triple.
std::optional<std::vector<std::size_t>> modularity_counterexample(const SubmoduleLattice& lat,
                                                                   std::size_t max_triples);

/// Hasse diagram in Graphviz DOT. Nodes are labelled with their cardinality
/// and least nonzero member; edges are covering pairs, drawn upwards.
void write_dot(std::ostream& os, const SubmoduleLattice& lat, const std::string& graph_name = "lattice");

}  // namespace modlat
