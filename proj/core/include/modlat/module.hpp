#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "modlat/element_set.hpp"
#include "modlat/ring.hpp"

namespace modlat {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Finite unital module over a FiniteRing.
///
/// `act(r, m)` is r·m for left modules and m·r for right modules; the table is
/// indexed (ring element, module element) in both cases.
class FiniteModule {
 public:
  const RingPtr& ring() const { return ring_; }
  Side side() const { return side_; }
  std::size_t order() const { return order_; }
  Index zero() const { return zero_; }
  const std::string& name() const { return name_; }

  Index add(Index a, Index b) const { return add_[a * order_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index act(Index r, Index m) const { return act_[r * order_ + m]; }

  const std::vector<Index>& add_table() const { return add_; }
  const std::vector<Index>& act_table() const { return act_; }

  /// Assemble a module from tables without checking axioms (see `validate`).
  /// Checks only the element cap and table shapes.
  static ModulePtr from_tables_unchecked(RingPtr ring, Side side, std::string name, std::size_t order,
                                         std::vector<Index> add, Index zero, std::vector<Index> act);

  /// Same tables, new display name.
  ModulePtr renamed(std::string name) const;

 private:
  FiniteModule() = default;

  RingPtr ring_;
  Side side_ = Side::left;
  std::size_t order_ = 0;
  std::vector<Index> add_;
  std::vector<Index> neg_;
  std::vector<Index> act_;
  Index zero_ = 0;
  std::string name_;
};

/// Set of module elements; a submodule when it passes `validate(M, N)`.
class Submodule {
 public:
  Submodule() = default;
  explicit Submodule(ElementSet members) : members_(std::move(members)) {}

  static Submodule zero(const FiniteModule& m) {
    ElementSet s(m.order());
    s.insert(m.zero());
    return Submodule(std::move(s));
  }
  static Submodule whole(const FiniteModule& m) { return Submodule(ElementSet::full(m.order())); }

  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index i) const { return members_.contains(i); }
  bool is_subset_of(const Submodule& o) const { return members_.is_subset_of(o.members_); }

  /// Intersection (the lattice meet).
  Submodule operator&(const Submodule& o) const { return Submodule(members_ & o.members_); }

  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend std::strong_ordering operator<=>(const Submodule& a, const Submodule& b) {
    return a.members_ <=> b.members_;
  }

 private:
  ElementSet members_;
};

/// Map between module carriers; a homomorphism when it passes `validate`.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Index> images;

  Index operator()(Index m) const { return images[m]; }
  Submodule image() const;
  Submodule kernel() const;
  Submodule image_of(const Submodule& n) const;
  Submodule preimage(const Submodule& k) const;
  bool is_surjective() const { return image().size() == target->order(); }
  bool is_injective() const { return kernel().size() == 1; }

  static ModuleHom identity(const ModulePtr& m);
  static ModuleHom zero(const ModulePtr& source, const ModulePtr& target);
};

/// g∘f: apply `f` first.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

ModulePtr regular_module(const RingPtr& r, Side side);
ModulePtr zero_module(const RingPtr& r, Side side);

struct DirectSum {
  ModulePtr module;
  std::vector<ModuleHom> embeddings;   ///< part i -> sum
  std::vector<ModuleHom> projections;  ///< sum -> part i
};

/// External direct sum; mixed radix with the first part most significant.
/// All parts must share `ring` and `side`. The empty sum is the zero module.
DirectSum direct_sum(const RingPtr& ring, Side side, std::span<const ModulePtr> parts);
DirectSum direct_sum(std::span<const ModulePtr> parts);

struct Quotient {
  ModulePtr module;
  ModuleHom projection;
  /// Least member of each coset, in increasing order; element i of the
  /// quotient is the coset labelled labels[i].
  std::vector<Index> labels;
};

/// M/N. Throws InvalidInput if N is not a submodule of M.
Quotient quotient_module(const ModulePtr& m, const Submodule& n);

struct SubmoduleView {
  ModulePtr module;
  ModuleHom inclusion;
};

/// N as a module in its own right; element i is the i-th smallest member of N.
SubmoduleView submodule_module(const ModulePtr& m, const Submodule& n);

}  // namespace modlat
