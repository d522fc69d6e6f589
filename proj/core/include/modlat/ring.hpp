#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "modlat/element_set.hpp"

namespace modlat {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Finite associative unital ring given by full addition and multiplication tables.
///
/// Instances are immutable. Construct through the factory functions below; the
/// raw-table factory validates every axiom, the structured ones build tables
/// that satisfy the axioms by construction.
class FiniteRing {
 public:
  std::size_t order() const { return order_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  const std::string& name() const { return name_; }

  Index add(Index a, Index b) const { return add_[a * order_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * order_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }

  const std::vector<Index>& add_table() const { return add_; }
  const std::vector<Index>& mul_table() const { return mul_; }

  /// Two-sided invertibility.
  bool is_unit(Index a) const;
  ElementSet units() const;

  /// Table-level equality; the display name is ignored.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order_ == b.order_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ &&
           a.mul_ == b.mul_;
  }

  /// Assemble a ring from tables without checking axioms. Additive inverses
  /// are derived from `add`; throws InvalidInput if some element has none.
  static RingPtr from_tables_unchecked(std::string name, std::size_t order, std::vector<Index> add,
                                       std::vector<Index> mul, Index zero, Index one);

 private:
  FiniteRing() = default;

  std::size_t order_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  Index zero_ = 0;
  Index one_ = 0;
  std::string name_;
};

/// Z/n with residues 0..n-1 as indices.
RingPtr cyclic_ring(std::size_t n);

/// size×size matrices over `base`; index is row-major mixed radix, entry (0,0)
/// most significant.
RingPtr matrix_ring(const RingPtr& base, std::size_t size);

/// Upper-triangular size×size matrices over `base`; entries (i,j) with i<=j in
/// row-major order, first entry most significant.
RingPtr triangular_ring(const RingPtr& base, std::size_t size);

/// Direct product; mixed radix with the first factor most significant.
/// The empty product is the zero ring.
RingPtr product_ring(std::span<const RingPtr> factors);

/// Ring from raw square tables. Validates all axioms and throws InvalidInput
/// naming the first failing tuple.
RingPtr ring_from_tables(std::vector<std::vector<Index>> add, std::vector<std::vector<Index>> mul,
                         Index one, std::string name = "tables");

/// Same carrier, mul(a,b) := R.mul(b,a).
RingPtr opposite_ring(const RingPtr& r);

/// Declarative ring description, as read from JSON.
struct RingSpec {
  struct Cyclic { std::size_t n; };
  struct Matrix { std::shared_ptr<RingSpec> base; std::size_t size; };
  struct Triangular { std::shared_ptr<RingSpec> base; std::size_t size; };
  struct Product { std::vector<RingSpec> factors; };
  struct Tables {
    std::vector<std::vector<Index>> add;
    std::vector<std::vector<Index>> mul;
    Index one;
  };
  std::variant<Cyclic, Matrix, Triangular, Product, Tables> kind;

  static RingSpec cyclic(std::size_t n) { return {Cyclic{n}}; }
  static RingSpec matrix(RingSpec base, std::size_t size) {
    return {Matrix{std::make_shared<RingSpec>(std::move(base)), size}};
  }
  static RingSpec triangular(RingSpec base, std::size_t size) {
    return {Triangular{std::make_shared<RingSpec>(std::move(base)), size}};
  }
  static RingSpec product(std::vector<RingSpec> factors) { return {Product{std::move(factors)}}; }
};

RingPtr ring_from_spec(const RingSpec& spec);

/// Short display label such as "Z/12" or "T2(Z/2)".
std::string describe(const RingSpec& spec);

}  // namespace modlat
