#include <gtest/gtest.h>

#include <cstdlib>

#include "modlat/caps.hpp"
#include "modlat/element_set.hpp"
#include "modlat/error.hpp"
#include "modlat/ring.hpp"
#include "modlat/validate.hpp"
#include "support.hpp"

namespace modlat {
namespace {

// Unital 3-dimensional F2-algebra with basis 1, x, y and x·y = 1, all other
// products of x, y zero. Bilinear and unital but (x·x)·y ≠ x·(x·y).
std::vector<std::vector<Index>> nonassociative_mul() {
  // element bits: 1 -> coefficient of 1, 2 -> x, 4 -> y
  const Index basis_product[3][3] = {{1, 2, 4}, {2, 0, 1}, {4, 0, 0}};
  std::vector<std::vector<Index>> mul(8, std::vector<Index>(8, 0));
  for (Index a = 0; a < 8; ++a)
    for (Index b = 0; b < 8; ++b)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if ((a >> i & 1) && (b >> j & 1)) mul[a][b] ^= basis_product[i][j];
  return mul;
}

std::vector<std::vector<Index>> xor_add(std::size_t n) {
  std::vector<std::vector<Index>> add(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) add[a][b] = a ^ b;
  return add;
}

TEST(ElementSet, CanonicalOrderIsCardinalityFirst) {
  ElementSet a(100), b(100), c(100);
  a.insert(0);
  a.insert(99);
  b.insert(0);
  b.insert(1);
  b.insert(2);
  c.insert(1);
  c.insert(2);
  EXPECT_LT(a, b);
  EXPECT_LT(a, c);  // {0,99} before {1,2}: least differing member 0 is in a
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(b.members(), (std::vector<Index>{0, 1, 2}));
  EXPECT_EQ((b & c).size(), 2u);
  EXPECT_EQ((a | c).size(), 4u);
  EXPECT_TRUE(c.is_subset_of(b));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(ElementSetHash{}(b & c), ElementSetHash{}(c));
}

TEST(Caps, ParseOverridesGivenKeysOnly) {
  const Caps base;
  const Caps c = Caps::parse("lattice=10, homs=7", base);
  EXPECT_EQ(c.elements, base.elements);
  EXPECT_EQ(c.lattice, 10u);
  EXPECT_EQ(c.homs, 7u);
  EXPECT_EQ(Caps::parse(c.to_string()).lattice, 10u);
  EXPECT_THROW(Caps::parse("nodes=3"), InvalidInput);
  EXPECT_THROW(Caps::parse("lattice=ten"), InvalidInput);
}

TEST(Caps, ElementCapStopsConstruction) {
  const Caps saved = caps();
  set_caps(Caps::parse("elements=10"));
  EXPECT_THROW(cyclic_ring(12), CapExceeded);
  EXPECT_NO_THROW(cyclic_ring(10));
  set_caps(saved);
}

TEST(Ring, CyclicTwelveHasFourUnits) {
  const auto r = cyclic_ring(12);
  EXPECT_EQ(r->order(), 12u);
  EXPECT_EQ(r->units().members(), (std::vector<Index>{1, 5, 7, 11}));
  EXPECT_EQ(r->mul(5, 7), 11u);
  EXPECT_EQ(r->add(7, 8), 3u);
  EXPECT_EQ(r->neg(5), 7u);
  EXPECT_TRUE(validate(*r).empty());
}

TEST(Ring, CyclicOneIsZeroRing) {
  const auto r = cyclic_ring(1);
  EXPECT_EQ(r->order(), 1u);
  EXPECT_EQ(r->zero(), r->one());
  EXPECT_TRUE(validate(*r).empty());
  EXPECT_THROW(cyclic_ring(0), InvalidInput);
}

TEST(Ring, StructuredOrders) {
  const auto z2 = cyclic_ring(2);
  const auto t2 = triangular_ring(z2, 2);
  EXPECT_EQ(t2->order(), 8u);
  EXPECT_EQ(t2->one(), 5u);  // entries (1,0,1)
  EXPECT_TRUE(validate(*t2).empty());
  const auto m2 = matrix_ring(z2, 2);
  EXPECT_EQ(m2->order(), 16u);
  EXPECT_TRUE(validate(*m2).empty());
  EXPECT_EQ(m2->units().size(), 6u);  // |GL2(F2)|
  const std::vector<RingPtr> f{z2, cyclic_ring(3)};
  const auto p = product_ring(f);
  EXPECT_EQ(p->order(), 6u);
  EXPECT_TRUE(validate(*p).empty());
  EXPECT_EQ(product_ring(std::span<const RingPtr>{})->order(), 1u);
}

TEST(Ring, OppositeOfCommutativeIsIdentical) {
  const auto r = cyclic_ring(12);
  EXPECT_TRUE(*opposite_ring(r) == *r);
}

TEST(Ring, OppositeOfTriangularDiffers) {
  const auto t = triangular_ring(cyclic_ring(2), 2);
  const auto op = opposite_ring(t);
  EXPECT_FALSE(*op == *t);
  EXPECT_TRUE(validate(*op).empty());
}

TEST(Ring, OppositeIsInvolution) {
  for (const auto& r : test::sample_rings()) EXPECT_TRUE(*opposite_ring(opposite_ring(r)) == *r) << r->name();
}

TEST(Ring, TablesAcceptCyclicSix) {
  std::vector<std::vector<Index>> add(6, std::vector<Index>(6)), mul(6, std::vector<Index>(6));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      add[a][b] = (a + b) % 6;
      mul[a][b] = (a * b) % 6;
    }
  const auto r = ring_from_tables(add, mul, 1, "z6");
  EXPECT_TRUE(*r == *cyclic_ring(6));
}

TEST(Ring, TablesRejectNonassociativeProduct) {
  const auto add = xor_add(8);
  const auto mul = nonassociative_mul();
  EXPECT_THROW(ring_from_tables(add, mul, 1), InvalidInput);

  std::vector<Index> fa, fm;
  for (Index a = 0; a < 8; ++a)
    for (Index b = 0; b < 8; ++b) {
      fa.push_back(add[a][b]);
      fm.push_back(mul[a][b]);
    }
  const auto r = FiniteRing::from_tables_unchecked("bad", 8, fa, fm, 0, 1);
  const auto v = validate(*r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].axiom, "multiplicative associativity");
  ASSERT_EQ(v[0].witness.size(), 3u);
  const Index a = v[0].witness[0], b = v[0].witness[1], c = v[0].witness[2];
  EXPECT_NE(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c)));
}

TEST(Ring, TablesRejectMalformedShapes) {
  EXPECT_THROW(ring_from_tables({}, {}, 0), InvalidInput);
  EXPECT_THROW(ring_from_tables({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 2), InvalidInput);
  EXPECT_THROW(ring_from_tables({{0, 1}, {1, 0}}, {{0, 0}, {0, 5}}, 1), InvalidInput);
  EXPECT_THROW(ring_from_tables({{0, 1}, {1, 0}}, {{0, 0}}, 1), InvalidInput);
}

TEST(Ring, SpecDescribesAndBuilds) {
  const auto spec = RingSpec::triangular(RingSpec::cyclic(3), 2);
  EXPECT_EQ(describe(spec), "T2(Z/3)");
  EXPECT_EQ(ring_from_spec(spec)->order(), 27u);
  EXPECT_EQ(describe(RingSpec::cyclic(12)), "Z/12");
}

}  // namespace
}  // namespace modlat
