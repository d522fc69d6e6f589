#include <gtest/gtest.h>

#include "modlat/lattice.hpp"
#include "modlat/ringclass.hpp"
#include "support.hpp"

namespace modlat {
namespace {

using test::set_of;

TEST(Jacobson, Examples) {
  const auto z12 = cyclic_ring(12);
  EXPECT_EQ(test::members(jacobson_radical(z12)), (std::vector<Index>{0, 6}));
  EXPECT_EQ(jacobson_radical(matrix_ring(cyclic_ring(2), 2)).size(), 1u);
  // T2 entries (a, b, c) at index 4a + 2b + c; J is the strictly upper part
  EXPECT_EQ(test::members(jacobson_radical(triangular_ring(cyclic_ring(2), 2))), (std::vector<Index>{0, 2}));
  EXPECT_EQ(jacobson_radical(cyclic_ring(1)).size(), 1u);
}

TEST(Classify, Examples) {
  const auto p12 = classify(cyclic_ring(12));
  EXPECT_EQ(p12.hdim_left, 2u);
  EXPECT_EQ(p12.hdim_right, 2u);
  EXPECT_EQ(p12.semisimple_quotient_length, 2u);
  EXPECT_FALSE(p12.local);
  EXPECT_EQ(p12.units.size(), 4u);

  const auto p8 = classify(cyclic_ring(8));
  EXPECT_EQ(p8.hdim_left, 1u);
  EXPECT_TRUE(p8.local);

  const auto t = classify(triangular_ring(cyclic_ring(2), 2));
  EXPECT_EQ(t.hdim_left, 2u);
  EXPECT_EQ(t.hdim_right, 2u);
  EXPECT_EQ(t.jacobson.size(), 2u);

  const auto z = classify(cyclic_ring(1));
  EXPECT_EQ(z.hdim_left, 0u);
  EXPECT_FALSE(z.local);
}

TEST(LemmaRaRb, SinglePair) {
  const auto r = cyclic_ring(12);
  const auto m = test::left(r);
  const Index a = 4, x = 1;
  const Index b = r->sub(r->one(), r->mul(x, a));
  EXPECT_EQ(b, 9u);
  EXPECT_EQ(cyclic_submodule(*m, a), set_of(*m, {0, 4, 8}));
  EXPECT_EQ(cyclic_submodule(*m, b), set_of(*m, {0, 3, 6, 9}));
  EXPECT_EQ(cyclic_submodule(*m, a) & cyclic_submodule(*m, b), cyclic_submodule(*m, r->mul(a, b)));
}

TEST(LemmaRaRb, SweepCyclicTwelve) {
  const auto rep = verify_lemma_ra_rb(cyclic_ring(12));
  EXPECT_EQ(rep.pairs_checked, 144u);
  EXPECT_FALSE(rep.counterexample.has_value());
}

TEST(LemmaRaRb, SweepNoncommutative) {
  for (const auto& r : {triangular_ring(cyclic_ring(2), 2), matrix_ring(cyclic_ring(2), 2)}) {
    const auto rep = verify_lemma_ra_rb(r);
    EXPECT_EQ(rep.pairs_checked, r->order() * r->order());
    EXPECT_FALSE(rep.counterexample.has_value()) << r->name();
  }
}

TEST(ElementD, CyclicTwelveValues) {
  const auto rep = element_d_function(cyclic_ring(12));
  EXPECT_EQ(rep.d[11], 0u);
  EXPECT_EQ(rep.d[2], 1u);
  EXPECT_EQ(rep.d[0], 2u);
  EXPECT_EQ(rep.d[10], rep.d[2] + rep.d[11]);
  EXPECT_EQ(rep.pairs_checked, 144u);
  EXPECT_FALSE(rep.failure.has_value());
}

TEST(ElementD, OneHasZeroEverywhere) {
  for (const auto& r : test::sample_rings()) {
    const auto rep = element_d_function(r);
    EXPECT_EQ(rep.d[r->one()], 0u) << r->name();
    EXPECT_FALSE(rep.failure.has_value()) << r->name();
  }
}

TEST(Semiregular, Examples) {
  const auto m2 = is_semiregular_by_weak_supplements(matrix_ring(cyclic_ring(2), 2));
  EXPECT_TRUE(m2.vnr_quotient);
  EXPECT_TRUE(m2.left_principal_weak_supplements);

  const auto r = cyclic_ring(4);
  const auto z4 = is_semiregular_by_weak_supplements(r);
  EXPECT_TRUE(z4.vnr_quotient);
  EXPECT_TRUE(z4.right_principal_weak_supplements);
  bool regular_at_two = false;
  for (Index y = 0; y < 4; ++y) regular_at_two |= r->mul(r->mul(2, y), 2) == 2;
  EXPECT_FALSE(regular_at_two);
}

}  // namespace
}  // namespace modlat
