// Randomized invariant checks. Every generator is seeded from the test's
// fixed seed so failures reproduce; each assertion reports the case.

#include <gtest/gtest.h>

#include <random>

#include "modlat/dimension.hpp"
#include "modlat/endo.hpp"
#include "modlat/error.hpp"
#include "modlat/harness/json_io.hpp"
#include "modlat/harness/module_spec.hpp"
#include "modlat/lattice.hpp"
#include "modlat/ringclass.hpp"
#include "modlat/supplements.hpp"
#include "modlat/validate.hpp"
#include "support.hpp"

namespace modlat {
namespace {

constexpr std::uint32_t kSeed = 20240611;
constexpr int kCases = 60;

struct Case {
  RingPtr ring;
  ModulePtr module;
};

Case random_case(std::mt19937& rng, std::size_t max_order = 64) {
  static const auto rings = test::sample_rings();
  const auto& r = rings[rng() % rings.size()];
  return {r, test::random_module(r, rng, max_order)};
}

std::string label(const Case& c) { return c.module->name() + " over " + c.ring->name(); }

bool closed(const FiniteModule& m, const ElementSet& s) {
  if (!s.contains(m.zero())) return false;
  bool ok = true;
  s.for_each([&](Index a) {
    s.for_each([&](Index b) { ok = ok && s.contains(m.add(a, b)); });
    for (Index r = 0; r < m.ring()->order(); ++r) ok = ok && s.contains(m.act(r, a));
  });
  return ok;
}

TEST(Property, LatticeMatchesSubsetEnumeration) {
  std::mt19937 rng(kSeed);
  for (int i = 0; i < kCases; ++i) {
    const Case c = random_case(rng, 12);
    const auto lat = SubmoduleLattice::build(c.module);
    std::size_t count = 0;
    const std::size_t n = c.module->order();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      ElementSet s(n);
      for (Index e = 0; e < n; ++e)
        if (bits >> e & 1) s.insert(e);
      if (!closed(*c.module, s)) continue;
      ++count;
      EXPECT_TRUE(lat.find(Submodule(s)).has_value()) << label(c);
    }
    EXPECT_EQ(count, lat.size()) << label(c);
  }
}

TEST(Property, MeetIsIntersectionJoinIsSum) {
  std::mt19937 rng(kSeed + 1);
  for (int i = 0; i < kCases; ++i) {
    const Case c = random_case(rng);
    const auto lat = SubmoduleLattice::build(c.module);
    for (int k = 0; k < 20; ++k) {
      const std::size_t a = rng() % lat.size(), b = rng() % lat.size();
      EXPECT_EQ(lat.node(lat.meet(a, b)), lat.node(a) & lat.node(b)) << label(c);
      EXPECT_EQ(lat.node(lat.join(a, b)), submodule_sum(*c.module, lat.node(a), lat.node(b))) << label(c);
      EXPECT_EQ(lat.sums_to_whole(a, b), lat.join(a, b) == lat.top()) << label(c);
      EXPECT_TRUE(validate(*c.module, lat.node(a)).empty()) << label(c);
    }
    EXPECT_FALSE(modularity_counterexample(lat, 2000).has_value()) << label(c);
  }
}

TEST(Property, SmallAndEssentialMatchRadicalAndSocle) {
  std::mt19937 rng(kSeed + 2);
  for (int i = 0; i < kCases; ++i) {
    const Case c = random_case(rng);
    const auto lat = SubmoduleLattice::build(c.module);
    const Submodule rad = radical(lat), soc = socle(lat);
    for (const auto& n : lat.nodes()) {
      EXPECT_EQ(is_small(lat, n), n.is_subset_of(rad)) << label(c);
      EXPECT_EQ(is_essential(lat, n), soc.is_subset_of(n)) << label(c);
    }
  }
}

TEST(Property, DimensionsAreConsistent) {
  std::mt19937 rng(kSeed + 3);
  for (int i = 0; i < kCases; ++i) {
    const Case c = random_case(rng);
    const auto lat = SubmoduleLattice::build(c.module);
    const std::size_t h = hollow_dimension(lat).value;
    const std::size_t u = uniform_dimension(lat).value;
    const std::size_t len = length(lat);
    EXPECT_LE(h, len) << label(c);
    EXPECT_LE(u, len) << label(c);
    EXPECT_EQ(u, max_independent_family(lat)) << label(c);
    EXPECT_EQ(h == len, is_semisimple(lat)) << label(c);
    EXPECT_FALSE(verify_d_axioms(lat).has_value()) << label(c);
    for (const auto& n : test::random_nodes(lat, rng, 4)) {
      const auto q = quotient_module(c.module, n).module;
      const std::size_t hq = hollow_dimension(SubmoduleLattice::build(q)).value;
      EXPECT_LE(hq, h) << label(c);
      if (is_small(lat, n)) {
        EXPECT_EQ(hq, h) << label(c);
      }
    }
  }
}

TEST(Property, DirectSumsAreAdditive) {
  std::mt19937 rng(kSeed + 4);
  for (int i = 0; i < kCases; ++i) {
    const Case a = random_case(rng, 16);
    const auto b = test::random_module(a.ring, rng, 16);
    if (a.module->order() * b->order() > 128) continue;
    const auto s = test::sum_of({a.module, b});
    const auto la = SubmoduleLattice::build(a.module), lb = SubmoduleLattice::build(b),
               ls = SubmoduleLattice::build(s);
    EXPECT_EQ(hollow_dimension(ls).value, hollow_dimension(la).value + hollow_dimension(lb).value) << label(a);
    EXPECT_EQ(uniform_dimension(ls).value, uniform_dimension(la).value + uniform_dimension(lb).value) << label(a);
    EXPECT_EQ(length(ls), length(la) + length(lb)) << label(a);
  }
}

TEST(Property, WeakSupplementsCertify) {
  std::mt19937 rng(kSeed + 5);
  for (int i = 0; i < kCases; ++i) {
    const Case c = random_case(rng);
    const auto lat = SubmoduleLattice::build(c.module);
    for (const auto& n : test::random_nodes(lat, rng, 6)) {
      const auto w = find_weak_supplement(lat, n);
      ASSERT_TRUE(w.has_value()) << label(c);
      std::string why;
      EXPECT_TRUE(check_weak_supplement(lat, *w, &why)) << label(c) << ": " << why;
      const auto l = find_supplement(lat, n);
      ASSERT_TRUE(l.has_value());
      for (const auto& smaller : lat.nodes()) {
        if (smaller != *l && smaller.is_subset_of(*l)) {
          EXPECT_FALSE(sums_to_whole(*c.module, n, smaller)) << label(c);
        }
      }
    }
  }
}

TEST(Property, CoindependenceModesAgree) {
  std::mt19937 rng(kSeed + 6);
  for (int i = 0; i < kCases; ++i) {
    const Case c = random_case(rng, 32);
    const auto lat = SubmoduleLattice::build(c.module);
    for (int k = 0; k < 10; ++k) {
      const auto family = test::random_nodes(lat, rng, 1 + rng() % 3);
      const bool mono = is_coindependent(lat, family).coindependent;
      EXPECT_EQ(mono, is_coindependent(lat, family, CoindependenceMode::full).coindependent) << label(c);
      if (mono) {
        EXPECT_LE(family.size(), hollow_dimension(lat).value) << label(c);
      }
    }
  }
}

TEST(Property, HomSetsAreClosedUnderSumAndCompose) {
  std::mt19937 rng(kSeed + 7);
  for (int i = 0; i < kCases; ++i) {
    const Case a = random_case(rng, 16);
    const auto b = test::random_module(a.ring, rng, 16);
    const HomSet hs = hom_set(a.module, b);
    ASSERT_GE(hs.size(), 1u);
    const auto& f = hs.maps[rng() % hs.size()];
    const auto& g = hs.maps[rng() % hs.size()];
    EXPECT_TRUE(validate(f).empty()) << label(a);
    ModuleHom sum = f;
    for (Index x = 0; x < a.module->order(); ++x) sum.images[x] = b->add(f(x), g(x));
    EXPECT_NO_THROW(hs.index_of(sum)) << label(a);

    const HomSet ends = hom_set(b, b);
    const auto& e = ends.maps[rng() % ends.size()];
    const HomSet chain = hom_set(a.module, b);
    EXPECT_NO_THROW(chain.index_of(compose(e, f))) << label(a);
  }
}

TEST(Property, EndomorphismRingsAreRings) {
  std::mt19937 rng(kSeed + 8);
  for (int i = 0; i < kCases / 2; ++i) {
    const Case c = random_case(rng, 16);
    const auto e = endomorphisms(c.module);
    EXPECT_TRUE(validate(*e.ring).empty()) << label(c);
    const auto over = module_over_endomorphisms(c.module, e);
    EXPECT_TRUE(validate(*over).empty()) << label(c);
  }
  for (const auto& r : test::sample_rings()) {
    if (r->order() <= 27) {
      EXPECT_EQ(endomorphism_ring(test::left(r))->order(), r->order()) << r->name();
    }
  }
}

TEST(Property, OppositeSwapsSides) {
  for (const auto& r : test::sample_rings()) {
    const auto op = opposite_ring(r);
    const auto pl = classify(r), po = classify(op);
    EXPECT_EQ(pl.hdim_right, po.hdim_left) << r->name();
    EXPECT_EQ(SubmoduleLattice::build(test::right(r)).size(), SubmoduleLattice::build(test::left(op)).size())
        << r->name();
    EXPECT_EQ(pl.jacobson, po.jacobson) << r->name();
  }
}

TEST(Property, TableCorruptionIsDetected) {
  std::mt19937 rng(kSeed + 9);
  const auto rings = test::sample_rings();
  for (int i = 0; i < kCases; ++i) {
    const auto& r = rings[rng() % rings.size()];
    const std::size_t n = r->order();
    if (n < 2) continue;
    std::vector<std::vector<Index>> add(n), mul(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        add[a].push_back(r->add(a, b));
        mul[a].push_back(r->mul(a, b));
      }
    auto& cell = mul[rng() % n][rng() % n];
    cell = static_cast<Index>((cell + 1 + rng() % (n - 1)) % n);
    std::vector<Index> fa, fm;
    for (std::size_t a = 0; a < n; ++a) {
      fa.insert(fa.end(), add[a].begin(), add[a].end());
      fm.insert(fm.end(), mul[a].begin(), mul[a].end());
    }
    const bool valid = validate(*FiniteRing::from_tables_unchecked("x", n, fa, fm, r->zero(), r->one())).empty();
    // one changed product breaks distributivity or the identity
    EXPECT_FALSE(valid) << r->name();
    EXPECT_THROW(ring_from_tables(add, mul, r->one()), InvalidInput) << r->name();
  }
}

TEST(Property, ModuleSpecsRoundTripThroughJson) {
  std::mt19937 rng(kSeed + 10);
  using harness::ModuleSpec;
  for (int i = 0; i < kCases; ++i) {
    const auto r = cyclic_ring(2 + rng() % 11);
    std::vector<ModuleSpec> parts;
    const int k = 1 + rng() % 2;
    for (int p = 0; p < k; ++p)
      parts.push_back(ModuleSpec::quotient(ModuleSpec::regular(Side::left), {static_cast<Index>(rng() % r->order())}));
    const ModuleSpec spec = parts.size() == 1 ? parts[0] : ModuleSpec::direct_sum(parts);
    const auto j = harness::to_json(spec);
    const ModuleSpec back = harness::module_spec_from_json(j);
    EXPECT_EQ(harness::to_json(back), j);
    const auto a = harness::module_from_spec(r, spec), b = harness::module_from_spec(r, back);
    EXPECT_EQ(a->add_table(), b->add_table());
    EXPECT_EQ(a->act_table(), b->act_table());
  }
}

}  // namespace
}  // namespace modlat
