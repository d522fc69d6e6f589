#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "modlat/lattice.hpp"
#include "modlat/module.hpp"
#include "modlat/ring.hpp"

namespace modlat::test {

inline ModulePtr left(const RingPtr& r) { return regular_module(r, Side::left); }
inline ModulePtr right(const RingPtr& r) { return regular_module(r, Side::right); }

/// R/Rg over R's left side.
inline ModulePtr cyclic_quotient(const RingPtr& r, Index g) {
  const auto m = left(r);
  return quotient_module(m, cyclic_submodule(*m, g)).module;
}

/// Z/k over cyclic(n), k | n, with residues as indices.
inline ModulePtr zmod(std::size_t n, std::size_t k) {
  return cyclic_quotient(cyclic_ring(n), static_cast<Index>(k % n));
}

inline ModulePtr sum_of(std::initializer_list<ModulePtr> parts) {
  const std::vector<ModulePtr> v(parts);
  return direct_sum(v).module;
}

inline Submodule set_of(const FiniteModule& m, std::initializer_list<Index> members) {
  ElementSet s(m.order());
  for (Index i : members) s.insert(i);
  return Submodule(std::move(s));
}

/// Multiples of g in Z/n, i.e. gZ/n as a set.
inline Submodule multiples(const FiniteModule& m, Index g) { return cyclic_submodule(m, g); }

inline std::vector<Index> members(const Submodule& n) { return n.members().members(); }

/// Small rings used by the property suites, all within a few dozen elements.
inline std::vector<RingPtr> sample_rings() {
  const auto z2 = cyclic_ring(2);
  const auto z3 = cyclic_ring(3);
  std::vector<RingPtr> out;
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16})
    out.push_back(cyclic_ring(n));
  out.push_back(triangular_ring(z2, 2));
  out.push_back(triangular_ring(z3, 2));
  out.push_back(matrix_ring(z2, 2));
  const std::vector<RingPtr> f{z2, z3};
  out.push_back(product_ring(f));
  const std::vector<RingPtr> g{z2, z2};
  out.push_back(product_ring(g));
  return out;
}

/// Random module over `r` on the left side: a regular module, a cyclic
/// quotient, or a sum of two such pieces, of order at most `max_order`.
inline ModulePtr random_module(const RingPtr& r, std::mt19937& rng, std::size_t max_order = 64) {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(r->order() - 1));
  auto piece = [&]() -> ModulePtr {
    if (rng() % 3 == 0 && r->order() <= max_order) return left(r);
    for (int tries = 0; tries < 8; ++tries) {
      ModulePtr q = cyclic_quotient(r, pick(rng));
      if (q->order() <= max_order) return q;
    }
    return zero_module(r, Side::left);
  };
  ModulePtr a = piece();
  if (rng() % 2 == 0) {
    ModulePtr b = piece();
    if (a->order() * b->order() <= max_order) return sum_of({a, b});
  }
  return a;
}

/// Uniformly chosen node subset of a lattice, as submodules.
inline std::vector<Submodule> random_nodes(const SubmoduleLattice& lat, std::mt19937& rng, std::size_t count) {
  std::uniform_int_distribution<std::size_t> pick(0, lat.size() - 1);
  std::vector<Submodule> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(lat.node(pick(rng)));
  return out;
}

}  // namespace modlat::test
