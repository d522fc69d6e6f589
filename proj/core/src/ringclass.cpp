#include "modlat/ringclass.hpp"

#include <map>

#include "modlat/dimension.hpp"
#include "modlat/error.hpp"
#include "modlat/lattice.hpp"
#include "modlat/supplements.hpp"

namespace modlat {

namespace {

// Meet of the maximal one-sided ideals. An ideal I ≠ R is maximal iff
// I + (principal ideal of a) = R for every a outside I.
Submodule meet_of_maximal_ideals(const SubmoduleLattice& lat) {
  const FiniteModule& m = *lat.module();
  Submodule acc = lat.node(lat.top());
  for (std::size_t i = 0; i < lat.top(); ++i) {
    const Submodule& ideal = lat.node(i);
    bool maximal = true;
    for (Index a = 0; a < m.order() && maximal; ++a)
      if (!ideal.contains(a)) maximal = sums_to_whole(m, ideal, cyclic_submodule(m, a));
    if (maximal) acc = acc & ideal;
  }
  return acc;
}

Submodule quasi_regular_set(const FiniteRing& r) {
  ElementSet j(r.order());
  for (Index a = 0; a < r.order(); ++a) {
    bool in = true;
    for (Index x = 0; x < r.order() && in; ++x) in = r.is_unit(r.sub(r.one(), r.mul(x, a)));
    if (in) j.insert(a);
  }
  return Submodule(std::move(j));
}

bool left_invertible(const FiniteRing& r, Index a) {
  for (Index b = 0; b < r.order(); ++b)
    if (r.mul(b, a) == r.one()) return true;
  return false;
}

bool vnr_modulo(const FiniteRing& r, const Submodule& j) {
  for (Index a = 0; a < r.order(); ++a) {
    bool found = false;
    for (Index b = 0; b < r.order() && !found; ++b) found = j.contains(r.sub(a, r.mul(r.mul(a, b), a)));
    if (!found) return false;
  }
  return true;
}

}  // namespace

Submodule jacobson_radical(const RingPtr& r) {
  const auto left = SubmoduleLattice::build(regular_module(r, Side::left));
  const auto right = SubmoduleLattice::build(regular_module(r, Side::right));
  const Submodule by_left = meet_of_maximal_ideals(left);
  const Submodule by_right = meet_of_maximal_ideals(right);
  const Submodule by_units = quasi_regular_set(*r);
  if (by_left != by_right || by_right != by_units)
    throw InternalInconsistency("jacobson_radical: routes disagree on '" + r->name() + "'");
  return by_units;
}

RingProfile classify(const RingPtr& r) {
  RingProfile p;
  const auto left_mod = regular_module(r, Side::left);
  const auto left = SubmoduleLattice::build(left_mod);
  const auto right = SubmoduleLattice::build(regular_module(r, Side::right));
  p.jacobson = jacobson_radical(r);
  p.hdim_left = hollow_dimension(left).value;
  p.hdim_right = hollow_dimension(right).value;
  p.semisimple_quotient_length = length(SubmoduleLattice::build(quotient_module(left_mod, p.jacobson).module));
  if (p.hdim_left != p.semisimple_quotient_length || p.hdim_right != p.semisimple_quotient_length)
    throw InternalInconsistency("classify: hdim(_R R), length(R/J), hdim(R_R) differ on '" + r->name() + "'");
  p.units = r->units();
  for (Index a = 0; a < r->order(); ++a)
    if (left_invertible(*r, a) != p.units.contains(a))
      throw InternalInconsistency("classify: one-sided inverse that is not two-sided in '" + r->name() + "'");
  p.local = left.maximal().size() == 1;
  p.vnr_quotient = vnr_modulo(*r, p.jacobson);
  return p;
}

LemmaRaRbReport verify_lemma_ra_rb(const RingPtr& r) {
  const auto m = regular_module(r, Side::left);
  LemmaRaRbReport out;
  for (Index x = 0; x < r->order(); ++x)
    for (Index a = 0; a < r->order(); ++a) {
      ++out.pairs_checked;
      const Index b = r->sub(r->one(), r->mul(x, a));
      const Submodule lhs = cyclic_submodule(*m, a) & cyclic_submodule(*m, b);
      const Submodule rhs = cyclic_submodule(*m, r->mul(a, b));
      if (lhs != rhs && !out.counterexample) out.counterexample = std::make_pair(x, a);
    }
  return out;
}

ElementDReport element_d_function(const RingPtr& r) {
  const auto m = regular_module(r, Side::left);
  const auto lat = SubmoduleLattice::build(m);
  ElementDReport out;
  std::map<std::size_t, std::size_t> by_ideal;
  for (Index a = 0; a < r->order(); ++a) {
    const auto node = lat.index_of(cyclic_submodule(*m, a));
    auto it = by_ideal.find(node);
    if (it == by_ideal.end()) it = by_ideal.emplace(node, camps_dicks_d(lat, lat.node(node))).first;
    out.d.push_back(it->second);
  }
  const ElementSet units = r->units();
  auto fail = [&](Index a, Index b, const char* axiom) {
    if (!out.failure) out.failure = ElementDFailure{a, b, axiom};
  };
  for (Index a = 0; a < r->order(); ++a)
    if (out.d[a] == 0 && !units.contains(a)) fail(a, a, "d(a) = 0 implies a is a unit");
  for (Index a = 0; a < r->order(); ++a)
    for (Index b = 0; b < r->order(); ++b) {
      ++out.pairs_checked;
      const Index x = r->sub(r->one(), r->mul(b, a));
      const Index ax = r->mul(a, x);
      if (out.d[ax] != out.d[a] + out.d[x]) fail(a, b, "d(a(1-ba)) = d(a) + d(1-ba)");
      if (!units.contains(x) && !(out.d[ax] > out.d[a])) fail(a, b, "1-ba not a unit implies d(a(1-ba)) > d(a)");
    }
  return out;
}

SemiregularReport is_semiregular_by_weak_supplements(const RingPtr& r) {
  SemiregularReport out;
  auto every_principal_has_weak_supplement = [&](Side side) {
    const auto m = regular_module(r, side);
    const auto lat = SubmoduleLattice::build(m);
    for (Index a = 0; a < r->order(); ++a)
      if (!find_weak_supplement(lat, cyclic_submodule(*m, a))) return false;
    return true;
  };
  out.left_principal_weak_supplements = every_principal_has_weak_supplement(Side::left);
  out.right_principal_weak_supplements = every_principal_has_weak_supplement(Side::right);
  out.vnr_quotient = vnr_modulo(*r, jacobson_radical(r));
  if (out.left_principal_weak_supplements != out.vnr_quotient ||
      out.right_principal_weak_supplements != out.vnr_quotient)
    throw InternalInconsistency("is_semiregular_by_weak_supplements: routes disagree on '" + r->name() + "'");
  return out;
}

}  // namespace modlat
