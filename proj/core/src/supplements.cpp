#include "modlat/supplements.hpp"

#include "modlat/dimension.hpp"
#include "modlat/error.hpp"
#include "modlat/validate.hpp"

namespace modlat {

namespace {

std::vector<bool> smallness_table(const SubmoduleLattice& lat) {
  std::vector<bool> small(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) small[i] = is_small(lat, lat.node(i));
  return small;
}

std::optional<WeakSupplementWitness> weak_supplement_with(const SubmoduleLattice& lat, const Submodule& n,
                                                          const std::vector<bool>* small) {
  for (std::size_t l = 0; l < lat.size(); ++l) {
    if (!sums_to_whole(*lat.module(), n, lat.node(l))) continue;
    Submodule inter = n & lat.node(l);
    const bool ok = small ? (*small)[lat.index_of(inter)] : is_small(lat, inter);
    if (ok) return WeakSupplementWitness{n, lat.node(l), std::move(inter)};
  }
  return std::nullopt;
}

void require(const SubmoduleLattice& lat, const WeakSupplementWitness& w, const char* where, bool precondition) {
  std::string why;
  if (check_weak_supplement(lat, w, &why)) return;
  const std::string msg = std::string(where) + ": " + why;
  if (precondition) throw InvalidInput(msg);
  throw InternalInconsistency(msg);
}

bool semisimple_module(const ModulePtr& m) { return is_semisimple(SubmoduleLattice::build(m)); }

}  // namespace

bool is_small_in(const SubmoduleLattice& lat, const Submodule& x, const Submodule& ambient) {
  for (std::size_t y = 0; y < lat.size(); ++y) {
    const Submodule& node = lat.node(y);
    if (node.size() >= ambient.size() || !node.is_subset_of(ambient)) continue;
    // X + Y = A, by orders, for X, Y ⊆ A.
    if (x.size() * node.size() == ambient.size() * x.members().intersection_size(node.members())) return false;
  }
  return true;
}

bool check_weak_supplement(const SubmoduleLattice& lat, const WeakSupplementWitness& w, std::string* why) {
  const FiniteModule& m = *lat.module();
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (!validate(m, w.target).empty()) return fail("target is not a submodule");
  if (!validate(m, w.supplement).empty()) return fail("supplement is not a submodule");
  std::vector<Index> gens = w.target.members().members();
  for (auto x : w.supplement.members().members()) gens.push_back(x);
  if (generated_submodule(m, gens).size() != m.order()) return fail("target + supplement is not the whole module");
  ElementSet inter(m.order());
  for (Index x = 0; x < m.order(); ++x)
    if (w.target.contains(x) && w.supplement.contains(x)) inter.insert(x);
  if (inter != w.intersection.members()) return fail("recorded intersection is wrong");
  for (std::size_t l = 0; l + 1 < lat.size(); ++l) {
    std::vector<Index> g = inter.members();
    for (auto x : lat.node(l).members().members()) g.push_back(x);
    if (generated_submodule(m, g).size() == m.order()) return fail("intersection is not small");
  }
  return true;
}

std::optional<Submodule> find_supplement(const SubmoduleLattice& lat, const Submodule& n) {
  // Canonical order is by cardinality first, so the first node summing with
  // N to M is inclusion-minimal among such nodes.
  for (std::size_t l = 0; l < lat.size(); ++l) {
    if (!sums_to_whole(*lat.module(), n, lat.node(l))) continue;
    if (!is_small_in(lat, n & lat.node(l), lat.node(l)))
      throw InternalInconsistency("find_supplement: minimal L without N ∩ L ≪ L in '" + lat.module()->name() + "'");
    return lat.node(l);
  }
  return std::nullopt;
}

std::optional<WeakSupplementWitness> find_weak_supplement(const SubmoduleLattice& lat, const Submodule& n) {
  return weak_supplement_with(lat, n, nullptr);
}

WeakSupplementMap is_weakly_supplemented(const SubmoduleLattice& lat) {
  const auto small = smallness_table(lat);
  WeakSupplementMap out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out.witnesses.push_back(weak_supplement_with(lat, lat.node(i), &small));
    if (!out.witnesses.back()) out.holds = false;
  }
  return out;
}

SupplementMap is_supplemented(const SubmoduleLattice& lat) {
  SupplementMap out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out.supplements.push_back(find_supplement(lat, lat.node(i)));
    if (!out.supplements.back()) out.holds = false;
  }
  return out;
}

bool is_semilocal_module(const SubmoduleLattice& lat) {
  return semisimple_module(quotient_module(lat.module(), radical(lat)).module);
}

SemisimpleSplit semisimple_quotient_decomposition(const SubmoduleLattice& lat, const Submodule& n) {
  const FiniteModule& m = *lat.module();
  if (!semisimple_module(quotient_module(lat.module(), n).module))
    throw InvalidInput("semisimple_quotient_decomposition: M/N is not semisimple");
  SemisimpleSplit out;
  out.m1 = complement_of(lat, n);
  const Submodule s = submodule_sum(m, out.m1, n);
  bool found = false;
  for (std::size_t c = 0; c < lat.size() && !found; ++c) {
    const Submodule& cand = lat.node(c);
    if (n.is_subset_of(cand) && sums_to_whole(m, cand, s) && (cand & s) == n) {
      out.m2 = cand;
      found = true;
    }
  }
  if (!found) throw InternalInconsistency("semisimple_quotient_decomposition: no complement of (M1 + N)/N");

  // M = M1 ⊕ M2, M1 semisimple, N ⊴ M2, M2/N semisimple.
  const bool direct = sums_to_whole(m, out.m1, out.m2) && (out.m1 & out.m2).size() == 1;
  const bool m1_ss = semisimple_module(submodule_module(lat.module(), out.m1).module);
  bool essential = true;
  for (std::size_t c = 1; c < lat.size() && essential; ++c)
    if (lat.node(c).is_subset_of(out.m2)) essential = n.members().intersection_size(lat.node(c).members()) > 1;
  auto view = submodule_module(lat.module(), out.m2);
  ElementSet local(view.module->order());
  for (Index i = 0; i < view.module->order(); ++i)
    if (n.contains(view.inclusion(i))) local.insert(i);
  const bool m2_quot_ss = semisimple_module(quotient_module(view.module, Submodule(local)).module);
  if (!direct || !m1_ss || !essential || !m2_quot_ss)
    throw InternalInconsistency("semisimple_quotient_decomposition: constructed split fails verification");
  return out;
}

WeakSupplementWitness push_forward_weak_supplement(const ModuleHom& f, const SubmoduleLattice& source,
                                                   const SubmoduleLattice& target, const Submodule& k,
                                                   const Submodule& l) {
  if (!f.is_surjective()) throw InvalidInput("push_forward_weak_supplement: map is not onto");
  const Submodule pre = f.preimage(k);
  require(source, {pre, l, pre & l}, "push_forward_weak_supplement (precondition)", true);
  const Submodule fl = f.image_of(l);
  WeakSupplementWitness w{k, fl, k & fl};
  require(target, w, "push_forward_weak_supplement", false);
  return w;
}

WeakSupplementWitness pull_back_weak_supplement(const ModuleHom& f, const SubmoduleLattice& source,
                                                const SubmoduleLattice& target, const Submodule& l,
                                                const Submodule& x) {
  if (!f.is_surjective()) throw InvalidInput("pull_back_weak_supplement: map is not onto");
  if (!is_small(source, f.kernel())) throw InvalidInput("pull_back_weak_supplement: kernel is not small");
  const Submodule fl = f.image_of(l);
  require(target, {fl, x, fl & x}, "pull_back_weak_supplement (precondition)", true);
  const Submodule pre = f.preimage(x);
  WeakSupplementWitness w{l, pre, l & pre};
  require(source, w, "pull_back_weak_supplement", false);
  return w;
}

WeakSupplementWitness weak_supplement_from_summands(const SubmoduleLattice& lat, const Submodule& m1,
                                                    const Submodule& k, const Submodule& n) {
  const FiniteModule& m = *lat.module();
  const Submodule m1k = submodule_sum(m, m1, k);
  require(lat, {m1k, n, m1k & n}, "weak_supplement_from_summands (precondition)", true);
  const Submodule x = submodule_sum(m, k, n) & m1;
  std::optional<Submodule> l;
  for (std::size_t c = 0; c < lat.size() && !l; ++c) {
    const Submodule& cand = lat.node(c);
    if (!cand.is_subset_of(m1)) continue;
    if (x.size() * cand.size() != m1.size() * x.members().intersection_size(cand.members())) continue;
    if (is_small_in(lat, x & cand, m1)) l = cand;
  }
  if (!l) throw InvalidInput("weak_supplement_from_summands: M1 has no weak supplement for (K + N) ∩ M1");
  const Submodule nl = submodule_sum(m, n, *l);
  WeakSupplementWitness w{k, nl, k & nl};
  require(lat, w, "weak_supplement_from_summands", false);
  return w;
}

WeakSupplementWitness weak_supplement_via_sum(const SubmoduleLattice& lat, const Submodule& m1, const Submodule& m2,
                                              const Submodule& n) {
  const FiniteModule& m = *lat.module();
  if (!sums_to_whole(m, m1, m2)) throw InvalidInput("weak_supplement_via_sum: M1 + M2 is not M");
  const auto step = weak_supplement_from_summands(lat, m1, submodule_sum(m, m2, n), Submodule::zero(m));
  return weak_supplement_from_summands(lat, m2, n, step.supplement);
}

std::vector<Index> greedy_generators(const FiniteModule& m) {
  std::vector<Index> gens;
  Submodule current = Submodule::zero(m);
  while (current.size() != m.order()) {
    Index best = 0;
    std::size_t best_size = 0;
    for (Index g = 0; g < m.order(); ++g) {
      if (current.contains(g)) continue;
      const std::size_t sz = submodule_sum(m, current, cyclic_submodule(m, g)).size();
      if (sz > best_size) {
        best_size = sz;
        best = g;
      }
    }
    gens.push_back(best);
    current = submodule_sum(m, current, cyclic_submodule(m, best));
  }
  return gens;
}

FreeCover free_cover_decomposition(const ModulePtr& mp) {
  const FiniteModule& m = *mp;
  FreeCover out;
  out.generators = greedy_generators(m);
  out.k = out.generators.size();
  const RingPtr& ring = m.ring();
  std::vector<ModulePtr> copies(out.k, regular_module(ring, m.side()));
  auto free = direct_sum(ring, m.side(), copies);
  out.free = free.module;

  std::vector<Index> images(out.free->order());
  for (Index x = 0; x < images.size(); ++x) {
    Index acc = m.zero();
    for (std::size_t i = 0; i < out.k; ++i) acc = m.add(acc, m.act(free.projections[i](x), out.generators[i]));
    images[x] = acc;
  }
  out.map = {out.free, mp, std::move(images)};
  if (!validate(out.map).empty() || !out.map.is_surjective())
    throw InternalInconsistency("free_cover_decomposition: R^k → M is not an epimorphism");

  const auto lat = SubmoduleLattice::build(out.free);
  const Submodule kernel = out.map.kernel();
  auto w = find_weak_supplement(lat, kernel);
  if (!w) throw InternalInconsistency("free_cover_decomposition: kernel has no weak supplement");
  out.supplement = *w;

  auto q = quotient_module(out.free, out.supplement.supplement);
  std::vector<ModulePtr> parts{mp, q.module};
  auto target = direct_sum(ring, m.side(), parts);
  std::vector<Index> cover(out.free->order());
  for (Index x = 0; x < cover.size(); ++x) {
    // Pair (f(x), x + L) through the embeddings of the two summands.
    cover[x] = target.module->add(target.embeddings[0](out.map(x)), target.embeddings[1](q.projection(x)));
  }
  out.cover = {out.free, target.module, std::move(cover)};
  out.cover_kernel = out.cover.kernel();
  out.cover_surjective = out.cover.is_surjective();
  out.cover_kernel_small = is_small(lat, out.cover_kernel);
  if (out.cover_kernel != (kernel & out.supplement.supplement))
    throw InternalInconsistency("free_cover_decomposition: cover kernel differs from ker f ∩ L");
  return out;
}

}  // namespace modlat
