#include "modlat/harness/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string_view>
#include <utility>
#include <thread>

#include "modlat/caps.hpp"
#include "modlat/dimension.hpp"
#include "modlat/endo.hpp"
#include "modlat/error.hpp"
#include "modlat/lattice.hpp"
#include "modlat/ringclass.hpp"
#include "modlat/supplements.hpp"
#include "modlat/validate.hpp"

#ifndef MODLAT_VERSION
#define MODLAT_VERSION "unknown"
#endif

namespace modlat::harness {

namespace {

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string d) { return {Status::pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::fail, std::move(d)}; }
Outcome skip(std::string d) { return {Status::skip, std::move(d)}; }

struct ModuleCtx {
  const ModuleEntry* entry = nullptr;
  ModulePtr module;
  std::optional<SubmoduleLattice> lat;
  std::optional<Outcome> build_error;
};

struct RingCtx {
  const CorpusEntry* entry = nullptr;
  RingPtr ring;
  std::optional<Outcome> build_error;
  std::vector<ModuleCtx> modules;

  // The regular module on each side, and why it is not an injective
  // cogenerator (nullopt when it is). Filled on first use.
  std::once_flag qf_once[2];
  ModulePtr regular[2];
  std::optional<std::string> not_qf[2];
};

const std::optional<std::string>& qf_failure(RingCtx& rc, Side side) {
  const int s = side == Side::left ? 0 : 1;
  std::call_once(rc.qf_once[s], [&] {
    rc.regular[s] = regular_module(rc.ring, side);
    const Injectivity inj = is_injective(rc.regular[s]);
    if (!inj.holds) {
      rc.not_qf[s] = "map on ideal " + members_string(*inj.ideal) + " does not extend";
      return;
    }
    const Cogeneration cog = is_cogenerator(rc.regular[s]);
    if (!cog.holds) rc.not_qf[s] = "R/K does not embed for K = " + members_string(*cog.missing);
  });
  return rc.not_qf[s];
}

std::string n2s(std::size_t n) { return std::to_string(n); }

std::string sets_string(const std::vector<Submodule>& family) {
  std::string s = "[";
  for (std::size_t i = 0; i < family.size(); ++i) s += (i ? "," : "") + members_string(family[i]);
  return s + "]";
}

// At most `limit` indices from [0, n), spread evenly, always keeping both ends.
std::vector<std::size_t> sample(std::size_t n, std::size_t limit) {
  std::vector<std::size_t> out;
  if (n <= limit) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
  } else if (limit == 1) {
    out.push_back(0);
  } else {
    for (std::size_t i = 0; i < limit; ++i) out.push_back(i * (n - 1) / (limit - 1));
  }
  return out;
}

SubmoduleLattice lattice_of(const ModulePtr& m) { return SubmoduleLattice::build(m); }

bool is_zero(const Submodule& n) { return n.size() == 1; }

// Independent certificate for M = M1 ⊕ M2 with M1 semisimple, N ⊴ M2 and
// M2/N semisimple. Empty on success.
std::string check_split(const SubmoduleLattice& lat, const Submodule& n, const SemisimpleSplit& s) {
  const ModulePtr& m = lat.module();
  if (!is_zero(s.m1 & s.m2)) return "M1 ∩ M2 ≠ 0";
  if (!sums_to_whole(*m, s.m1, s.m2)) return "M1 + M2 ≠ M";
  if (!n.is_subset_of(s.m2)) return "N ⊄ M2";
  if (!is_semisimple(lattice_of(submodule_module(m, s.m1).module))) return "M1 not semisimple";
  const Quotient q = quotient_module(m, n);
  if (!is_semisimple(lattice_of(submodule_module(q.module, q.projection.image_of(s.m2)).module)))
    return "M2/N not semisimple";
  const SubmoduleView v = submodule_module(m, s.m2);
  if (!is_essential(lattice_of(v.module), v.inclusion.preimage(n))) return "N not essential in M2";
  return {};
}

std::optional<std::string> check_witness(const SubmoduleLattice& lat, const WeakSupplementWitness& w) {
  std::string why;
  if (check_weak_supplement(lat, w, &why)) return std::nullopt;
  return "witness (" + members_string(w.target) + ", " + members_string(w.supplement) + "): " + why;
}

// ---------------------------------------------------------------------------
// Module-level checks.

Outcome thm_1_4(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const HollowDimension hd = hollow_dimension(lat);
  const auto& fam = hd.decomposition.family;
  const auto mode = fam.size() <= 12 ? CoindependenceMode::full : CoindependenceMode::monotone;
  if (auto c = is_coindependent(lat, fam, mode); !c.coindependent)
    return fail("decomposition family not coindependent: " + c.reason);
  for (const Submodule& k : fam)
    if (!is_hollow(lattice_of(quotient_module(mc.module, k).module)))
      return fail("M/K not hollow for K = " + members_string(k));
  if (!is_small(lat, hd.decomposition.intersection)) return fail("intersection of the family is not small");

  // The induced map M → ⊕ M/K_i is onto with kernel ⋂ K_i.
  std::string cover = "map not built";
  std::size_t order = 1;
  for (const Submodule& k : fam) order *= mc.module->order() / k.size();
  if (order <= caps().elements) {
    std::vector<ModulePtr> parts;
    std::vector<Quotient> quotients;
    for (const Submodule& k : fam) {
      quotients.push_back(quotient_module(mc.module, k));
      parts.push_back(quotients.back().module);
    }
    const DirectSum sum = direct_sum(mc.module->ring(), mc.module->side(), parts);
    std::vector<Index> images(mc.module->order());
    for (Index x = 0; x < images.size(); ++x) {
      Index acc = sum.module->zero();
      for (std::size_t i = 0; i < fam.size(); ++i)
        acc = sum.module->add(acc, sum.embeddings[i](quotients[i].projection(x)));
      images[x] = acc;
    }
    const ModuleHom f{mc.module, sum.module, std::move(images)};
    if (!validate(f).empty() || !f.is_surjective()) return fail("M → ⊕ M/K_i is not an epimorphism");
    if (f.kernel() != hd.decomposition.intersection) return fail("kernel of M → ⊕ M/K_i is not ⋂ K_i");
    cover = "small epimorphism onto " + n2s(fam.size()) + " hollow modules";
  }

  std::string audit;
  if (lat.size() <= 48) {
    const std::size_t all = max_coindependent_family(lat, CoindependentSearchSpace::all);
    if (all != hd.value) return fail("search over all proper submodules gives " + n2s(all));
    audit = ", audit over all submodules";
  }
  return pass("hdim=" + n2s(hd.value) + " family=" + sets_string(fam) + ", " + cover + audit);
}

Outcome lem_1_2(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const auto fam = hollow_decomposition(lat).family;
  const auto refined = refine_coindependent_fg(lat, fam);
  if (refined.size() != fam.size()) return fail("refinement changed the family size");
  std::vector<Submodule> ls;
  std::string gens = "[";
  for (std::size_t i = 0; i < refined.size(); ++i) {
    const auto& r = refined[i];
    if (!r.submodule.is_subset_of(fam[i])) return fail("L_" + n2s(i) + " ⊄ N_" + n2s(i));
    if (generated_submodule(*mc.module, r.generators) != r.submodule)
      return fail("L_" + n2s(i) + " is not generated by its generators");
    ls.push_back(r.submodule);
    gens += (i ? "," : "") + std::string("[");
    for (std::size_t g = 0; g < r.generators.size(); ++g) gens += (g ? "," : "") + std::to_string(r.generators[g]);
    gens += "]";
  }
  const auto mode = ls.size() <= 12 ? CoindependenceMode::full : CoindependenceMode::monotone;
  if (auto c = is_coindependent(lat, ls, mode); !c.coindependent) return fail("refined family: " + c.reason);
  return pass("generators=" + gens + "]");
}

Outcome thm_1_5(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  if (auto f = verify_d_axioms(lat))
    return fail("axiom " + f->axiom + " fails at nodes " + n2s(f->n) + ", " + n2s(f->l));
  const auto d = d_table(lat);
  if (d[lat.top()] != 0) return fail("d(M) ≠ 0");
  return pass("nodes=" + n2s(lat.size()) + " d(0)=" + n2s(d[lat.bottom()]));
}

Outcome rem_1_6(RingCtx& rc, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const std::size_t h = hollow_dimension(lat).value;
  const auto d = d_table(lat);
  const bool by_quotient = lat.size() <= 128;
  std::size_t smalls = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::size_t hq = d[i];
    if (by_quotient) {
      hq = hollow_dimension(lattice_of(quotient_module(mc.module, lat.node(i)).module)).value;
      if (hq != d[i]) return fail("hdim(M/N) = " + n2s(hq) + " but interval route gives " + n2s(d[i]));
    }
    if (hq > h) return fail("hdim(M/N) > hdim(M) for N = " + members_string(lat.node(i)));
    if (is_small(lat, lat.node(i))) {
      ++smalls;
      if (hq != h) return fail("N ≪ M but hdim(M/N) ≠ hdim(M) for N = " + members_string(lat.node(i)));
    }
  }
  std::string detail = "quotients=" + n2s(lat.size()) + (by_quotient ? "" : " (interval route)") +
                       " small=" + n2s(smalls);
  if (const auto* sum = std::get_if<ModuleSpec::DirectSumOf>(&mc.entry->spec.kind); sum && !sum->parts.empty()) {
    std::size_t hs = 0, us = 0;
    for (const ModuleSpec& p : sum->parts) {
      const auto pl = lattice_of(module_from_spec(rc.ring, p));
      hs += hollow_dimension(pl).value;
      us += uniform_dimension(pl).value;
    }
    const std::size_t u = uniform_dimension(lat).value;
    if (hs != h) return fail("hdim of the sum is " + n2s(h) + ", sum of parts " + n2s(hs));
    if (us != u) return fail("udim of the sum is " + n2s(u) + ", sum of parts " + n2s(us));
    detail += " additive hdim=" + n2s(h) + " udim=" + n2s(u);
  }
  return pass(detail);
}

Outcome prop_2_2(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  if (lat.size() < 2) return pass("no proper submodules");
  std::size_t semisimple_quotients = 0;
  const auto picks = sample(lat.size() - 1, 64);
  for (std::size_t i : picks) {
    const Submodule& n = lat.node(i);
    const bool a = is_semisimple(lattice_of(quotient_module(mc.module, n).module));
    bool b = true;
    for (std::size_t l = 0; l < lat.size() && b; ++l) {
      bool found = false;
      for (std::size_t k = 0; k < lat.size() && !found; ++k)
        found = lat.sums_to_whole(l, k) && (lat.node(l) & lat.node(k)).is_subset_of(n);
      b = found;
    }
    if (a != b) return fail("(a) and (b) disagree for N = " + members_string(n));
    if (!a) continue;
    ++semisimple_quotients;
    const SemisimpleSplit s = semisimple_quotient_decomposition(lat, n);
    if (auto why = check_split(lat, n, s); !why.empty()) return fail(why + " for N = " + members_string(n));
  }
  return pass("proper submodules=" + n2s(picks.size()) + " semisimple quotients=" + n2s(semisimple_quotients));
}

Outcome prop_2_5(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  std::size_t witnesses = 0;

  const WeakSupplementMap ws = is_weakly_supplemented(lat);
  if (!ws.holds) return fail("M is not weakly supplemented");
  for (const auto& w : ws.witnesses) {
    if (!w) return fail("missing weak supplement");
    if (auto why = check_witness(lat, *w)) return fail(*why);
    ++witnesses;
  }
  if (!is_semilocal_module(lat)) return fail("weakly supplemented but not semilocal");

  const Submodule rad = radical(lat);
  if (lat.size() > 1) {
    const SemisimpleSplit s = semisimple_quotient_decomposition(lat, rad);
    if (auto why = check_split(lat, rad, s); !why.empty()) return fail("Rad split: " + why);
  }

  // Factor modules: push weak supplements forward along M → M/X.
  for (std::size_t xi : sample(lat.size(), 6)) {
    const Quotient q = quotient_module(mc.module, lat.node(xi));
    const auto tl = lattice_of(q.module);
    for (std::size_t ki : sample(tl.size(), 16)) {
      const Submodule& k = tl.node(ki);
      const auto l = find_weak_supplement(lat, q.projection.preimage(k));
      if (!l) return fail("no weak supplement of a preimage");
      const auto w = push_forward_weak_supplement(q.projection, lat, tl, k, l->supplement);
      if (auto why = check_witness(tl, w)) return fail("push forward: " + *why);
      ++witnesses;
    }
  }

  // Small covers: pull weak supplements back along M → M/X with X ≪ M.
  std::vector<std::size_t> smalls;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.node(i).is_subset_of(rad)) smalls.push_back(i);
  for (std::size_t si : sample(smalls.size(), 6)) {
    const Quotient q = quotient_module(mc.module, lat.node(smalls[si]));
    const auto tl = lattice_of(q.module);
    for (std::size_t li : sample(lat.size(), 16)) {
      const Submodule& l = lat.node(li);
      const auto x = find_weak_supplement(tl, q.projection.image_of(l));
      if (!x) return fail("no weak supplement of an image");
      const auto w = pull_back_weak_supplement(q.projection, lat, tl, l, x->supplement);
      if (auto why = check_witness(lat, w)) return fail("pull back: " + *why);
      ++witnesses;
    }
  }

  // Supplements are weakly supplemented modules.
  std::size_t supplements = 0;
  for (std::size_t ni : sample(lat.size(), 16)) {
    const auto s = find_supplement(lat, lat.node(ni));
    if (!s) return fail("no supplement for N = " + members_string(lat.node(ni)));
    if (!is_weakly_supplemented(lattice_of(submodule_module(mc.module, *s).module)).holds)
      return fail("supplement " + members_string(*s) + " is not weakly supplemented");
    ++supplements;
  }
  return pass("witnesses=" + n2s(witnesses) + " supplements=" + n2s(supplements));
}

Outcome cor_2_6(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const Submodule rad = radical(lat);
  const bool ss = is_semisimple(lat);
  if (ss != is_zero(rad)) return fail(std::string("semisimple = ") + (ss ? "true" : "false") + " but Rad = " +
                                      members_string(rad));
  if (ss && hollow_dimension(lat).value != length(lat)) return fail("semisimple but hdim ≠ length");
  const auto ql = lattice_of(quotient_module(mc.module, rad).module);
  if (!is_zero(radical(ql))) return fail("Rad(M/Rad M) ≠ 0");
  if (!is_semisimple(ql)) return fail("M/Rad M is not semisimple");
  const std::size_t hq = hollow_dimension(ql).value;
  if (hq != length(ql)) return fail("hdim(M/Rad M) ≠ length(M/Rad M)");
  return pass("Rad=" + members_string(rad) + " hdim(M/Rad M)=length=" + n2s(hq));
}

Outcome lem_2_7(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  std::size_t checked = 0;
  const auto picks = sample(lat.size(), 10);
  for (std::size_t a : picks)
    for (std::size_t k : picks) {
      const Submodule& m1 = lat.node(a);
      const Submodule& kk = lat.node(k);
      const auto n = find_weak_supplement(lat, submodule_sum(*mc.module, m1, kk));
      if (!n) return fail("M1 + K has no weak supplement");
      const auto w = weak_supplement_from_summands(lat, m1, kk, n->supplement);
      if (auto why = check_witness(lat, w)) return fail(*why);
      ++checked;
    }
  return pass("pairs=" + n2s(checked));
}

Outcome prop_2_8(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i; j < lat.size(); ++j)
      if (lat.sums_to_whole(i, j)) pairs.push_back({i, j});
  std::size_t checked = 0;
  const auto ns = sample(lat.size(), 10);
  for (std::size_t p : sample(pairs.size(), 12))
    for (std::size_t ni : ns) {
      const auto w = weak_supplement_via_sum(lat, lat.node(pairs[p].first), lat.node(pairs[p].second), lat.node(ni));
      if (auto why = check_witness(lat, w)) return fail(*why);
      ++checked;
    }
  return pass("decompositions=" + n2s(std::min<std::size_t>(pairs.size(), 12)) + " witnesses=" + n2s(checked));
}

Outcome thm_2_10(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const std::size_t h = hollow_dimension(lat).value;
  const std::size_t c = radical_quotient_length(lat);
  const Submodule rad = radical(lat);
  const std::size_t ql = length(lattice_of(quotient_module(mc.module, rad).module));
  if (h != c || c != ql) return fail("hdim=" + n2s(h) + " route C=" + n2s(c) + " length(M/Rad M)=" + n2s(ql));
  if (!is_weakly_supplemented(lat).holds) return fail("not weakly supplemented");
  if (!is_semilocal_module(lat)) return fail("not semilocal");
  if (!is_small(lat, rad)) return fail("Rad M is not small");
  return pass("hdim=length(M/Rad M)=" + n2s(h));
}

Outcome thm_3_1(RingCtx&, ModuleCtx& mc) {
  const std::size_t n = mc.module->order();
  const std::size_t power = n * n <= kMaxPairOrder ? 2 : 1;
  const QuotientSweep s = verify_quotients_semilocal(mc.module, power);
  if (s.counterexample)
    return fail("M^" + n2s(s.power) + "/N not semilocal for N = " + members_string(*s.counterexample));
  return pass("semilocal quotients of M^k, k<=" + n2s(power) + ": " + n2s(s.checked));
}

Outcome cor_3_7(RingCtx& rc, ModuleCtx& mc) {
  const std::size_t k = greedy_generators(*mc.module).size();
  std::size_t free_order = 1;
  for (std::size_t i = 0; i < k && free_order <= 1024; ++i) free_order *= rc.ring->order();
  if (free_order > 1024) return skip("R^" + n2s(k) + " has more than 1024 elements");
  const FreeCover fc = free_cover_decomposition(mc.module);
  if (!fc.cover_surjective || !fc.cover_kernel_small) return fail("construction reports no small cover");
  if (!validate(fc.cover).empty()) return fail("cover map is not a homomorphism");
  if (!fc.cover.is_surjective()) return fail("cover map is not onto");
  if (fc.cover.kernel() != fc.cover_kernel) return fail("cover kernel differs from ker f ∩ L");
  const auto fl = lattice_of(fc.free);
  if (!is_small(fl, fc.cover_kernel)) return fail("cover kernel is not small");
  if (auto why = check_witness(fl, fc.supplement)) return fail(*why);
  return pass("k=" + n2s(k) + " |ker ∩ L|=" + n2s(fc.cover_kernel.size()));
}

Outcome thm_3_9_module(RingCtx&, ModuleCtx& mc) {
  const HomSet ends = hom_set(mc.module, mc.module);
  if (ends.size() > kMaxEndOrder)
    return skip("End(M) has " + n2s(ends.size()) + " elements, above the harness bound " + n2s(kMaxEndOrder));
  const DualityReport r = verify_takeuchi(mc.module);
  if (mc.entry->expect.self_projective && *mc.entry->expect.self_projective != r.applicable)
    return fail(std::string("self-projective expected ") + (*mc.entry->expect.self_projective ? "true" : "false"));
  if (!r.applicable) return skip(r.skip_reason);
  if (!r.holds) return fail("hdim(M)=" + n2s(r.lhs) + " hdim(End M)=" + n2s(r.rhs));
  const DualityReport b = verify_projective_generator_bound(mc.module);
  if (!b.holds) return fail("hdim(M)=" + n2s(b.lhs) + " > hdim(Hom(R,M))=" + n2s(b.rhs));
  return pass("hdim(M)=hdim(End M)=" + n2s(r.lhs) + " |End M|=" + n2s(ends.size()) + " hdim(Hom(R,M))=" +
              n2s(b.rhs));
}

Outcome prop_3_14(RingCtx& rc, ModuleCtx& mc) {
  const Side side = mc.module->side();
  if (const auto& why = qf_failure(rc, side)) return skip("Q not injective cogenerator: " + *why);
  const DualityReport r = verify_page(mc.module, rc.regular[side == Side::left ? 0 : 1]);
  if (!r.holds) return fail("hdim(M)=" + n2s(r.lhs) + " udim(Hom(M,Q))=" + n2s(r.rhs));
  return pass("hdim(M)=udim(Hom(M,Q))=" + n2s(r.lhs));
}

Outcome good_module(RingCtx& rc, ModuleCtx& mc) {
  std::size_t checked = 0, targets = 0;
  for (const ModuleCtx& other : rc.modules) {
    if (!other.lat || other.module->side() != mc.module->side()) continue;
    const GoodModuleReport r = verify_good_module(*mc.lat, *other.lat);
    if (r.counterexample) return fail("f(Rad M) ≠ Rad f(M) for a map into " + other.entry->id);
    checked += r.checked;
    ++targets;
  }
  return pass("maps=" + n2s(checked) + " targets=" + n2s(targets));
}

Outcome lattice_oracles(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const Submodule rad = radical(lat);
  const Submodule soc = socle(lat);
  std::size_t smalls = 0, essentials = 0;
  for (const Submodule& n : lat.nodes()) {
    const bool small = is_small(lat, n);
    const bool essential = is_essential(lat, n);
    if (small != n.is_subset_of(rad)) return fail("smallness disagrees with N ⊆ Rad M for N = " + members_string(n));
    if (essential != soc.is_subset_of(n))
      return fail("essentiality disagrees with Soc M ⊆ N for N = " + members_string(n));
    smalls += small;
    essentials += essential;
  }
  for (std::size_t i : sample(lat.size(), 64)) {
    const Submodule& n = lat.node(i);
    const Submodule c = complement_of(lat, n);
    if (!is_zero(c & n)) return fail("complement meets N for N = " + members_string(n));
    if (!is_essential(lat, submodule_sum(*mc.module, n, c))) return fail("N + complement not essential");
  }
  if (auto t = modularity_counterexample(lat, 50000)) return fail("lattice is not modular");
  std::string udim_oracle;
  if (lat.minimal().size() <= 16) {
    const std::size_t u = uniform_dimension(lat).value;
    if (max_independent_family(lat) != u) return fail("udim disagrees with the independent-family search");
    udim_oracle = " udim oracle ok";
  }
  return pass("nodes=" + n2s(lat.size()) + " small=" + n2s(smalls) + " essential=" + n2s(essentials) + udim_oracle);
}

Outcome module_goldens(RingCtx&, ModuleCtx& mc) {
  const auto& lat = *mc.lat;
  const ModuleGoldens& g = mc.entry->expect;
  std::string got;
  auto check = [&](const char* what, std::optional<std::size_t> want, std::size_t have) -> std::optional<Outcome> {
    if (!want) return std::nullopt;
    got += std::string(got.empty() ? "" : " ") + what + "=" + n2s(have);
    if (*want != have) return fail(std::string(what) + " expected " + n2s(*want) + " got " + n2s(have));
    return std::nullopt;
  };
  if (auto o = check("hdim", g.hdim, hollow_dimension(lat).value)) return *o;
  if (auto o = check("udim", g.udim, uniform_dimension(lat).value)) return *o;
  if (auto o = check("length", g.length, length(lat))) return *o;
  if (g.self_projective) {
    const bool sp = is_self_projective(mc.module).holds;
    if (sp != *g.self_projective) return fail(std::string("self-projective expected ") + (sp ? "false" : "true"));
    got += std::string(got.empty() ? "" : " ") + "self_projective=" + (sp ? "true" : "false");
  }
  return pass(got);
}

bool has_goldens(const ModuleEntry& e) {
  return e.expect.hdim || e.expect.udim || e.expect.length || e.expect.self_projective;
}

// ---------------------------------------------------------------------------
// Ring-level checks.

Outcome cor_3_2(RingCtx& rc) {
  const RingProfile p = classify(rc.ring);
  return pass("hdim_left=" + n2s(p.hdim_left) + " length(R/J)=" + n2s(p.semisimple_quotient_length) +
              " hdim_right=" + n2s(p.hdim_right));
}

Outcome lem_3_4(RingCtx& rc) {
  const LemmaRaRbReport r = verify_lemma_ra_rb(rc.ring);
  if (r.counterexample)
    return fail("r=" + n2s(r.counterexample->first) + " a=" + n2s(r.counterexample->second));
  return pass("pairs=" + n2s(r.pairs_checked));
}

Outcome thm_3_5(RingCtx& rc) {
  const ElementDReport r = element_d_function(rc.ring);
  if (r.failure)
    return fail("a=" + n2s(r.failure->a) + " b=" + n2s(r.failure->b) + ": " + r.failure->axiom);
  const std::size_t h = hollow_dimension(lattice_of(regular_module(rc.ring, Side::left))).value;
  std::size_t max_d = 0;
  for (std::size_t v : r.d) max_d = std::max(max_d, v);
  if (max_d != h) return fail("max d = " + n2s(max_d) + " but hdim(R) = " + n2s(h));

  // Finite products of simple modules are semisimple.
  const ModulePtr reg = regular_module(rc.ring, Side::left);
  const auto lat = lattice_of(reg);
  std::size_t products = 0;
  for (std::size_t a : lat.maximal())
    for (std::size_t b : lat.maximal()) {
      if (b < a) continue;
      const std::vector<ModulePtr> parts{quotient_module(reg, lat.node(a)).module,
                                         quotient_module(reg, lat.node(b)).module};
      if (!is_semisimple(lattice_of(direct_sum(rc.ring, Side::left, parts).module)))
        return fail("R/K ⊕ R/K' not semisimple");
      ++products;
    }
  return pass("pairs=" + n2s(r.pairs_checked) + " max d=" + n2s(max_d) + " simple products=" + n2s(products));
}

Outcome thm_3_9_ring(RingCtx& rc) {
  const ModulePtr reg = regular_module(rc.ring, Side::left);
  const auto lat = lattice_of(reg);
  for (std::size_t k : lat.maximal()) {
    const RingPtr e = endomorphism_ring(quotient_module(reg, lat.node(k)).module);
    if (!is_division_ring(*e)) return fail("End(R/K) is not a division ring for K = " + members_string(lat.node(k)));
  }
  // a ↦ (x ↦ xa) is a ring isomorphism R → End(_R R).
  const Endomorphisms e = endomorphisms(reg);
  const FiniteRing& r = *rc.ring;
  if (e.ring->order() != r.order()) return fail("|End(R)| ≠ |R|");
  std::vector<std::size_t> phi(r.order());
  for (Index a = 0; a < r.order(); ++a) {
    std::vector<Index> images(r.order());
    for (Index x = 0; x < r.order(); ++x) images[x] = r.mul(x, a);
    phi[a] = e.homs.index_of(ModuleHom{reg, reg, std::move(images)});
  }
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < r.order(); ++b) {
      if (phi[r.add(a, b)] != e.ring->add(phi[a], phi[b])) return fail("R → End(R) is not additive");
      if (phi[r.mul(a, b)] != e.ring->mul(phi[a], phi[b])) return fail("R → End(R) is not multiplicative");
    }
  return pass("simple modules=" + n2s(lat.maximal().size()) + " End(R) ≅ R");
}

Outcome prop_3_13(RingCtx& rc) {
  const SemiregularReport r = is_semiregular_by_weak_supplements(rc.ring);
  if (!r.vnr_quotient) return fail("R/J is not von Neumann regular");
  return pass("R/J regular; every Ra and aR has a weak supplement");
}

Outcome thm_3_15(RingCtx& rc) {
  const DualityReport r = verify_qf_generator(rc.ring);
  if (!r.applicable) return skip(r.skip_reason);
  if (!r.holds) return fail("hdim(R over End R)=" + n2s(r.lhs) + " length(R/J)=" + n2s(r.rhs));
  return pass("hdim(R over End R)=length(R/J)=" + n2s(r.lhs));
}

Outcome ring_goldens(RingCtx& rc) {
  const RingGoldens& g = rc.entry->expect;
  const RingProfile p = classify(rc.ring);
  std::string got;
  auto check = [&](const char* what, std::optional<std::size_t> want, std::size_t have) -> std::optional<Outcome> {
    if (!want) return std::nullopt;
    got += std::string(got.empty() ? "" : " ") + what + "=" + n2s(have);
    if (*want != have) return fail(std::string(what) + " expected " + n2s(*want) + " got " + n2s(have));
    return std::nullopt;
  };
  if (auto o = check("hdim_left", g.hdim_left, p.hdim_left)) return *o;
  if (auto o = check("hdim_right", g.hdim_right, p.hdim_right)) return *o;
  if (auto o = check("jacobson_size", g.jacobson_size, p.jacobson.size())) return *o;
  if (auto o = check("units", g.units, p.units.size())) return *o;
  if (g.local) {
    if (*g.local != p.local) return fail(std::string("local expected ") + (*g.local ? "true" : "false"));
    got += std::string(" local=") + (p.local ? "true" : "false");
  }
  return pass(got);
}

bool has_goldens(const RingGoldens& g) {
  return g.hdim_left || g.hdim_right || g.jacobson_size || g.units || g.local;
}

// ---------------------------------------------------------------------------

using RingCheck = Outcome (*)(RingCtx&);
using ModuleCheck = Outcome (*)(RingCtx&, ModuleCtx&);

struct Verifier {
  TheoremInfo info;
  RingCheck ring = nullptr;
  ModuleCheck module = nullptr;
};

const std::vector<Verifier>& verifiers() {
  static const std::vector<Verifier> v = {
      {{"thm-1.4", "hdim by decomposition, coindependent search and length(M/Rad M)"}, nullptr, thm_1_4},
      {{"lem-1.2", "coindependent families shrink to finitely generated ones"}, nullptr, lem_1_2},
      {{"thm-1.5", "d(N) = hdim(M/N) satisfies the Camps-Dicks axioms"}, nullptr, thm_1_5},
      {{"rem-1.6", "hdim under quotients, small quotients and direct sums"}, nullptr, rem_1_6},
      {{"prop-2.2", "M/N semisimple iff M = M1 ⊕ M2 with N ⊴ M2"}, nullptr, prop_2_2},
      {{"prop-2.5", "weak supplements pass to factors, small covers and supplements"}, nullptr, prop_2_5},
      {{"cor-2.6", "Rad M = 0: weakly supplemented iff semisimple, hdim = length"}, nullptr, cor_2_6},
      {{"lem-2.7", "a weak supplement of M1 + K yields one of K"}, nullptr, lem_2_7},
      {{"prop-2.8", "M1 + M2 = M weakly supplemented"}, nullptr, prop_2_8},
      {{"thm-2.10", "hdim(M) = length(M/Rad M)"}, nullptr, thm_2_10},
      {{"thm-3.1", "every quotient of M and M ⊕ M is semilocal"}, nullptr, thm_3_1},
      {{"cor-3.2", "hdim(_R R) = length(R/J) = hdim(R_R)"}, cor_3_2, nullptr},
      {{"lem-3.4", "Ra ∩ Rb = Rab for b = 1 - ra"}, lem_3_4, nullptr},
      {{"thm-3.5", "element d-function axioms; products of simples semisimple"}, thm_3_5, nullptr},
      {{"cor-3.7", "R^k → M ⊕ R^k/L is a small epimorphism"}, nullptr, cor_3_7},
      {{"thm-3.9", "hdim(M) = hdim(End M) for self-projective M; End of a simple is a division ring"},
       thm_3_9_ring, thm_3_9_module},
      {{"prop-3.13", "R/J regular iff principal ideals have weak supplements"}, prop_3_13, nullptr},
      {{"prop-3.14", "hdim(M) = udim(Hom(M,Q) over End Q), Q an injective cogenerator"}, nullptr, prop_3_14},
      {{"thm-3.15", "hdim of R over End(R) = length(R/J), R quasi-Frobenius"}, thm_3_15, nullptr},
      {{"good-module", "f(Rad M) = Rad f(M) for every f: M → N"}, nullptr, good_module},
      {{"lattice-oracles", "N ≪ M iff N ⊆ Rad M; N ⊴ M iff Soc M ⊆ N; complements; modularity"}, nullptr,
       lattice_oracles},
      {{"goldens", "stored expected values match recomputation"}, ring_goldens, module_goldens},
  };
  return v;
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : workers) t.join();
}

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const CapExceeded& e) {
    return skip(std::string("cap exceeded: ") + e.what());
  } catch (const std::exception& e) {
    return fail(std::string("error: ") + e.what());
  }
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> c = [] {
    std::vector<TheoremInfo> out;
    for (const auto& v : verifiers()) out.push_back(v.info);
    return out;
  }();
  return c;
}

namespace {

// Spelled-out prefixes accepted in filters, e.g. "lemma-3.4" for "lem-3.4".
constexpr std::pair<const char*, const char*> kLongPrefixes[] = {
    {"theorem-", "thm-"}, {"lemma-", "lem-"}, {"proposition-", "prop-"},
    {"corollary-", "cor-"}, {"remark-", "rem-"},
};

}  // namespace

std::vector<std::string> parse_theorem_filter(std::string_view text) {
  std::set<std::string> wanted;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string id(text.substr(start, end - start));
    while (!id.empty() && id.front() == ' ') id.erase(id.begin());
    while (!id.empty() && id.back() == ' ') id.pop_back();
    for (const auto& [full, brief] : kLongPrefixes)
      if (id.rfind(full, 0) == 0) {
        id = brief + id.substr(std::string_view(full).size());
        break;
      }
    if (!id.empty()) wanted.insert(id);
    start = end + 1;
  }
  if (wanted.empty()) throw InvalidInput("empty theorem filter");
  std::vector<std::string> out;
  const bool all = wanted.erase("all") > 0;
  for (const auto& t : theorem_catalog())
    if (all || wanted.count(t.id)) {
      out.push_back(t.id);
      wanted.erase(t.id);
    }
  if (!wanted.empty()) throw InvalidInput("unknown theorem id \"" + *wanted.begin() + "\"");
  return out;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

Json VerificationReport::body() const {
  Json results_json = Json::array();
  std::map<std::string, std::map<std::string, std::size_t>> by_theorem;
  for (const auto& r : results) {
    const std::string digest = hex64(fnv1a(r.theorem + "\n" + r.instance + "\n" + to_string(r.status) + "\n" + r.detail));
    results_json.push_back({{"theorem", r.theorem},
                            {"instance", r.instance},
                            {"status", to_string(r.status)},
                            {"detail", r.detail},
                            {"digest", digest}});
    ++by_theorem[r.theorem][to_string(r.status)];
  }
  Json per = Json::object();
  for (const auto& [id, counts] : by_theorem) {
    Json c = {{"pass", 0}, {"fail", 0}, {"skip", 0}};
    for (const auto& [k, v] : counts) c[k] = v;
    per[id] = c;
  }
  const Caps& c = caps();
  return {
      {"schema", "modlat-report/1"},
      {"tool", {{"name", "modlat"}, {"version", MODLAT_VERSION}}},
      {"config",
       {{"corpus", corpus},
        {"theorems", theorems},
        {"caps", {{"elements", c.elements}, {"lattice", c.lattice}, {"homs", c.homs}}},
        {"bounds", {{"max_pair_order", kMaxPairOrder}, {"max_end_order", kMaxEndOrder}}}}},
      {"summary",
       {{"total", results.size()},
        {"pass", count(Status::pass)},
        {"fail", count(Status::fail)},
        {"skip", count(Status::skip)}}},
      {"by_theorem", per},
      {"results", results_json},
  };
}

Json VerificationReport::to_json() const {
  Json out = body();
  Json tasks = Json::array();
  for (const auto& r : results) tasks.push_back({{"theorem", r.theorem}, {"instance", r.instance}, {"seconds", r.seconds}});
  out["timings"] = {{"total_seconds", total_seconds}, {"tasks", tasks}};
  return out;
}

VerificationReport run_verification(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& theorems,
                                    std::size_t jobs, const std::string& corpus_label) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const std::set<std::string> selected(theorems.begin(), theorems.end());

  // Phase 1: rings serially, then modules and their lattices in parallel.
  std::vector<std::unique_ptr<RingCtx>> rings;
  std::vector<std::pair<std::size_t, std::size_t>> module_slots;
  for (const CorpusEntry& e : corpus) {
    auto rc = std::make_unique<RingCtx>();
    rc->entry = &e;
    const Outcome o = guarded([&] {
      rc->ring = ring_from_spec(e.ring);
      return pass("");
    });
    if (o.status != Status::pass) rc->build_error = o;
    if (!rc->build_error) {
      rc->modules.resize(e.modules.size());
      for (std::size_t m = 0; m < e.modules.size(); ++m) {
        rc->modules[m].entry = &e.modules[m];
        module_slots.push_back({rings.size(), m});
      }
    }
    rings.push_back(std::move(rc));
  }
  parallel_for(module_slots.size(), jobs, [&](std::size_t i) {
    RingCtx& rc = *rings[module_slots[i].first];
    ModuleCtx& mc = rc.modules[module_slots[i].second];
    const Outcome o = guarded([&] {
      mc.module = module_from_spec(rc.ring, mc.entry->spec);
      mc.lat = SubmoduleLattice::build(mc.module);
      return pass("");
    });
    if (o.status != Status::pass) {
      mc.lat.reset();
      mc.build_error = o;
    }
  });

  // Phase 2: the task list in report order.
  struct Task {
    std::string theorem;
    std::string instance;
    std::function<Outcome()> run;
  };
  std::vector<Task> tasks;
  for (auto& rcp : rings) {
    RingCtx& rc = *rcp;
    const std::string& rid = rc.entry->id;
    if (rc.build_error) {
      const Outcome o = *rc.build_error;
      tasks.push_back({"corpus", rid, [o] { return o; }});
      continue;
    }
    for (ModuleCtx& mc : rc.modules)
      if (mc.build_error) {
        const Outcome o = *mc.build_error;
        tasks.push_back({"corpus", rid + "|" + mc.entry->id, [o] { return o; }});
      }
    for (const Verifier& v : verifiers()) {
      if (!selected.count(v.info.id)) continue;
      const bool goldens = v.info.id == "goldens";
      if (v.ring && (!goldens || has_goldens(rc.entry->expect)))
        tasks.push_back({v.info.id, rid, [&rc, f = v.ring] { return f(rc); }});
      if (v.module)
        for (ModuleCtx& mc : rc.modules) {
          if (!mc.lat || (goldens && !has_goldens(*mc.entry))) continue;
          tasks.push_back({v.info.id, rid + "|" + mc.entry->id, [&rc, &mc, f = v.module] { return f(rc, mc); }});
        }
    }
  }

  VerificationReport report;
  report.corpus = corpus_label;
  report.theorems = theorems;
  report.results.resize(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    const auto t0 = Clock::now();
    const Outcome o = guarded(tasks[i].run);
    TaskResult& r = report.results[i];
    r.theorem = tasks[i].theorem;
    r.instance = tasks[i].instance;
    r.status = o.status;
    r.detail = o.detail;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  });
  report.total_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return report;
}

}  // namespace modlat::harness
