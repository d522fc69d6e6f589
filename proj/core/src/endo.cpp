#include "modlat/endo.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "modlat/caps.hpp"
#include "modlat/dimension.hpp"
#include "modlat/error.hpp"
#include "modlat/ringclass.hpp"
#include "modlat/supplements.hpp"
#include "modlat/validate.hpp"

namespace modlat {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

std::string members_string(const Submodule& n) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  n.members().for_each([&](Index i) {
    os << (first ? "" : ",") << i;
    first = false;
  });
  os << '}';
  return os.str();
}

std::string images_string(const ModuleHom& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.images.size(); ++i) os << (i ? "," : "") << f.images[i];
  os << ']';
  return os.str();
}

// Depth-first extension along the generators. At depth j the partial map is
// defined exactly on S_j = <g_0..g_{j-1}>, listed in `domain`.
class HomEnumerator {
 public:
  HomEnumerator(const ModulePtr& m, const ModulePtr& n, const std::vector<Index>& gens)
      : m_(m), n_(n), gens_(gens), cap_(caps().homs) {}

  std::vector<ModuleHom> run() {
    std::vector<Index> images(m_->order(), kUnset);
    images[m_->zero()] = n_->zero();
    extend(0, images, {m_->zero()});
    return std::move(out_);
  }

 private:
  void extend(std::size_t j, const std::vector<Index>& images, const std::vector<Index>& domain) {
    if (j == gens_.size()) {
      out_.push_back({m_, n_, images});
      if (out_.size() > cap_)
        throw CapExceeded("hom_set: more than " + std::to_string(cap_) + " maps " + m_->name() + " → " + n_->name());
      return;
    }
    const FiniteModule& m = *m_;
    const FiniteModule& n = *n_;
    const std::size_t ring_order = m.ring()->order();
    const Index g = gens_[j];
    for (Index y = 0; y < n.order(); ++y) {
      std::vector<Index> next = images;
      std::vector<Index> next_domain = domain;
      bool ok = true;
      for (std::size_t k = 0; k < domain.size() && ok; ++k) {
        const Index s = domain[k];
        for (Index r = 0; r < ring_order; ++r) {
          const Index x = m.add(s, m.act(r, g));
          const Index v = n.add(images[s], n.act(r, y));
          if (next[x] == kUnset) {
            next[x] = v;
            next_domain.push_back(x);
          } else if (next[x] != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok) extend(j + 1, next, next_domain);
    }
  }

  ModulePtr m_;
  ModulePtr n_;
  const std::vector<Index>& gens_;
  std::size_t cap_;
  std::vector<ModuleHom> out_;
};

std::size_t find_key(const HomSet& h, const std::vector<Index>& key) {
  auto it = std::lower_bound(h.maps.begin(), h.maps.end(), key,
                             [&](const ModuleHom& f, const std::vector<Index>& k) { return h.key(f) < k; });
  if (it == h.maps.end() || h.key(*it) != key) throw InvalidInput("hom_set: map is not a member");
  return static_cast<std::size_t>(it - h.maps.begin());
}

void check_same_category(const FiniteModule& a, const FiniteModule& b, const char* where) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw InvalidInput(std::string(where) + ": modules over different rings");
  if (a.side() != b.side()) throw InvalidInput(std::string(where) + ": modules on different sides");
}

// Module on the carrier of `carrier`, with act(s, h) given as a generator key.
ModulePtr module_on_homs(const HomSet& carrier, const RingPtr& ring, Side side, std::string name,
                         const std::function<std::vector<Index>(std::size_t, std::size_t)>& act_key) {
  const std::size_t n = carrier.size();
  const FiniteModule& t = *carrier.target;
  std::vector<Index> add(n * n);
  std::vector<Index> key(carrier.generators.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t g = 0; g < key.size(); ++g) {
        const Index x = carrier.generators[g];
        key[g] = t.add(carrier.maps[i](x), carrier.maps[j](x));
      }
      add[i * n + j] = static_cast<Index>(find_key(carrier, key));
    }
  std::vector<Index> act(ring->order() * n);
  for (std::size_t s = 0; s < ring->order(); ++s)
    for (std::size_t h = 0; h < n; ++h) act[s * n + h] = static_cast<Index>(find_key(carrier, act_key(s, h)));
  auto mod = FiniteModule::from_tables_unchecked(ring, side, std::move(name), n, std::move(add),
                                                 static_cast<Index>(carrier.zero_index()), std::move(act));
  if (auto v = validate(*mod); !v.empty())
    throw InternalInconsistency("hom module '" + mod->name() + "': " + v.front().to_string());
  return mod;
}

std::size_t hdim_of(const ModulePtr& m) { return hollow_dimension(SubmoduleLattice::build(m)).value; }

}  // namespace

std::vector<Index> HomSet::key(const ModuleHom& f) const {
  std::vector<Index> k(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) k[i] = f(generators[i]);
  return k;
}

std::size_t HomSet::index_of(const ModuleHom& f) const { return find_key(*this, key(f)); }

std::size_t HomSet::zero_index() const { return index_of(ModuleHom::zero(source, target)); }

HomSet hom_set(const ModulePtr& m, const ModulePtr& n) {
  check_same_category(*m, *n, "hom_set");
  HomSet h;
  h.source = m;
  h.target = n;
  h.generators = greedy_generators(*m);
  h.maps = HomEnumerator(m, n, h.generators).run();
  return h;
}

Endomorphisms endomorphisms(const ModulePtr& m) {
  Endomorphisms e;
  e.homs = hom_set(m, m);
  const HomSet& h = e.homs;
  const std::size_t n = h.size();
  if (n > caps().elements)
    throw CapExceeded("endomorphisms: End(" + m->name() + ") has " + std::to_string(n) + " elements, above the cap " +
                      std::to_string(caps().elements));
  const FiniteModule& mm = *m;
  std::vector<Index> add(n * n), mul(n * n), key(h.generators.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t g = 0; g < key.size(); ++g) key[g] = mm.add(h.maps[i](h.generators[g]), h.maps[j](h.generators[g]));
      add[i * n + j] = static_cast<Index>(find_key(h, key));
      for (std::size_t g = 0; g < key.size(); ++g) key[g] = h.maps[j](h.maps[i](h.generators[g]));
      mul[i * n + j] = static_cast<Index>(find_key(h, key));
    }
  e.ring = FiniteRing::from_tables_unchecked("End(" + m->name() + ")", n, std::move(add), std::move(mul),
                                             static_cast<Index>(h.zero_index()),
                                             static_cast<Index>(h.index_of(ModuleHom::identity(m))));
  if (auto v = validate(*e.ring); !v.empty())
    throw InternalInconsistency("endomorphisms: End(" + m->name() + ") is not a ring: " + v.front().to_string());
  return e;
}

bool is_division_ring(const FiniteRing& r) {
  if (r.order() < 2) return false;
  for (Index a = 0; a < r.order(); ++a)
    if (a != r.zero() && !r.is_unit(a)) return false;
  return true;
}

SelfProjectivity is_self_projective(const ModulePtr& m) {
  const auto lat = SubmoduleLattice::build(m);
  const HomSet ends = hom_set(m, m);
  SelfProjectivity out;
  for (const Submodule& n : lat.nodes()) {
    const Quotient q = quotient_module(m, n);
    const HomSet to_q = hom_set(m, q.module);
    // Both hom-sets share M's generators, so π∘f is keyed by π(f(g)).
    std::vector<bool> lifted(to_q.size(), false);
    std::vector<Index> key(ends.generators.size());
    for (const ModuleHom& f : ends.maps) {
      for (std::size_t g = 0; g < key.size(); ++g) key[g] = q.projection(f(ends.generators[g]));
      lifted[find_key(to_q, key)] = true;
    }
    auto miss = std::find(lifted.begin(), lifted.end(), false);
    if (miss != lifted.end()) {
      out.holds = false;
      out.kernel = n;
      out.unlifted = to_q.maps[static_cast<std::size_t>(miss - lifted.begin())];
      return out;
    }
  }
  return out;
}

DualityReport verify_takeuchi(const ModulePtr& m) {
  DualityReport out;
  const SelfProjectivity sp = is_self_projective(m);
  if (!sp.holds) {
    out.applicable = false;
    out.skip_reason = "not self-projective: M → M/N with N = " + members_string(*sp.kernel) + ", map " +
                      images_string(*sp.unlifted) + " does not lift";
    return out;
  }
  const Endomorphisms e = endomorphisms(m);
  const std::size_t left = hdim_of(regular_module(e.ring, Side::left));
  const std::size_t right = hdim_of(regular_module(e.ring, Side::right));
  if (left != right) throw InternalInconsistency("verify_takeuchi: hdim of End(M) differs by side");
  out.lhs = hdim_of(m);
  out.rhs = left;
  out.holds = out.lhs == out.rhs;
  return out;
}

DualityReport verify_projective_generator_bound(const ModulePtr& m) {
  const ModulePtr p = regular_module(m->ring(), m->side());
  const Endomorphisms ep = endomorphisms(p);
  const HomSet h = hom_set(p, m);
  // Left End(P)-module by precomposition: s·h = h∘s.
  auto act_key = [&](std::size_t s, std::size_t hi) {
    std::vector<Index> key(h.generators.size());
    for (std::size_t g = 0; g < key.size(); ++g) key[g] = h.maps[hi](ep.homs.maps[s](h.generators[g]));
    return key;
  };
  const auto mod = module_on_homs(h, ep.ring, Side::left, "Hom(R," + m->name() + ")", act_key);
  DualityReport out;
  out.lhs = hdim_of(m);
  out.rhs = hdim_of(mod);
  out.holds = out.lhs <= out.rhs;
  return out;
}

Injectivity is_injective(const ModulePtr& q) {
  const ModulePtr reg = regular_module(q->ring(), q->side());
  const auto lat = SubmoduleLattice::build(reg);
  Injectivity out;
  for (const Submodule& ideal : lat.nodes()) {
    const SubmoduleView view = submodule_module(reg, ideal);
    const HomSet h = hom_set(view.module, q);
    for (const ModuleHom& f : h.maps) {
      bool extends = false;
      for (Index c = 0; c < q->order() && !extends; ++c) {
        extends = true;
        for (Index i = 0; i < view.module->order() && extends; ++i)
          extends = f(i) == q->act(view.inclusion(i), c);
      }
      if (!extends) {
        out.holds = false;
        out.ideal = ideal;
        out.unextended = f;
        return out;
      }
    }
  }
  return out;
}

Cogeneration is_cogenerator(const ModulePtr& q) {
  const ModulePtr reg = regular_module(q->ring(), q->side());
  const auto lat = SubmoduleLattice::build(reg);
  Cogeneration out;
  for (std::size_t k : lat.maximal()) {
    const HomSet h = hom_set(quotient_module(reg, lat.node(k)).module, q);
    if (std::none_of(h.maps.begin(), h.maps.end(), [](const ModuleHom& f) { return f.is_injective(); })) {
      out.holds = false;
      out.missing = lat.node(k);
      return out;
    }
  }
  return out;
}

BimoduleView hom_bimodule(const ModulePtr& m, const ModulePtr& q) {
  BimoduleView v;
  v.carrier = hom_set(m, q);
  v.endo = endomorphisms(q);
  auto act_key = [&](std::size_t t, std::size_t hi) {
    std::vector<Index> key(v.carrier.generators.size());
    for (std::size_t g = 0; g < key.size(); ++g) key[g] = v.endo.homs.maps[t](v.carrier.maps[hi](v.carrier.generators[g]));
    return key;
  };
  v.module = module_on_homs(v.carrier, v.endo.ring, Side::right, "Hom(" + m->name() + "," + q->name() + ")", act_key);
  return v;
}

ModulePtr module_over_endomorphisms(const ModulePtr& m, const Endomorphisms& e) {
  const std::size_t n = m->order();
  std::vector<Index> act(e.ring->order() * n);
  for (std::size_t s = 0; s < e.ring->order(); ++s)
    for (Index x = 0; x < n; ++x) act[s * n + x] = e.homs.maps[s](x);
  auto mod = FiniteModule::from_tables_unchecked(e.ring, Side::right, m->name() + "_End", n, m->add_table(),
                                                 m->zero(), std::move(act));
  if (auto v = validate(*mod); !v.empty())
    throw InternalInconsistency("module_over_endomorphisms: " + v.front().to_string());
  return mod;
}

DualityReport verify_page(const ModulePtr& m, const ModulePtr& q) {
  check_same_category(*m, *q, "verify_page");
  if (!is_injective(q).holds) throw InvalidInput("verify_page: Q is not injective");
  if (!is_cogenerator(q).holds) throw InvalidInput("verify_page: Q is not a cogenerator");
  const BimoduleView view = hom_bimodule(m, q);
  DualityReport out;
  out.lhs = hdim_of(m);
  out.rhs = uniform_dimension(SubmoduleLattice::build(view.module)).value;
  out.holds = out.lhs == out.rhs;
  return out;
}

DualityReport verify_qf_generator(const RingPtr& r) {
  DualityReport out;
  const ModulePtr reg = regular_module(r, Side::left);
  const Injectivity inj = is_injective(reg);
  if (!inj.holds) {
    out.applicable = false;
    out.skip_reason = "not quasi-Frobenius: map " + images_string(*inj.unextended) + " on ideal " +
                      members_string(*inj.ideal) + " does not extend";
    return out;
  }
  const Cogeneration cog = is_cogenerator(reg);
  if (!cog.holds) {
    out.applicable = false;
    out.skip_reason = "not quasi-Frobenius: R/K does not embed for K = " + members_string(*cog.missing);
    return out;
  }
  const Endomorphisms e = endomorphisms(reg);
  out.lhs = hdim_of(module_over_endomorphisms(reg, e));
  out.rhs = length(SubmoduleLattice::build(quotient_module(reg, jacobson_radical(r)).module));
  out.holds = out.lhs == out.rhs;
  return out;
}

GoodModuleReport verify_good_module(const SubmoduleLattice& source, const SubmoduleLattice& target) {
  const Submodule rad = radical(source);
  const HomSet h = hom_set(source.module(), target.module());
  GoodModuleReport out;
  for (const ModuleHom& f : h.maps) {
    ++out.checked;
    const std::size_t img = target.index_of(f.image());
    Submodule rad_img = target.node(img);
    for (std::size_t c : target.lower_covers(img)) rad_img = rad_img & target.node(c);
    if (f.image_of(rad) != rad_img && !out.counterexample) out.counterexample = f;
  }
  return out;
}

QuotientSweep verify_quotients_semilocal(const ModulePtr& m, std::size_t max_power) {
  QuotientSweep out;
  for (std::size_t k = 1; k <= max_power; ++k) {
    const std::vector<ModulePtr> parts(k, m);
    const ModulePtr sum = direct_sum(m->ring(), m->side(), parts).module;
    const auto lat = SubmoduleLattice::build(sum);
    for (const Submodule& n : lat.nodes()) {
      ++out.checked;
      if (!is_semilocal_module(SubmoduleLattice::build(quotient_module(sum, n).module)) && !out.counterexample) {
        out.counterexample = n;
        out.power = k;
      }
    }
  }
  return out;
}

}  // namespace modlat
