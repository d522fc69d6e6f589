#include "modlat/dimension.hpp"

#include <algorithm>
#include <functional>

#include "modlat/error.hpp"

namespace modlat {

Submodule radical(const SubmoduleLattice& lat) {
  Submodule r = lat.node(lat.top());
  for (auto k : lat.maximal()) r = r & lat.node(k);
  return r;
}

Submodule socle(const SubmoduleLattice& lat) {
  Submodule s = lat.node(lat.bottom());
  for (auto k : lat.minimal()) s = submodule_sum(*lat.module(), s, lat.node(k));
  return s;
}

bool is_semisimple(const SubmoduleLattice& lat) {
  bool every_node_complemented = true;
  for (std::size_t n = 0; n < lat.size() && every_node_complemented; ++n) {
    bool found = false;
    for (std::size_t l = 0; l < lat.size() && !found; ++l)
      found = lat.node(n).members().intersection_size(lat.node(l).members()) == 1 && lat.sums_to_whole(n, l);
    every_node_complemented = found;
  }
  const bool socle_is_whole = socle(lat).size() == lat.module()->order();
  if (every_node_complemented != socle_is_whole)
    throw InternalInconsistency("is_semisimple: complement route and socle route disagree on '" +
                                lat.module()->name() + "'");
  return every_node_complemented;
}

std::size_t chain_length(const SubmoduleLattice& lat, std::size_t from, std::size_t to, bool take_last) {
  if (!lat.node(from).is_subset_of(lat.node(to))) throw InvalidInput("chain_length: lower end is not below upper end");
  std::size_t steps = 0;
  std::size_t cur = from;
  while (cur != to) {
    std::optional<std::size_t> next;
    for (auto c : lat.upper_covers(cur)) {
      if (!lat.node(c).is_subset_of(lat.node(to))) continue;
      next = c;
      if (!take_last) break;
    }
    if (!next) throw InternalInconsistency("chain_length: interval has a dead end");
    cur = *next;
    ++steps;
  }
  return steps;
}

std::size_t length(const SubmoduleLattice& lat) {
  const auto first = chain_length(lat, lat.bottom(), lat.top(), false);
  const auto last = chain_length(lat, lat.bottom(), lat.top(), true);
  if (first != last)
    throw InternalInconsistency("length: maximal chains of different length in '" + lat.module()->name() + "'");
  return first;
}

UniformDimension uniform_dimension(const SubmoduleLattice& lat) {
  const FiniteModule& m = *lat.module();
  const Submodule soc = socle(lat);
  UniformDimension out;
  out.value = chain_length(lat, lat.bottom(), lat.index_of(soc));
  Submodule sum = Submodule::zero(m);
  for (auto s : lat.minimal()) {
    if (sum.members().intersection_size(lat.node(s).members()) != 1) continue;
    out.witness.push_back(lat.node(s));
    sum = submodule_sum(m, sum, lat.node(s));
  }
  if (out.witness.size() != out.value || sum != soc || !is_essential(lat, sum))
    throw InternalInconsistency("uniform_dimension: witness family does not match length(socle) on '" + m.name() + "'");
  return out;
}

std::size_t max_independent_family(const SubmoduleLattice& lat) {
  const FiniteModule& m = *lat.module();
  const auto& cands = lat.minimal();
  std::size_t best = 0;
  // A family is independent iff its sum has order equal to the product of orders.
  std::function<void(std::size_t, const Submodule&, std::size_t)> dfs = [&](std::size_t start, const Submodule& sum,
                                                                            std::size_t depth) {
    best = std::max(best, depth);
    for (std::size_t c = start; c < cands.size(); ++c) {
      if (depth + (cands.size() - c) <= best) return;
      const Submodule& s = lat.node(cands[c]);
      if (sum.members().intersection_size(s.members()) != 1) continue;
      dfs(c + 1, submodule_sum(m, sum, s), depth + 1);
    }
  };
  dfs(0, Submodule::zero(m), 0);
  return best;
}

HollowDecomposition hollow_decomposition(const SubmoduleLattice& lat) {
  const FiniteModule& m = *lat.module();
  HollowDecomposition d;
  for (auto k : lat.maximal()) {
    d.family.push_back(lat.node(k));
    if (!is_coindependent(lat, d.family).coindependent) d.family.pop_back();
  }
  d.intersection = lat.node(lat.top());
  for (const auto& k : d.family) {
    d.intersection = d.intersection & k;
    auto q = quotient_module(lat.module(), k);
    d.quotient_hollow.push_back(is_hollow(SubmoduleLattice::build(q.module)));
  }
  const bool hollow_quotients = std::all_of(d.quotient_hollow.begin(), d.quotient_hollow.end(), [](bool b) { return b; });
  if (!hollow_quotients || !is_small(lat, d.intersection) || !is_coindependent(lat, d.family).coindependent)
    throw InternalInconsistency("hollow_decomposition: greedy family is not a decomposition of '" + m.name() + "'");
  return d;
}

std::size_t max_coindependent_family(const SubmoduleLattice& lat, CoindependentSearchSpace space) {
  const FiniteModule& m = *lat.module();
  std::vector<std::size_t> cands;
  if (space == CoindependentSearchSpace::maximal) {
    cands = lat.maximal();
  } else {
    for (std::size_t i = 0; i < lat.top(); ++i) cands.push_back(i);
  }
  std::size_t best = 0;
  std::vector<std::size_t> family;
  auto extends = [&](std::size_t c) {
    // Coindependence of family ∪ {c}: each member plus the meet of the others is M.
    std::vector<std::size_t> all = family;
    all.push_back(c);
    for (std::size_t lambda = 0; lambda < all.size(); ++lambda) {
      Submodule inter = lat.node(lat.top());
      for (std::size_t j = 0; j < all.size(); ++j)
        if (j != lambda) inter = inter & lat.node(all[j]);
      if (!sums_to_whole(m, lat.node(all[lambda]), inter)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    best = std::max(best, family.size());
    for (std::size_t c = start; c < cands.size(); ++c) {
      if (family.size() + (cands.size() - c) <= best) return;
      if (!extends(cands[c])) continue;
      family.push_back(cands[c]);
      dfs(c + 1);
      family.pop_back();
    }
  };
  dfs(0);
  return best;
}

std::size_t radical_quotient_length(const SubmoduleLattice& lat) {
  auto q = quotient_module(lat.module(), radical(lat));
  return length(SubmoduleLattice::build(q.module));
}

HollowDimension hollow_dimension(const SubmoduleLattice& lat) {
  HollowDimension out;
  out.decomposition = hollow_decomposition(lat);
  const std::size_t a = out.decomposition.family.size();
  const std::size_t b = max_coindependent_family(lat);
  const std::size_t c = radical_quotient_length(lat);
  if (a != b || b != c)
    throw InternalInconsistency("hollow_dimension: algorithms disagree on '" + lat.module()->name() + "' (A=" +
                                std::to_string(a) + ", B=" + std::to_string(b) + ", C=" + std::to_string(c) + ")");
  out.value = a;
  return out;
}

bool is_hollow(const SubmoduleLattice& lat) {
  bool hollow = lat.module()->order() > 1;
  for (std::size_t n = 0; n < lat.top() && hollow; ++n) hollow = is_small(lat, lat.node(n));
  if (hollow != (radical_quotient_length(lat) == 1))
    throw InternalInconsistency("is_hollow: definition and hdim = 1 disagree on '" + lat.module()->name() + "'");
  return hollow;
}

bool is_uniform(const SubmoduleLattice& lat) {
  bool uniform = lat.module()->order() > 1;
  for (std::size_t n = 1; n < lat.size() && uniform; ++n) uniform = is_essential(lat, lat.node(n));
  if (uniform != (uniform_dimension(lat).value == 1))
    throw InternalInconsistency("is_uniform: definition and udim = 1 disagree on '" + lat.module()->name() + "'");
  return uniform;
}

std::size_t camps_dicks_d(const SubmoduleLattice& lat, const Submodule& n) {
  auto q = quotient_module(lat.module(), n);
  return hollow_dimension(SubmoduleLattice::build(q.module)).value;
}

std::vector<std::size_t> d_table(const SubmoduleLattice& lat) {
  std::vector<std::size_t> d(lat.size());
  for (std::size_t n = 0; n < lat.size(); ++n) {
    Submodule rad = lat.node(lat.top());
    for (auto k : lat.maximal())
      if (lat.node(n).is_subset_of(lat.node(k))) rad = rad & lat.node(k);
    d[n] = chain_length(lat, lat.index_of(rad), lat.top());
  }
  return d;
}

std::optional<DAxiomFailure> verify_d_axioms(const SubmoduleLattice& lat, std::size_t cross_check_limit) {
  const auto d = d_table(lat);
  if (lat.size() <= cross_check_limit) {
    for (std::size_t n = 0; n < lat.size(); ++n)
      if (camps_dicks_d(lat, lat.node(n)) != d[n])
        throw InternalInconsistency("verify_d_axioms: interval and quotient routes disagree on node " +
                                    std::to_string(n) + " of '" + lat.module()->name() + "'");
  }
  for (std::size_t n = 0; n < lat.size(); ++n)
    if (d[n] == 0 && n != lat.top()) return DAxiomFailure{n, n, "d(N) = 0 implies N = M"};
  for (std::size_t n = 0; n < lat.size(); ++n)
    for (std::size_t l = n; l < lat.size(); ++l) {
      if (!lat.sums_to_whole(n, l)) continue;
      if (d[lat.meet(n, l)] != d[n] + d[l]) return DAxiomFailure{n, l, "N + L = M implies d(N ∩ L) = d(N) + d(L)"};
    }
  return std::nullopt;
}

DimensionProfile dimension_profile(const SubmoduleLattice& lat) {
  DimensionProfile p;
  p.radical = radical(lat);
  p.socle = socle(lat);
  p.length = length(lat);
  p.udim = uniform_dimension(lat).value;
  p.hdim = hollow_dimension(lat).value;
  p.semisimple = is_semisimple(lat);
  p.hollow = is_hollow(lat);
  p.uniform = is_uniform(lat);
  return p;
}

}  // namespace modlat
