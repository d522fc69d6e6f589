#include "modlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "modlat/caps.hpp"
#include "modlat/error.hpp"

namespace modlat {

namespace {

// Adds the cosets a + c for c in `adds` to `acc`, where `acc` already
// contains the submodule whose members are `a_members`.
void absorb_cosets(const FiniteModule& m, ElementSet& acc, const std::vector<Index>& a_members,
                   const std::vector<Index>& adds) {
  for (auto c : adds) {
    if (acc.contains(c)) continue;
    for (auto a : a_members) acc.insert(m.add(a, c));
  }
}

std::vector<Index> orbit(const FiniteModule& m, Index x) {
  ElementSet s(m.order());
  for (Index r = 0; r < m.ring()->order(); ++r) s.insert(m.act(r, x));
  return s.members();
}

}  // namespace

Submodule cyclic_submodule(const FiniteModule& m, Index x) {
  ElementSet s(m.order());
  for (Index r = 0; r < m.ring()->order(); ++r) s.insert(m.act(r, x));
  return Submodule(std::move(s));
}

Submodule submodule_sum(const FiniteModule& m, const Submodule& a, const Submodule& b) {
  // Iterate over the smaller side's cosets.
  const Submodule& big = a.size() >= b.size() ? a : b;
  const Submodule& small = a.size() >= b.size() ? b : a;
  ElementSet acc = big.members();
  absorb_cosets(m, acc, big.members().members(), small.members().members());
  return Submodule(std::move(acc));
}

Submodule generated_submodule(const FiniteModule& m, std::span<const Index> gens) {
  Submodule acc = Submodule::zero(m);
  for (auto g : gens) {
    if (acc.contains(g)) continue;
    ElementSet s = acc.members();
    absorb_cosets(m, s, acc.members().members(), orbit(m, g));
    acc = Submodule(std::move(s));
  }
  return acc;
}

SubmoduleLattice SubmoduleLattice::build(ModulePtr mp) {
  const FiniteModule& m = *mp;
  const std::size_t n = m.order();
  const std::size_t cap = caps().lattice;

  std::vector<std::vector<Index>> orbits(n);
  for (Index x = 0; x < n; ++x) orbits[x] = orbit(m, x);

  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> where;
  std::vector<std::vector<std::size_t>> joins;  // distinct N + Rx per node, insertion ids
  auto insert = [&](ElementSet s) -> std::size_t {
    auto [it, fresh] = where.emplace(s, found.size());
    if (fresh) {
      if (found.size() >= cap) {
        std::ostringstream os;
        os << "submodule lattice of '" << m.name() << "' exceeds the lattice cap " << cap;
        throw CapExceeded(os.str());
      }
      found.push_back(std::move(s));
      joins.emplace_back();
    }
    return it->second;
  };

  ElementSet zero(n);
  zero.insert(m.zero());
  insert(std::move(zero));

  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::vector<Index> members = found[i].members();
    ElementSet seen = found[i];
    std::vector<std::size_t> out;
    for (Index x = 0; x < n; ++x) {
      if (seen.contains(x)) continue;
      // N + Rx only depends on the coset x + N.
      for (auto a : members) seen.insert(m.add(a, x));
      ElementSet j = found[i];
      absorb_cosets(m, j, members, orbits[x]);
      out.push_back(insert(std::move(j)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    joins[i] = std::move(out);
  }

  // Canonical order and index remap.
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  SubmoduleLattice lat;
  lat.module_ = std::move(mp);
  lat.nodes_.reserve(found.size());
  for (auto id : order) lat.nodes_.emplace_back(std::move(found[id]));
  for (std::size_t k = 0; k < lat.nodes_.size(); ++k) lat.index_.emplace(lat.nodes_[k].members(), k);

  // Every upper cover of N has the form N + Rx, so the covers are the
  // inclusion-minimal members of the join list.
  lat.upper_.assign(lat.nodes_.size(), {});
  lat.lower_.assign(lat.nodes_.size(), {});
  for (std::size_t id = 0; id < joins.size(); ++id) {
    const std::size_t i = rank[id];
    std::vector<std::size_t> cand;
    for (auto j : joins[id]) cand.push_back(rank[j]);
    std::sort(cand.begin(), cand.end());
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cand.size() && minimal; ++b)
        if (b != a && lat.nodes_[cand[b]].size() < lat.nodes_[cand[a]].size() &&
            lat.nodes_[cand[b]].is_subset_of(lat.nodes_[cand[a]]))
          minimal = false;
      if (minimal) lat.upper_[i].push_back(cand[a]);
    }
  }
  for (std::size_t i = 0; i < lat.upper_.size(); ++i)
    for (auto j : lat.upper_[i]) lat.lower_[j].push_back(i);
  return lat;
}

std::optional<std::size_t> SubmoduleLattice::find(const Submodule& n) const {
  auto it = index_.find(n.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubmoduleLattice::index_of(const Submodule& n) const {
  auto i = find(n);
  if (!i) throw InvalidInput("set is not a submodule of '" + module_->name() + "'");
  return *i;
}

std::size_t SubmoduleLattice::meet(std::size_t a, std::size_t b) const { return index_of(nodes_[a] & nodes_[b]); }

std::size_t SubmoduleLattice::join(std::size_t a, std::size_t b) const {
  return index_of(submodule_sum(*module_, nodes_[a], nodes_[b]));
}

std::vector<std::size_t> SubmoduleLattice::below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= i; ++k)
    if (nodes_[k].is_subset_of(nodes_[i])) out.push_back(k);
  return out;
}

std::optional<std::size_t> supplement_witness(const SubmoduleLattice& lat, const Submodule& n) {
  for (std::size_t l = 0; l < lat.top(); ++l)
    if (sums_to_whole(*lat.module(), n, lat.node(l))) return l;
  return std::nullopt;
}

bool is_small(const SubmoduleLattice& lat, const Submodule& n) { return !supplement_witness(lat, n).has_value(); }

bool is_essential(const SubmoduleLattice& lat, const Submodule& n) {
  for (std::size_t l = 1; l < lat.size(); ++l)
    if (n.members().intersection_size(lat.node(l).members()) <= 1) return false;
  return true;
}

Submodule complement_of(const SubmoduleLattice& lat, const Submodule& n) {
  std::vector<std::size_t> cand;
  for (std::size_t l = 0; l < lat.size(); ++l)
    if (n.members().intersection_size(lat.node(l).members()) == 1) cand.push_back(l);
  for (auto c : cand) {
    bool maximal = true;
    for (auto d : cand)
      if (d > c && lat.node(d).size() > lat.node(c).size() && lat.node(c).is_subset_of(lat.node(d))) {
        maximal = false;
        break;
      }
    if (maximal) return lat.node(c);
  }
  return Submodule::zero(*lat.module());  // unreachable: {0} is always a candidate
}

CoindependenceCheck is_coindependent(const SubmoduleLattice& lat, std::span<const Submodule> family,
                                     CoindependenceMode mode) {
  const FiniteModule& m = *lat.module();
  CoindependenceCheck out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].size() == m.order()) {
      out.coindependent = false;
      out.member = i;
      out.reason = "member " + std::to_string(i) + " is not a proper submodule";
      return out;
    }
  }
  const std::size_t k = family.size();
  auto fail = [&](std::size_t lambda, std::vector<std::size_t> subset) {
    out.coindependent = false;
    out.member = lambda;
    out.subset = std::move(subset);
    out.reason = "K_" + std::to_string(lambda) + " + intersection of the chosen others is not M";
    return out;
  };
  for (std::size_t lambda = 0; lambda < k; ++lambda) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < k; ++j)
      if (j != lambda) others.push_back(j);
    if (mode == CoindependenceMode::monotone) {
      if (others.empty()) continue;  // J = ∅: K + M = M
      Submodule inter = family[others.front()];
      for (auto j : others) inter = inter & family[j];
      if (!sums_to_whole(m, family[lambda], inter)) return fail(lambda, others);
    } else {
      if (others.size() > 20) throw CapExceeded("full coindependence check limited to 21 members");
      const std::size_t subsets = std::size_t{1} << others.size();
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        Submodule inter = Submodule::whole(m);
        std::vector<std::size_t> chosen;
        for (std::size_t b = 0; b < others.size(); ++b)
          if (mask >> b & 1) {
            inter = inter & family[others[b]];
            chosen.push_back(others[b]);
          }
        if (!sums_to_whole(m, family[lambda], inter)) return fail(lambda, chosen);
      }
    }
  }
  return out;
}

std::vector<GeneratedMember> refine_coindependent_fg(const SubmoduleLattice& lat, std::span<const Submodule> family) {
  const FiniteModule& m = *lat.module();
  if (!is_coindependent(lat, family).coindependent)
    throw InvalidInput("refine_coindependent_fg: input family is not coindependent");
  const std::size_t k = family.size();

  struct Part {
    Submodule sub;
    std::vector<Index> gens;
  };
  std::vector<Part> xs, ys;
  for (std::size_t i = 0; i < k; ++i) {
    Submodule rest = Submodule::whole(m);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) rest = rest & family[j];
    Part x{Submodule::zero(m), {}}, y{Submodule::zero(m), {}};
    // Greedy: the element with the largest closure gain, ties by index.
    while (submodule_sum(m, x.sub, y.sub).size() != m.order()) {
      const Submodule current = submodule_sum(m, x.sub, y.sub);
      Index best = 0;
      std::size_t best_size = 0;
      for (Index g = 0; g < m.order(); ++g) {
        if (current.contains(g) || !(family[i].contains(g) || rest.contains(g))) continue;
        const std::size_t sz = submodule_sum(m, current, cyclic_submodule(m, g)).size();
        if (sz > best_size) {
          best_size = sz;
          best = g;
        }
      }
      Part& target = family[i].contains(best) ? x : y;
      target.gens.push_back(best);
      target.sub = submodule_sum(m, target.sub, cyclic_submodule(m, best));
    }
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }

  std::vector<GeneratedMember> out;
  std::vector<Submodule> refined;
  for (std::size_t i = 0; i < k; ++i) {
    GeneratedMember g{xs[i].sub, xs[i].gens};
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      g.submodule = submodule_sum(m, g.submodule, ys[j].sub);
      g.generators.insert(g.generators.end(), ys[j].gens.begin(), ys[j].gens.end());
    }
    std::sort(g.generators.begin(), g.generators.end());
    g.generators.erase(std::unique(g.generators.begin(), g.generators.end()), g.generators.end());
    if (!g.submodule.is_subset_of(family[i]) || generated_submodule(m, g.generators) != g.submodule)
      throw InternalInconsistency("refine_coindependent_fg: refined member escapes its original");
    refined.push_back(g.submodule);
    out.push_back(std::move(g));
  }
  if (!is_coindependent(lat, refined).coindependent)
    throw InternalInconsistency("refine_coindependent_fg: refined family is not coindependent");
  return out;
}

std::optional<std::vector<std::size_t>> modularity_counterexample(const SubmoduleLattice& lat,
                                                                   std::size_t max_triples) {
  std::size_t count = 0;
  for (std::size_t c = 0; c < lat.size(); ++c)
    for (std::size_t a = 0; a <= c; ++a) {
      if (!lat.node(a).is_subset_of(lat.node(c))) continue;
      for (std::size_t b = 0; b < lat.size(); ++b) {
        if (count++ >= max_triples) return std::nullopt;
        const auto lhs = lat.join(a, lat.meet(b, c));
        const auto rhs = lat.meet(lat.join(a, b), c);
        if (lhs != rhs) return std::vector<std::size_t>{a, b, c};
      }
    }
  return std::nullopt;
}

void write_dot(std::ostream& os, const SubmoduleLattice& lat, const std::string& graph_name) {
  const FiniteModule& m = *lat.module();
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    ElementSet nz = lat.node(i).members();
    nz.erase(m.zero());
    os << "  n" << i << " [label=\"|N|=" << lat.node(i).size() << "\\nmin=";
    if (nz.empty()) os << m.zero();
    else os << nz.first();
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (auto j : lat.upper_covers(i)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
}

}  // namespace modlat
