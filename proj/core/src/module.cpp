#include "modlat/module.hpp"

#include <sstream>

#include "modlat/caps.hpp"
#include "modlat/error.hpp"
#include "modlat/validate.hpp"

namespace modlat {

ModulePtr FiniteModule::from_tables_unchecked(RingPtr ring, Side side, std::string name, std::size_t order,
                                              std::vector<Index> add, Index zero, std::vector<Index> act) {
  if (order > caps().elements) {
    std::ostringstream os;
    os << "module '" << name << "': order " << order << " exceeds element cap " << caps().elements;
    throw CapExceeded(os.str());
  }
  if (add.size() != order * order || act.size() != ring->order() * order || zero >= order)
    throw InvalidInput("module '" + name + "': table shapes do not match the declared order");
  std::shared_ptr<FiniteModule> m(new FiniteModule());
  m->ring_ = std::move(ring);
  m->side_ = side;
  m->order_ = order;
  m->add_ = std::move(add);
  m->act_ = std::move(act);
  m->zero_ = zero;
  m->name_ = std::move(name);
  m->neg_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order && !found; ++b) {
      if (m->add_[a * order + b] == zero) {
        m->neg_[a] = static_cast<Index>(b);
        found = true;
      }
    }
    if (!found) throw InvalidInput("module '" + m->name_ + "': element " + std::to_string(a) + " has no additive inverse");
  }
  return m;
}

ModulePtr FiniteModule::renamed(std::string name) const {
  auto copy = std::shared_ptr<FiniteModule>(new FiniteModule(*this));
  copy->name_ = std::move(name);
  return copy;
}

Submodule ModuleHom::image() const {
  ElementSet s(target->order());
  for (auto y : images) s.insert(y);
  return Submodule(std::move(s));
}

Submodule ModuleHom::kernel() const {
  ElementSet s(source->order());
  for (Index m = 0; m < images.size(); ++m)
    if (images[m] == target->zero()) s.insert(m);
  return Submodule(std::move(s));
}

Submodule ModuleHom::image_of(const Submodule& n) const {
  ElementSet s(target->order());
  n.members().for_each([&](Index m) { s.insert(images[m]); });
  return Submodule(std::move(s));
}

Submodule ModuleHom::preimage(const Submodule& k) const {
  ElementSet s(source->order());
  for (Index m = 0; m < images.size(); ++m)
    if (k.contains(images[m])) s.insert(m);
  return Submodule(std::move(s));
}

ModuleHom ModuleHom::identity(const ModulePtr& m) {
  std::vector<Index> img(m->order());
  for (Index i = 0; i < img.size(); ++i) img[i] = i;
  return {m, m, std::move(img)};
}

ModuleHom ModuleHom::zero(const ModulePtr& source, const ModulePtr& target) {
  return {source, target, std::vector<Index>(source->order(), target->zero())};
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  std::vector<Index> img(f.images.size());
  for (std::size_t m = 0; m < img.size(); ++m) img[m] = g.images[f.images[m]];
  return {f.source, g.target, std::move(img)};
}

ModulePtr regular_module(const RingPtr& r, Side side) {
  const std::size_t n = r->order();
  std::vector<Index> act(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index m = 0; m < n; ++m) act[a * n + m] = side == Side::left ? r->mul(a, m) : r->mul(m, a);
  return FiniteModule::from_tables_unchecked(r, side, r->name() + (side == Side::left ? " (left regular)" : " (right regular)"),
                                             n, r->add_table(), r->zero(), std::move(act));
}

ModulePtr zero_module(const RingPtr& r, Side side) {
  return FiniteModule::from_tables_unchecked(r, side, "0", 1, {0}, 0, std::vector<Index>(r->order(), 0));
}

DirectSum direct_sum(const RingPtr& ring, Side side, std::span<const ModulePtr> parts) {
  std::string name;
  std::size_t order = 1;
  for (const auto& p : parts) {
    if (p->ring() != ring && !(*p->ring() == *ring))
      throw InvalidInput("direct sum: part '" + p->name() + "' is over a different ring");
    if (p->side() != side) throw InvalidInput("direct sum: part '" + p->name() + "' has a different side");
    name += (name.empty() ? "" : " + ") + p->name();
    if (order <= caps().elements) order *= p->order();
  }
  if (parts.empty()) name = "0";
  if (order > caps().elements) {
    std::ostringstream os;
    os << "direct sum '" << name << "': order exceeds element cap " << caps().elements;
    throw CapExceeded(os.str());
  }
  const std::size_t k = parts.size();
  std::vector<std::vector<Index>> digits(order, std::vector<Index>(k));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      digits[x][i] = static_cast<Index>(rest % parts[i]->order());
      rest /= parts[i]->order();
    }
  }
  auto enc = [&](const std::vector<Index>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * parts[i]->order() + d[i];
    return static_cast<Index>(x);
  };
  std::vector<Index> add(order * order), act(ring->order() * order), tmp(k);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = parts[i]->add(digits[a][i], digits[b][i]);
      add[a * order + b] = enc(tmp);
    }
  for (Index r = 0; r < ring->order(); ++r)
    for (std::size_t m = 0; m < order; ++m) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = parts[i]->act(r, digits[m][i]);
      act[r * order + m] = enc(tmp);
    }
  std::vector<Index> zero(k);
  for (std::size_t i = 0; i < k; ++i) zero[i] = parts[i]->zero();
  const Index zero_index = enc(zero);

  DirectSum out;
  out.module = FiniteModule::from_tables_unchecked(ring, side, parts.size() == 1 ? name : "(" + name + ")", order,
                                                   std::move(add), zero_index, std::move(act));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Index> emb(parts[i]->order());
    for (Index x = 0; x < emb.size(); ++x) {
      auto d = zero;
      d[i] = x;
      emb[x] = enc(d);
    }
    out.embeddings.push_back({parts[i], out.module, std::move(emb)});
    std::vector<Index> proj(order);
    for (std::size_t m = 0; m < order; ++m) proj[m] = digits[m][i];
    out.projections.push_back({out.module, parts[i], std::move(proj)});
  }
  return out;
}

DirectSum direct_sum(std::span<const ModulePtr> parts) {
  if (parts.empty()) throw InvalidInput("direct sum of no parts needs an explicit ring and side");
  return direct_sum(parts.front()->ring(), parts.front()->side(), parts);
}

Quotient quotient_module(const ModulePtr& m, const Submodule& n) {
  if (n.members().universe() != m->order() || !validate(*m, n).empty())
    throw InvalidInput("quotient: the given set is not a submodule of '" + m->name() + "'");
  const std::size_t order = m->order();
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> coset(order, unset);
  std::vector<Index> labels;
  const auto members = n.members().members();
  for (Index x = 0; x < order; ++x) {
    if (coset[x] != unset) continue;
    const auto id = static_cast<Index>(labels.size());
    labels.push_back(x);
    for (auto y : members) coset[m->add(x, y)] = id;
  }
  const std::size_t q = labels.size();
  const std::size_t rn = m->ring()->order();
  std::vector<Index> add(q * q), act(rn * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) add[a * q + b] = coset[m->add(labels[a], labels[b])];
  for (Index r = 0; r < rn; ++r)
    for (std::size_t c = 0; c < q; ++c) act[r * q + c] = coset[m->act(r, labels[c])];

  Quotient out;
  out.module = FiniteModule::from_tables_unchecked(m->ring(), m->side(), m->name() + "/N", q, std::move(add),
                                                   coset[m->zero()], std::move(act));
  out.projection = {m, out.module, std::move(coset)};
  out.labels = std::move(labels);
  return out;
}

SubmoduleView submodule_module(const ModulePtr& m, const Submodule& n) {
  if (n.members().universe() != m->order() || !validate(*m, n).empty())
    throw InvalidInput("submodule view: the given set is not a submodule of '" + m->name() + "'");
  const auto members = n.members().members();
  const std::size_t k = members.size();
  std::vector<Index> local(m->order(), 0);
  for (Index i = 0; i < k; ++i) local[members[i]] = i;
  const std::size_t rn = m->ring()->order();
  std::vector<Index> add(k * k), act(rn * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) add[a * k + b] = local[m->add(members[a], members[b])];
  for (Index r = 0; r < rn; ++r)
    for (std::size_t c = 0; c < k; ++c) act[r * k + c] = local[m->act(r, members[c])];
  SubmoduleView out;
  out.module = FiniteModule::from_tables_unchecked(m->ring(), m->side(), "sub(" + m->name() + ")", k, std::move(add),
                                                   local[m->zero()], std::move(act));
  out.inclusion = {out.module, m, members};
  return out;
}

}  // namespace modlat
