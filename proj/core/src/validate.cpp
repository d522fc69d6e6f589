#include "modlat/validate.hpp"

#include <map>
#include <sstream>

#include "modlat/module.hpp"
#include "modlat/ring.hpp"

namespace modlat {

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ")";
  return os.str();
}

namespace {

// Keeps the first witness per axiom, in the order axioms are first seen.
class Collector {
 public:
  void fail(const std::string& axiom, std::vector<Index> witness) {
    if (seen_.emplace(axiom, out_.size()).second) out_.push_back({axiom, std::move(witness)});
  }
  bool failed(const std::string& axiom) const { return seen_.count(axiom) != 0; }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::map<std::string, std::size_t> seen_;
  std::vector<Violation> out_;
};

template <typename Op>
void check_abelian_group(Collector& c, std::size_t n, Index zero, Op add) {
  for (Index a = 0; a < n; ++a) {
    if (add(zero, a) != a || add(a, zero) != a) c.fail("additive identity", {a});
    bool has_inverse = false;
    for (Index b = 0; b < n; ++b) {
      if (add(a, b) == zero) has_inverse = true;
      if (!c.failed("additive commutativity") && add(a, b) != add(b, a)) c.fail("additive commutativity", {a, b});
      if (c.failed("additive associativity")) continue;
      for (Index d = 0; d < n; ++d)
        if (add(add(a, b), d) != add(a, add(b, d))) {
          c.fail("additive associativity", {a, b, d});
          break;
        }
    }
    if (!has_inverse) c.fail("additive inverse", {a});
  }
}

}  // namespace

std::vector<Violation> validate(const FiniteRing& r) {
  Collector c;
  const auto n = static_cast<Index>(r.order());
  auto add = [&](Index a, Index b) { return r.add(a, b); };
  auto mul = [&](Index a, Index b) { return r.mul(a, b); };
  for (auto v : r.add_table())
    if (v >= n) c.fail("addition table range", {v});
  for (auto v : r.mul_table())
    if (v >= n) c.fail("multiplication table range", {v});
  if (c.failed("addition table range") || c.failed("multiplication table range")) return c.take();
  check_abelian_group(c, n, r.zero(), add);
  if (n > 1 && r.zero() == r.one()) c.fail("zero differs from one", {r.zero()});
  for (Index a = 0; a < n; ++a) {
    if (mul(r.one(), a) != a || mul(a, r.one()) != a) c.fail("multiplicative identity", {a});
    for (Index b = 0; b < n; ++b) {
      const Index ab = mul(a, b);
      for (Index d = 0; d < n; ++d) {
        if (mul(ab, d) != mul(a, mul(b, d))) c.fail("multiplicative associativity", {a, b, d});
        if (mul(a, add(b, d)) != add(ab, mul(a, d))) c.fail("left distributivity", {a, b, d});
        if (mul(add(a, b), d) != add(mul(a, d), mul(b, d))) c.fail("right distributivity", {a, b, d});
      }
    }
  }
  return c.take();
}

std::vector<Violation> validate(const FiniteModule& m) {
  Collector c;
  const auto n = static_cast<Index>(m.order());
  const auto& r = *m.ring();
  const auto rn = static_cast<Index>(r.order());
  for (auto v : m.add_table())
    if (v >= n) {
      c.fail("addition table range", {v});
      return c.take();
    }
  for (auto v : m.act_table())
    if (v >= n) {
      c.fail("action table range", {v});
      return c.take();
    }
  check_abelian_group(c, n, m.zero(), [&](Index a, Index b) { return m.add(a, b); });
  for (Index x = 0; x < n; ++x) {
    if (m.act(r.one(), x) != x) c.fail("unital action", {x});
    for (Index s = 0; s < rn; ++s) {
      for (Index t = 0; t < rn; ++t) {
        if (m.act(r.add(s, t), x) != m.add(m.act(s, x), m.act(t, x))) c.fail("action additive in ring argument", {s, t, x});
        // left: (st)x = s(tx); right: x(st) = (xs)t
        const Index lhs = m.act(r.mul(s, t), x);
        const Index rhs = m.side() == Side::left ? m.act(s, m.act(t, x)) : m.act(t, m.act(s, x));
        if (lhs != rhs) c.fail("action associativity", {s, t, x});
      }
      if (c.failed("action additive in module argument")) continue;
      for (Index y = 0; y < n; ++y)
        if (m.act(s, m.add(x, y)) != m.add(m.act(s, x), m.act(s, y))) {
          c.fail("action additive in module argument", {s, x, y});
          break;
        }
    }
  }
  return c.take();
}

std::vector<Violation> validate(const FiniteModule& m, const Submodule& n) {
  Collector c;
  if (n.members().universe() != m.order()) {
    c.fail("submodule universe matches module order", {static_cast<Index>(n.members().universe())});
    return c.take();
  }
  if (!n.contains(m.zero())) c.fail("submodule contains zero", {m.zero()});
  const auto members = n.members().members();
  for (auto x : members) {
    for (auto y : members)
      if (!n.contains(m.add(x, y))) {
        c.fail("closed under addition", {x, y});
        break;
      }
    for (Index r = 0; r < m.ring()->order(); ++r)
      if (!n.contains(m.act(r, x))) {
        c.fail("closed under scalar action", {r, x});
        break;
      }
  }
  return c.take();
}

std::vector<Violation> validate(const ModuleHom& f) {
  Collector c;
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (f.images.size() != src.order()) {
    c.fail("map defined on every source element", {static_cast<Index>(f.images.size())});
    return c.take();
  }
  for (std::size_t i = 0; i < f.images.size(); ++i)
    if (f.images[i] >= tgt.order()) {
      c.fail("image within target", {static_cast<Index>(i)});
      return c.take();
    }
  if (!(src.ring() == tgt.ring() || *src.ring() == *tgt.ring()) || src.side() != tgt.side()) {
    c.fail("source and target over the same ring and side", {});
    return c.take();
  }
  const auto n = static_cast<Index>(src.order());
  for (Index x = 0; x < n; ++x) {
    if (!c.failed("additive"))
      for (Index y = 0; y < n; ++y)
        if (f(src.add(x, y)) != tgt.add(f(x), f(y))) {
          c.fail("additive", {x, y});
          break;
        }
    for (Index r = 0; r < src.ring()->order(); ++r)
      if (f(src.act(r, x)) != tgt.act(r, f(x))) {
        c.fail("scalar-linear", {r, x});
        break;
      }
  }
  return c.take();
}

}  // namespace modlat
