#include "modlat/ring.hpp"

#include <sstream>

#include "modlat/caps.hpp"
#include "modlat/error.hpp"
#include "modlat/validate.hpp"

namespace modlat {

namespace {

void check_cap(std::size_t order, const std::string& what) {
  if (order > caps().elements) {
    std::ostringstream os;
    os << what << ": order " << order << " exceeds element cap " << caps().elements;
    throw CapExceeded(os.str());
  }
}

// base^exponent, saturating at cap+1.
std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    r *= base;
    if (r > caps().elements) return caps().elements + 1;
  }
  return r;
}

std::vector<Index> decode(Index x, std::size_t radix, std::size_t digits) {
  std::vector<Index> d(digits);
  for (std::size_t k = digits; k-- > 0;) {
    d[k] = static_cast<Index>(x % radix);
    x = static_cast<Index>(x / radix);
  }
  return d;
}

Index encode(const std::vector<Index>& d, std::size_t radix) {
  std::size_t x = 0;
  for (auto v : d) x = x * radix + v;
  return static_cast<Index>(x);
}

// Shared builder for full and upper-triangular matrix rings. `cells` lists the
// (row, col) positions carried by an element, in digit order.
RingPtr matrix_like(const RingPtr& base, std::size_t size,
                    const std::vector<std::pair<std::size_t, std::size_t>>& cells, std::string name) {
  const std::size_t q = base->order();
  const std::size_t order = checked_power(q, cells.size());
  check_cap(order, name);
  std::vector<long> pos(size * size, -1);
  for (std::size_t k = 0; k < cells.size(); ++k) pos[cells[k].first * size + cells[k].second] = static_cast<long>(k);

  std::vector<std::vector<Index>> digits(order);
  for (std::size_t x = 0; x < order; ++x) digits[x] = decode(static_cast<Index>(x), q, cells.size());
  auto entry = [&](const std::vector<Index>& d, std::size_t i, std::size_t j) {
    long p = pos[i * size + j];
    return p < 0 ? base->zero() : d[static_cast<std::size_t>(p)];
  };

  std::vector<Index> add(order * order), mul(order * order);
  std::vector<Index> tmp(cells.size());
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t k = 0; k < cells.size(); ++k) tmp[k] = base->add(digits[a][k], digits[b][k]);
      add[a * order + b] = encode(tmp, q);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [i, j] = cells[k];
        Index acc = base->zero();
        for (std::size_t l = 0; l < size; ++l)
          acc = base->add(acc, base->mul(entry(digits[a], i, l), entry(digits[b], l, j)));
        tmp[k] = acc;
      }
      mul[a * order + b] = encode(tmp, q);
    }
  }
  std::vector<Index> zero_d(cells.size(), base->zero()), one_d(cells.size(), base->zero());
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (cells[k].first == cells[k].second) one_d[k] = base->one();
  return FiniteRing::from_tables_unchecked(std::move(name), order, std::move(add), std::move(mul),
                                           encode(zero_d, q), encode(one_d, q));
}

}  // namespace

RingPtr FiniteRing::from_tables_unchecked(std::string name, std::size_t order, std::vector<Index> add,
                                          std::vector<Index> mul, Index zero, Index one) {
  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->order_ = order;
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->zero_ = zero;
  r->one_ = one;
  r->name_ = std::move(name);
  r->neg_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order && !found; ++b) {
      if (r->add_[a * order + b] == zero) {
        r->neg_[a] = static_cast<Index>(b);
        found = true;
      }
    }
    if (!found) throw InvalidInput("ring '" + r->name_ + "': element " + std::to_string(a) + " has no additive inverse");
  }
  return r;
}

bool FiniteRing::is_unit(Index a) const {
  for (Index b = 0; b < order_; ++b)
    if (mul(a, b) == one_ && mul(b, a) == one_) return true;
  return false;
}

ElementSet FiniteRing::units() const {
  ElementSet u(order_);
  for (Index a = 0; a < order_; ++a)
    if (is_unit(a)) u.insert(a);
  return u;
}

RingPtr cyclic_ring(std::size_t n) {
  std::string name = "Z/" + std::to_string(n);
  if (n == 0) throw InvalidInput("cyclic ring needs n >= 1");
  check_cap(n, name);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  return FiniteRing::from_tables_unchecked(std::move(name), n, std::move(add), std::move(mul), 0,
                                           static_cast<Index>(1 % n));
}

RingPtr matrix_ring(const RingPtr& base, std::size_t size) {
  if (size == 0) throw InvalidInput("matrix ring needs size >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) cells.emplace_back(i, j);
  return matrix_like(base, size, cells, "M" + std::to_string(size) + "(" + base->name() + ")");
}

RingPtr triangular_ring(const RingPtr& base, std::size_t size) {
  if (size == 0) throw InvalidInput("triangular ring needs size >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) cells.emplace_back(i, j);
  return matrix_like(base, size, cells, "T" + std::to_string(size) + "(" + base->name() + ")");
}

RingPtr product_ring(std::span<const RingPtr> factors) {
  std::string name;
  std::size_t order = 1;
  for (const auto& f : factors) {
    name += (name.empty() ? "" : " x ") + f->name();
    if (order > caps().elements) break;
    order *= f->order();
  }
  if (name.empty()) name = "0";
  check_cap(order, name);
  const std::size_t k = factors.size();
  std::vector<std::vector<Index>> digits(order, std::vector<Index>(k));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      digits[x][i] = static_cast<Index>(rest % factors[i]->order());
      rest /= factors[i]->order();
    }
  }
  auto enc = [&](const std::vector<Index>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i]->order() + d[i];
    return static_cast<Index>(x);
  };
  std::vector<Index> add(order * order), mul(order * order), tmp(k);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = factors[i]->add(digits[a][i], digits[b][i]);
      add[a * order + b] = enc(tmp);
      for (std::size_t i = 0; i < k; ++i) tmp[i] = factors[i]->mul(digits[a][i], digits[b][i]);
      mul[a * order + b] = enc(tmp);
    }
  std::vector<Index> z(k), o(k);
  for (std::size_t i = 0; i < k; ++i) {
    z[i] = factors[i]->zero();
    o[i] = factors[i]->one();
  }
  return FiniteRing::from_tables_unchecked(std::move(name), order, std::move(add), std::move(mul), enc(z), enc(o));
}

RingPtr ring_from_tables(std::vector<std::vector<Index>> add, std::vector<std::vector<Index>> mul, Index one,
                         std::string name) {
  const std::size_t n = add.size();
  if (n == 0) throw InvalidInput("ring tables are empty");
  check_cap(n, name);
  if (mul.size() != n) throw InvalidInput("addition and multiplication tables differ in size");
  std::vector<Index> flat_add, flat_mul;
  flat_add.reserve(n * n);
  flat_mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw InvalidInput("row " + std::to_string(i) + " of a ring table is not of length " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (add[i][j] >= n || mul[i][j] >= n)
        throw InvalidInput("table entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      flat_add.push_back(add[i][j]);
      flat_mul.push_back(mul[i][j]);
    }
  }
  if (one >= n) throw InvalidInput("'one' index out of range");

  // The additive identity is determined by the table.
  Index zero = static_cast<Index>(n);
  for (Index e = 0; e < n && zero == n; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = flat_add[e * n + x] == x && flat_add[x * n + e] == x;
    if (ok) zero = e;
  }
  if (zero == n) throw InvalidInput("ring '" + name + "': addition has no identity element");

  auto ring = FiniteRing::from_tables_unchecked(std::move(name), n, std::move(flat_add), std::move(flat_mul), zero, one);
  auto violations = validate(*ring);
  if (!violations.empty()) throw InvalidInput("ring '" + ring->name() + "': " + violations.front().to_string());
  return ring;
}

RingPtr opposite_ring(const RingPtr& r) {
  const std::size_t n = r->order();
  std::vector<Index> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = r->mul(static_cast<Index>(b), static_cast<Index>(a));
  return FiniteRing::from_tables_unchecked("op(" + r->name() + ")", n, r->add_table(), std::move(mul), r->zero(),
                                           r->one());
}

RingPtr ring_from_spec(const RingSpec& spec) {
  return std::visit(
      [](const auto& k) -> RingPtr {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RingSpec::Cyclic>) {
          return cyclic_ring(k.n);
        } else if constexpr (std::is_same_v<K, RingSpec::Matrix>) {
          return matrix_ring(ring_from_spec(*k.base), k.size);
        } else if constexpr (std::is_same_v<K, RingSpec::Triangular>) {
          return triangular_ring(ring_from_spec(*k.base), k.size);
        } else if constexpr (std::is_same_v<K, RingSpec::Product>) {
          std::vector<RingPtr> fs;
          for (const auto& f : k.factors) fs.push_back(ring_from_spec(f));
          return product_ring(fs);
        } else {
          return ring_from_tables(k.add, k.mul, k.one);
        }
      },
      spec.kind);
}

std::string describe(const RingSpec& spec) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RingSpec::Cyclic>) {
          return "Z/" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<K, RingSpec::Matrix>) {
          return "M" + std::to_string(k.size) + "(" + describe(*k.base) + ")";
        } else if constexpr (std::is_same_v<K, RingSpec::Triangular>) {
          return "T" + std::to_string(k.size) + "(" + describe(*k.base) + ")";
        } else if constexpr (std::is_same_v<K, RingSpec::Product>) {
          std::string s;
          for (const auto& f : k.factors) s += (s.empty() ? "" : " x ") + describe(f);
          return s.empty() ? "0" : s;
        } else {
          return "tables(" + std::to_string(k.add.size()) + ")";
        }
      },
      spec.kind);
}

}  // namespace modlat
