#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace modlat {

/// Index of an element inside a finite ring or module carrier.
using Index = std::uint32_t;

/// Fixed-universe bitset over element indices.
///
/// The canonical order (`operator<=>`) compares cardinality first and then the
/// sorted member lists lexicographically, so the zero submodule is always the
/// least element of a lattice and the whole module the greatest.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Index>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Index i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(Index i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  /// |this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const ElementSet& other) const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      n += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return n;
  }

  ElementSet operator&(const ElementSet& other) const {
    ElementSet r(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & other.words_[k];
    return r;
  }
  ElementSet operator|(const ElementSet& other) const {
    ElementSet r(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | other.words_[k];
    return r;
  }

  /// Smallest member, or `universe()` when empty.
  Index first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<Index>(k * 64 + std::countr_zero(words_[k]));
    return static_cast<Index>(universe_);
  }

  /// Members in increasing order.
  std::vector<Index> members() const {
    std::vector<Index> out;
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<Index>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.words_.size() && k < b.words_.size(); ++k) {
      const std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (!diff) continue;
      const std::uint64_t low = diff & (~diff + 1);
      // The set owning the lowest differing member sorts first.
      return (a.words_[k] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.universe_ <=> b.universe_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ s.universe();
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace modlat
