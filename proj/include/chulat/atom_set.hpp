// Copyright 2026 The chulat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHULAT_ATOM_SET_HPP_
#define CHULAT_ATOM_SET_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "chulat/error.hpp"

namespace chulat {

/// Fixed-capacity set of atom indices. Lattice elements, relations on a grid
/// of atoms, and preimages are all stored as one of these.
class AtomSet {
 public:
  static constexpr std::size_t kCapacity = 256;
  static constexpr std::size_t kWords = kCapacity / 64;

  constexpr AtomSet() = default;
  AtomSet(std::initializer_list<std::size_t> atoms) {
    for (std::size_t a : atoms) set(a);
  }

  static AtomSet full(std::size_t n) {
    check_capacity(n);
    AtomSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }
  static AtomSet singleton(std::size_t a) {
    AtomSet s;
    s.set(a);
    return s;
  }
  static AtomSet from_indices(const std::vector<std::size_t>& atoms) {
    AtomSet s;
    for (std::size_t a : atoms) s.set(a);
    return s;
  }

  static void check_capacity(std::size_t n) {
    if (n > kCapacity) {
      throw Error(ErrorCode::kSizeGuard,
                  "atom sets hold at most " + std::to_string(kCapacity) +
                      " atoms, requested " + std::to_string(n));
    }
  }

  bool test(std::size_t a) const {
    return (words_[a >> 6] >> (a & 63)) & 1U;
  }
  void set(std::size_t a) {
    check_capacity(a + 1);
    words_[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  void reset(std::size_t a) { words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool is_subset_of(const AtomSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const AtomSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  AtomSet& operator&=(const AtomSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  AtomSet& operator|=(const AtomSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  AtomSet& operator-=(const AtomSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

  /// Smallest member, or kCapacity when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] != 0)
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return kCapacity;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t a) { out.push_back(a); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](std::size_t a) {
      if (!first_item) s += ',';
      s += std::to_string(a);
      first_item = false;
    });
    return s + "}";
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical subset order: by size, then lexicographically on the sorted
/// index lists. For equal sizes the set holding the smallest element of the
/// symmetric difference comes first.
inline bool canonical_less(const AtomSet& a, const AtomSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const AtomSet diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  return a.test(diff.first());
}

struct AtomSetHash {
  std::size_t operator()(const AtomSet& s) const { return s.hash(); }
};

}  // namespace chulat

#endif  // CHULAT_ATOM_SET_HPP_
