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

// Brute-force reference implementations used as test oracles. Each one
// follows the definition directly and shares no search code with the
// library.

#ifndef CHULAT_TESTS_ORACLES_HPP_
#define CHULAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chulat/chulat.hpp"

namespace oracle {

using chulat::AtomImage;
using chulat::AtomMap;
using chulat::AtomSet;
using chulat::ClosureSpace;
using chulat::Relation;

inline AtomSet from_mask(unsigned long long mask) {
  AtomSet s;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1ULL) s.set(i);
  return s;
}

inline std::vector<AtomSet> all_subsets(std::size_t n) {
  std::vector<AtomSet> out;
  for (unsigned long long m = 0; m < (1ULL << n); ++m) out.push_back(from_mask(m));
  return out;
}

/// Subsets equal to the intersection of the generators (and Σ) above them,
/// plus the empty set.
inline std::set<std::string> closed_subsets(std::size_t n, const std::vector<AtomSet>& gens) {
  std::set<std::string> out{AtomSet{}.to_string()};
  for (const AtomSet& s : all_subsets(n)) {
    AtomSet m = AtomSet::full(n);
    for (const AtomSet& g : gens)
      if (s.is_subset_of(g)) m &= g;
    if (m == s) out.insert(s.to_string());
  }
  return out;
}

inline std::set<std::string> names(const std::vector<AtomSet>& family) {
  std::set<std::string> out;
  for (const AtomSet& s : family) out.insert(s.to_string());
  return out;
}

/// Smallest member of the family containing s, by scanning.
inline AtomSet closure(const ClosureSpace& l, const AtomSet& s) {
  AtomSet m = l.top();
  for (const AtomSet& c : l.family())
    if (s.is_subset_of(c)) m &= c;
  return m;
}

/// Maximal proper members, by pairwise comparison.
inline std::vector<AtomSet> coatoms(const ClosureSpace& l) {
  std::vector<AtomSet> out;
  for (const AtomSet& c : l.family()) {
    if (c == l.top()) continue;
    bool maximal = true;
    for (const AtomSet& d : l.family())
      if (!(d == l.top()) && !(d == c) && c.is_subset_of(d)) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

inline bool is_coatom(const ClosureSpace& l, const AtomSet& s) {
  const auto xs = coatoms(l);
  return std::find(xs.begin(), xs.end(), s) != xs.end();
}

/// f on elements: closure of the image of the atoms of a.
inline AtomSet apply(const AtomMap& f, const AtomSet& a) {
  AtomSet img;
  a.for_each([&](std::size_t p) {
    if (f.image[p]) img.set(*f.image[p]);
  });
  return closure(*f.target, img);
}

/// Join of every element a with f(a) below b.
inline AtomSet adjoint(const AtomMap& f, const AtomSet& b) {
  AtomSet u;
  for (const AtomSet& a : f.source->family())
    if (apply(f, a).is_subset_of(b)) u |= a;
  return closure(*f.source, u);
}

/// Join-preserving on all pairs, and the adjoint sends coatoms to coatoms or 1.
inline bool is_arrow(const AtomMap& f) {
  const ClosureSpace& s = *f.source;
  const ClosureSpace& t = *f.target;
  if (!apply(f, AtomSet{}).empty()) return false;
  for (const AtomSet& a : s.family())
    for (const AtomSet& b : s.family())
      if (!(apply(f, closure(s, a | b)) == closure(t, apply(f, a) | apply(f, b)))) return false;
  for (const AtomSet& x : coatoms(t)) {
    const AtomSet back = adjoint(f, x);
    if (!(back == s.top()) && !is_coatom(s, back)) return false;
  }
  return true;
}

/// Calls visit on every map of atoms to atoms-or-ZERO, lexicographic.
inline void for_each_map(const ClosureSpace& s, const ClosureSpace& t,
                         const std::function<void(const AtomMap&)>& visit) {
  const std::size_t n1 = s.atom_count();
  const std::size_t n2 = t.atom_count();
  std::vector<std::size_t> digits(n1, 0);
  for (;;) {
    AtomMap f{&s, &t, {}};
    for (std::size_t d : digits) f.image.push_back(d == 0 ? AtomImage{} : AtomImage(d - 1));
    visit(f);
    std::size_t i = n1;
    while (i > 0 && ++digits[i - 1] == n2 + 1) digits[--i] = 0;
    if (i == 0) return;
  }
}

inline std::vector<std::vector<AtomImage>> homs(const ClosureSpace& s, const ClosureSpace& t) {
  std::vector<std::vector<AtomImage>> out;
  for_each_map(s, t, [&](const AtomMap& f) {
    if (oracle::is_arrow(f)) out.push_back(f.image);
  });
  return out;
}

inline std::vector<std::vector<AtomImage>> images(const std::vector<AtomMap>& fs) {
  std::vector<std::vector<AtomImage>> out;
  for (const AtomMap& f : fs) out.push_back(f.image);
  return out;
}

/// Every section is a coatom of its factor or the whole factor; R is proper.
inline bool is_star_coatom(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  if (r.is_full()) return false;
  const auto x1 = coatoms(l1);
  const auto x2 = coatoms(l2);
  auto ok = [](const std::vector<AtomSet>& xs, const AtomSet& s, const AtomSet& top) {
    return s == top || std::find(xs.begin(), xs.end(), s) != xs.end();
  };
  for (std::size_t i = 0; i < r.n1; ++i) {
    AtomSet row;
    for (std::size_t j = 0; j < r.n2; ++j)
      if (r.cells.test(i * r.n2 + j)) row.set(j);
    if (!ok(x2, row, l2.top())) return false;
  }
  for (std::size_t j = 0; j < r.n2; ++j) {
    AtomSet col;
    for (std::size_t i = 0; i < r.n1; ++i)
      if (r.cells.test(i * r.n2 + j)) col.set(i);
    if (!ok(x1, col, l1.top())) return false;
  }
  return true;
}

/// Relations whose rows are all coatoms-or-Σ₂, filtered by is_star_coatom.
inline std::set<std::string> star_coatoms(const ClosureSpace& l1, const ClosureSpace& l2) {
  std::vector<AtomSet> rows = coatoms(l2);
  rows.push_back(l2.top());
  std::set<std::string> out;
  std::vector<std::size_t> pick(l1.atom_count(), 0);
  for (;;) {
    Relation r = Relation::empty(l1.atom_count(), l2.atom_count());
    for (std::size_t i = 0; i < pick.size(); ++i) r.set_row(i, rows[pick[i]]);
    if (oracle::is_star_coatom(l1, l2, r)) out.insert(r.to_string());
    std::size_t i = pick.size();
    while (i > 0 && ++pick[i - 1] == rows.size()) pick[--i] = 0;
    if (i == 0) return out;
  }
}

/// Every row and column section closed.
inline bool in_vee(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  for (std::size_t i = 0; i < r.n1; ++i)
    if (!l2.contains(r.row(i))) return false;
  for (std::size_t j = 0; j < r.n2; ++j)
    if (!l1.contains(r.column(j))) return false;
  return true;
}

/// A generator of small simple closure spaces: singletons plus a few random
/// subsets, closed under intersection.
inline ClosureSpace random_space(std::mt19937& rng, std::size_t n, std::size_t extra) {
  std::vector<AtomSet> gens;
  for (std::size_t p = 0; p < n; ++p) gens.push_back(AtomSet::singleton(p));
  for (std::size_t k = 0; k < extra; ++k) gens.push_back(from_mask(rng() % (1ULL << n)));
  return chulat::build_space(n, gens, "R" + std::to_string(n));
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle

#endif  // CHULAT_TESTS_ORACLES_HPP_
