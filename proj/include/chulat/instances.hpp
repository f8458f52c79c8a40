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

#ifndef CHULAT_INSTANCES_HPP_
#define CHULAT_INSTANCES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chulat/atom_set.hpp"
#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"
#include "chulat/morphisms.hpp"
#include "chulat/tensor.hpp"

namespace chulat {

/// n atoms, each covered by 1.
inline ClosureSpace mo(std::size_t n) {
  std::vector<AtomSet> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(AtomSet::singleton(i));
  return build_space(n, gens, "MO" + std::to_string(n));
}

inline ClosureSpace powerset(std::size_t n) {
  std::vector<AtomSet> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(AtomSet::full(n) - AtomSet::singleton(i));
  return build_space(n, gens, "P" + std::to_string(n));
}

inline ClosureSpace chain2() { return build_space(1, std::vector<AtomSet>{}, "2"); }

struct OrthoSpace {
  ClosureSpace space;
  std::size_t m = 0;
  std::vector<AtomSet> perp;  // perp[p] = p'

  bool orthogonal(std::size_t a, std::size_t b) const { return perp[a].test(b); }

  /// A' = atoms orthogonal to every atom of A.
  AtomSet orth(const AtomSet& a) const {
    AtomSet out = AtomSet::full(m);
    a.for_each([&](std::size_t p) { out &= perp[p]; });
    return out;
  }
};

/// Atoms are residues mod m; a ⊥ b iff b - a mod m lies in diffs. Closed sets
/// are the biorthogonally closed ones.
inline OrthoSpace ortho_space(std::size_t m, const std::vector<std::size_t>& diffs) {
  if (m == 0) throw Error(ErrorCode::kEmptyAtomSet, "modulus must be positive");
  AtomSet::check_capacity(m);
  std::set<std::size_t> d;
  for (std::size_t x : diffs) d.insert(x % m);
  if (d.contains(0)) throw Error(ErrorCode::kNotSymmetric, "0 in diffs makes perp reflexive");
  for (std::size_t x : d) {
    if (!d.contains((m - x) % m)) {
      throw Error(ErrorCode::kNotSymmetric,
                  std::to_string(x) + " in diffs without " + std::to_string((m - x) % m));
    }
  }
  OrthoSpace o;
  o.m = m;
  o.perp.resize(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x : d) o.perp[a].set((a + x) % m);

  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (p == q) continue;
      bool sep = false;
      for (std::size_t r = 0; r < m && !sep; ++r) sep = o.perp[p].test(r) && !o.perp[q].test(r);
      if (!sep) {
        throw Error(ErrorCode::kNotSeparating,
                    "no atom orthogonal to " + std::to_string(p) + " but not to " +
                        std::to_string(q));
      }
    }
  }

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back(std::to_string(a));
  std::string name = "Z" + std::to_string(m);
  o.space = build_space(m, o.perp, name, labels);

  const AtomSet top = AtomSet::full(m);
  for (const AtomSet& a : o.space.family()) {
    const AtomSet ap = o.orth(a);
    if (!o.space.contains(ap) || !(o.orth(ap) == a)) {
      throw Error(ErrorCode::kNotSimple, a.to_string() + " is not biorthogonally closed");
    }
    if (a.intersects(ap) || !(o.space.join(a, ap) == top)) {
      throw Error(ErrorCode::kNotSimple, a.to_string() + "' is not a complement");
    }
  }
  for (const AtomSet& a : o.space.family())
    for (const AtomSet& b : o.space.family())
      if (a.is_subset_of(b) && !o.orth(b).is_subset_of(o.orth(a))) {
        throw Error(ErrorCode::kNotSimple, "orthocomplement is not order-reversing");
      }
  return o;
}

/// A0 with coatoms scanned as p' in atom order, so witnesses read as p'.
inline A0Report check_A0(const OrthoSpace& o) {
  std::vector<AtomSet> order;
  for (const AtomSet& x : o.perp)
    if (o.space.coatom_index(x) && std::find(order.begin(), order.end(), x) == order.end())
      order.push_back(x);
  for (const AtomSet& x : o.space.coatoms())
    if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
  return check_A0(o.space, order);
}

/// Smallest p with p' == s, if any.
inline std::optional<std::size_t> perp_name(const OrthoSpace& o, const AtomSet& s) {
  for (std::size_t p = 0; p < o.m; ++p)
    if (o.perp[p] == s) return p;
  return std::nullopt;
}

/// R^# = {q : q # r for all r in R}, where q # r iff q1 ⊥ r1 or q2 ⊥ r2.
inline Relation sharp_closed(const OrthoSpace& o1, const OrthoSpace& o2, const Relation& r) {
  if (r.n1 != o1.m || r.n2 != o2.m) {
    throw Error(ErrorCode::kDimensionMismatch, "relation does not fit the ortho spaces");
  }
  Relation out = Relation::empty(r.n1, r.n2);
  for (std::size_t q1 = 0; q1 < r.n1; ++q1) {
    for (std::size_t q2 = 0; q2 < r.n2; ++q2) {
      bool all = true;
      r.cells.for_each([&](std::size_t c) {
        const std::size_t r1 = c / r.n2;
        const std::size_t r2 = c % r.n2;
        if (!o1.orthogonal(q1, r1) && !o2.orthogonal(q2, r2)) all = false;
      });
      if (all) out.set(q1, q2);
    }
  }
  return out;
}

struct SubspaceLattice {
  ClosureSpace space;
  int q = 0;
  std::size_t d = 0;
  std::vector<std::vector<int>> points;  // first nonzero coordinate is 1

  std::optional<std::size_t> point_index(std::vector<int> v) const {
    int lead = 0;
    for (int& x : v) {
      x = ((x % q) + q) % q;
      if (lead == 0 && x != 0) lead = x;
    }
    if (lead == 0) return std::nullopt;
    int inv = 1;
    while ((inv * lead) % q != 1) ++inv;
    for (int& x : v) x = (x * inv) % q;
    auto it = std::lower_bound(points.begin(), points.end(), v);
    return static_cast<std::size_t>(it - points.begin());
  }
};

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int k = 2; k * k <= q; ++k)
    if (q % k == 0) return false;
  return true;
}

namespace detail {

/// Nonzero vectors of GF(q)^d with leading coordinate 1, lexicographic.
inline std::vector<std::vector<int>> projective_points(int q, std::size_t d) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(d, 0);
  for (;;) {
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++v[i] < q) break;
      v[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead != v.end() && *lead == 1) out.push_back(v);
  }
}

}  // namespace detail

/// Points of PG(d-1, q) with closed sets the point sets of linear subspaces,
/// generated as intersections of hyperplanes.
inline SubspaceLattice subspace_lattice(int q, std::size_t d, const Limits& limits = {}) {
  if (!is_prime(q)) throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not prime");
  if (d == 0) throw Error(ErrorCode::kEmptyAtomSet, "dimension must be positive");
  std::size_t count = 0;
  for (std::size_t k = 0, pw = 1; k < d; ++k, pw *= static_cast<std::size_t>(q)) {
    count += pw;
    if (count > limits.max_points) {
      throw Error(ErrorCode::kSizeGuard, "more than " + std::to_string(limits.max_points) +
                                             " projective points");
    }
  }
  SubspaceLattice s;
  s.q = q;
  s.d = d;
  s.points = detail::projective_points(q, d);
  std::vector<AtomSet> hyperplanes;
  for (const auto& phi : s.points) {
    AtomSet h;
    for (std::size_t p = 0; p < s.points.size(); ++p) {
      int dot = 0;
      for (std::size_t k = 0; k < d; ++k) dot += phi[k] * s.points[p][k];
      if (dot % q == 0) h.set(p);
    }
    hyperplanes.push_back(h);
  }
  std::vector<std::string> labels;
  for (const auto& v : s.points) {
    std::string l = "(";
    for (std::size_t k = 0; k < d; ++k) l += (k ? "," : "") + std::to_string(v[k]);
    labels.push_back(l + ")");
  }
  s.space = build_space(s.points.size(), hyperplanes,
                        "PG(" + std::to_string(d) + "," + std::to_string(q) + ")", labels,
                        limits);
  return s;
}

using Matrix = std::vector<std::vector<int>>;  // rows x columns over GF(q)

/// Atom map of v -> Mv between projective spaces; ZERO on the kernel.
inline AtomMap linear_hom(const Matrix& m, const SubspaceLattice& l1, const SubspaceLattice& l2) {
  if (l1.q != l2.q || m.size() != l2.d) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix rows or field differ from the target");
  }
  for (const auto& row : m) {
    if (row.size() != l1.d) throw Error(ErrorCode::kDimensionMismatch, "matrix columns");
  }
  AtomMap f{&l1.space, &l2.space, {}};
  for (const auto& v : l1.points) {
    std::vector<int> w(l2.d, 0);
    for (std::size_t r = 0; r < l2.d; ++r)
      for (std::size_t c = 0; c < l1.d; ++c) w[r] = (w[r] + m[r][c] * v[c]) % l1.q;
    f.image.push_back(l2.point_index(w));
  }
  return f;
}

inline Matrix matmul(const Matrix& a, const Matrix& b, int q) {
  Matrix out(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j)
        out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % q;
  return out;
}

/// x^h = ∪ Σ[z] x Σ[h(z)] over the coatoms z above x1 ∧ y1. Coatoms are
/// given by index; h lists, for the pencil of L1 in increasing coatom index
/// order, the matching coatom index of L2.
inline Relation star_coatom(const ClosureSpace& l1, const ClosureSpace& l2, std::size_t x1,
                            std::size_t y1, std::size_t x2, std::size_t y2,
                            const std::vector<std::size_t>& h) {
  const auto& c1 = l1.coatoms();
  const auto& c2 = l2.coatoms();
  if (x1 >= c1.size() || y1 >= c1.size() || x2 >= c2.size() || y2 >= c2.size()) {
    throw Error(ErrorCode::kIntervalMismatch, "coatom index out of range");
  }
  if (x1 == y1 || x2 == y2) {
    throw Error(ErrorCode::kIntervalMismatch, "pencils need two distinct coatoms");
  }
  const auto pencil1 = l1.sigma_prime_above(c1[x1] & c1[y1]).indices();
  const AtomSet pencil2 = l2.sigma_prime_above(c2[x2] & c2[y2]);
  if (h.size() != pencil1.size() || h.size() != pencil2.count()) {
    throw Error(ErrorCode::kNotABijection,
                "pencils have " + std::to_string(pencil1.size()) + " and " +
                    std::to_string(pencil2.count()) + " coatoms, h has " +
                    std::to_string(h.size()) + " entries");
  }
  AtomSet used;
  Relation r = Relation::empty(l1.atom_count(), l2.atom_count());
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] >= c2.size() || !pencil2.test(h[k]) || used.test(h[k])) {
      throw Error(ErrorCode::kNotABijection, "h is not a bijection onto the second pencil");
    }
    used.set(h[k]);
    r = r | circ(l1, l2, c1[pencil1[k]], c2[h[k]]);
  }
  return r;
}

}  // namespace chulat

#endif  // CHULAT_INSTANCES_HPP_
