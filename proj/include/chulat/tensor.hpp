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

// Tensor products of lattices realized as closure spaces on the grid of atom
// pairs. Cell (i, j) has index i * n2 + j.

#ifndef CHULAT_TENSOR_HPP_
#define CHULAT_TENSOR_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chulat/atom_set.hpp"
#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"
#include "chulat/morphisms.hpp"

namespace chulat {

struct Relation {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  AtomSet cells;

  static Relation empty(std::size_t n1, std::size_t n2) {
    AtomSet::check_capacity(n1 * n2);
    return {n1, n2, {}};
  }
  static Relation full(std::size_t n1, std::size_t n2) {
    return {n1, n2, AtomSet::full(n1 * n2)};
  }
  static Relation from_pairs(std::size_t n1, std::size_t n2,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Relation r = empty(n1, n2);
    for (auto [i, j] : pairs) r.set(i, j);
    return r;
  }

  std::size_t cell(std::size_t i, std::size_t j) const { return i * n2 + j; }
  bool test(std::size_t i, std::size_t j) const { return cells.test(cell(i, j)); }
  void set(std::size_t i, std::size_t j) {
    if (i >= n1 || j >= n2) throw Error(ErrorCode::kDimensionMismatch, "cell outside the grid");
    cells.set(cell(i, j));
  }

  /// R2[(i, .)]: the atoms of the second factor paired with i.
  AtomSet row(std::size_t i) const {
    AtomSet out;
    for (std::size_t j = 0; j < n2; ++j)
      if (test(i, j)) out.set(j);
    return out;
  }
  /// R1[(., j)]: the atoms of the first factor paired with j.
  AtomSet column(std::size_t j) const {
    AtomSet out;
    for (std::size_t i = 0; i < n1; ++i)
      if (test(i, j)) out.set(i);
    return out;
  }
  void set_row(std::size_t i, const AtomSet& s) {
    s.for_each([&](std::size_t j) { set(i, j); });
  }

  bool is_full() const { return cells == AtomSet::full(n1 * n2); }
  bool is_subset_of(const Relation& o) const { return cells.is_subset_of(o.cells); }

  Relation transposed() const {
    Relation t = empty(n2, n1);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j)
        if (test(i, j)) t.set(j, i);
    return t;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    cells.for_each([&](std::size_t c) {
      if (!first) s += ',';
      s += "(" + std::to_string(c / n2) + "," + std::to_string(c % n2) + ")";
      first = false;
    });
    return s + "}";
  }

  friend bool operator==(const Relation&, const Relation&) = default;
};

inline Relation operator|(Relation a, const Relation& b) {
  a.cells |= b.cells;
  return a;
}
inline Relation operator&(Relation a, const Relation& b) {
  a.cells &= b.cells;
  return a;
}

inline bool relation_less(const Relation& a, const Relation& b) {
  return canonical_less(a.cells, b.cells);
}

/// a1 x a2 as a set of cells.
inline Relation circ(const ClosureSpace& l1, const ClosureSpace& l2, const AtomSet& a1,
                     const AtomSet& a2) {
  Relation r = Relation::empty(l1.atom_count(), l2.atom_count());
  a1.for_each([&](std::size_t i) { r.set_row(i, a2); });
  return r;
}

/// (a1 x Σ2) ∪ (Σ1 x a2).
inline Relation box(const ClosureSpace& l1, const ClosureSpace& l2, const AtomSet& a1,
                    const AtomSet& a2) {
  return circ(l1, l2, a1, l2.top()) | circ(l1, l2, l1.top(), a2);
}

inline void check_dimensions(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  if (r.n1 != l1.atom_count() || r.n2 != l2.atom_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "relation is " + std::to_string(r.n1) + "x" + std::to_string(r.n2) +
                    ", lattices give " + std::to_string(l1.atom_count()) + "x" +
                    std::to_string(l2.atom_count()));
  }
}

namespace detail {

inline bool is_coatom_or_full(const ClosureSpace& l, const AtomSet& s) {
  return s == l.top() || l.coatom_index(s).has_value();
}

inline std::vector<std::string> grid_labels(std::size_t n1, std::size_t n2) {
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return labels;
}

inline ClosureSpace grid_space(const ClosureSpace& l1, const ClosureSpace& l2,
                               std::vector<AtomSet> family, const std::string& op) {
  std::string name;
  if (!l1.name().empty() && !l2.name().empty()) name = l1.name() + op + l2.name();
  return ClosureSpace::from_family(l1.atom_count() * l2.atom_count(), std::move(family),
                                   std::move(name),
                                   grid_labels(l1.atom_count(), l2.atom_count()));
}

}  // namespace detail

/// Every column section is a coatom set of L1 or Σ1, every row section a
/// coatom set of L2 or Σ2, and R is proper.
inline bool is_star_coatom(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  check_dimensions(l1, l2, r);
  if (r.is_full()) return false;
  for (std::size_t i = 0; i < r.n1; ++i)
    if (!detail::is_coatom_or_full(l2, r.row(i))) return false;
  for (std::size_t j = 0; j < r.n2; ++j)
    if (!detail::is_coatom_or_full(l1, r.column(j))) return false;
  return true;
}

/// Relation of an arrow L1 -> dual(L2): row p is the coatom f(p), or Σ2 when
/// f(p) is ZERO.
inline Relation xi_inv(const ClosureSpace& l2, const AtomMap& f) {
  const std::size_t n1 = f.image.size();
  Relation r = Relation::empty(n1, l2.atom_count());
  for (std::size_t p = 0; p < n1; ++p)
    r.set_row(p, f.image[p] ? l2.coatoms().at(*f.image[p]) : l2.top());
  return r;
}

/// Inverse of xi_inv on Σ'_⊛ ∪ {full}. dual2 must be dual_space(l2).
inline AtomMap xi(const ClosureSpace& l1, const ClosureSpace& l2, const ClosureSpace& dual2,
                  const Relation& r) {
  check_dimensions(l1, l2, r);
  if (!r.is_full() && !is_star_coatom(l1, l2, r)) {
    throw Error(ErrorCode::kNotACoatom, r.to_string() + " is not a coatom of the tensor");
  }
  AtomMap f{&l1, &dual2, {}};
  for (std::size_t p = 0; p < r.n1; ++p) {
    const AtomSet row = r.row(p);
    if (row == l2.top()) {
      f.image.push_back(kZero);
    } else {
      f.image.emplace_back(*l2.coatom_index(row));
    }
  }
  return f;
}

/// Σ'_⊛ through the hom-set L1 -> dual(L2), sorted canonically. The full grid
/// (image of the constant arrow) is excluded.
inline std::vector<Relation> sigma_star(const ClosureSpace& l1, const ClosureSpace& l2,
                                        const Limits& limits = {}) {
  AtomSet::check_capacity(l1.atom_count() * l2.atom_count());
  const ClosureSpace dual2 = dual_space(l2);
  std::vector<Relation> out;
  for (const AtomMap& f : enumerate_homs(l1, dual2, limits)) {
    Relation r = xi_inv(l2, f);
    if (!r.is_full()) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), relation_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Intersection closure of Σ'_⊛ ∪ {full} with no validation. This is what the
/// counterexamples without A0 inspect.
inline std::vector<AtomSet> star_family(const ClosureSpace& l1, const ClosureSpace& l2,
                                        const Limits& limits = {}) {
  std::vector<AtomSet> gens;
  for (const Relation& r : sigma_star(l1, l2, limits)) gens.push_back(r.cells);
  auto family = intersection_closure(l1.atom_count() * l2.atom_count(), gens, limits);
  std::sort(family.begin(), family.end(), canonical_less);
  return family;
}

inline void require_object(const ClosureSpace& l) {
  const A0Report rep = check_A0(l);
  if (!rep.holds()) {
    throw Error(ErrorCode::kNotAnObject,
                (l.name().empty() ? std::string("lattice") : l.name()) +
                    (rep.a0 ? " fails the dual of A0" : " fails A0"));
  }
}

/// L1 ⊛ L2. The result is re-validated: coatoms equal Σ'_⊛ and A0 holds on
/// both sides.
inline ClosureSpace star_tensor(const ClosureSpace& l1, const ClosureSpace& l2,
                                const Limits& limits = {}) {
  require_object(l1);
  require_object(l2);
  const auto coatoms = sigma_star(l1, l2, limits);
  std::vector<AtomSet> gens;
  for (const Relation& r : coatoms) gens.push_back(r.cells);
  auto family = intersection_closure(l1.atom_count() * l2.atom_count(), gens, limits);
  ClosureSpace t = detail::grid_space(l1, l2, std::move(family), "*");
  if (t.coatoms() != gens) {
    throw Error(ErrorCode::kNotAnObject, "tensor coatoms differ from the star coatoms");
  }
  if (!check_A0(t).holds()) throw Error(ErrorCode::kNotAnObject, "tensor fails A0");
  return t;
}

/// Intersection closure of all boxes a1□a2.
inline ClosureSpace wedge(const ClosureSpace& l1, const ClosureSpace& l2,
                          const Limits& limits = {}) {
  std::vector<AtomSet> gens;
  for (const AtomSet& a1 : l1.family())
    for (const AtomSet& a2 : l2.family()) gens.push_back(box(l1, l2, a1, a2).cells);
  auto family = intersection_closure(l1.atom_count() * l2.atom_count(), gens, limits);
  return detail::grid_space(l1, l2, std::move(family), "^");
}

/// Smallest member of L1 ∧ L2 containing r. For fixed a1 the least a2 with
/// r ⊆ a1□a2 is the closure of the rows outside a1.
inline Relation wedge_closure(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  check_dimensions(l1, l2, r);
  Relation out = Relation::full(r.n1, r.n2);
  for (const AtomSet& a1 : l1.family()) {
    AtomSet rows;
    for (std::size_t i = 0; i < r.n1; ++i)
      if (!a1.test(i)) rows |= r.row(i);
    out = out & box(l1, l2, a1, l2.closure(rows));
  }
  return out;
}

inline bool wedge_contains(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  return wedge_closure(l1, l2, r) == r;
}

/// All sections closed.
inline bool vee_contains(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  check_dimensions(l1, l2, r);
  for (std::size_t i = 0; i < r.n1; ++i)
    if (!l2.contains(r.row(i))) return false;
  for (std::size_t j = 0; j < r.n2; ++j)
    if (!l1.contains(r.column(j))) return false;
  return true;
}

/// Alternates row and column closures until both are stable.
inline Relation vee_closure(const ClosureSpace& l1, const ClosureSpace& l2, Relation r) {
  check_dimensions(l1, l2, r);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < r.n1; ++i) {
      const AtomSet row = r.row(i);
      const AtomSet c = l2.closure(row);
      if (!(c == row)) {
        r.set_row(i, c);
        changed = true;
      }
    }
    for (std::size_t j = 0; j < r.n2; ++j) {
      const AtomSet col = r.column(j);
      const AtomSet c = l1.closure(col);
      if (!(c == col)) {
        c.for_each([&](std::size_t i) { r.set(i, j); });
        changed = true;
      }
    }
  }
  return r;
}

inline bool is_vee_coatom(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r) {
  if (r.is_full() || !vee_contains(l1, l2, r)) return false;
  const AtomSet missing = AtomSet::full(r.n1 * r.n2) - r.cells;
  bool ok = true;
  missing.for_each([&](std::size_t c) {
    if (!ok) return;
    Relation bigger = r;
    bigger.cells.set(c);
    if (!vee_closure(l1, l2, bigger).is_full()) ok = false;
  });
  return ok;
}

/// L1 ∨ L2, materialized by choosing closed rows and pruning columns against
/// the traces of Cl(L1). Limited to limits.max_cells grid cells.
inline ClosureSpace vee(const ClosureSpace& l1, const ClosureSpace& l2,
                        const Limits& limits = {}) {
  const std::size_t n1 = l1.atom_count();
  const std::size_t n2 = l2.atom_count();
  if (n1 * n2 > limits.max_cells) {
    throw Error(ErrorCode::kSizeGuard, "vee materialization limited to " +
                                           std::to_string(limits.max_cells) + " cells");
  }
  std::vector<AtomSet> family;
  detail::NodeCounter nodes(limits.max_nodes, "vee materialization");
  Relation cur = Relation::empty(n1, n2);
  AtomSet prefix;

  auto columns_ok = [&]() {
    for (std::size_t j = 0; j < n2; ++j) {
      const AtomSet col = cur.column(j);
      bool found = false;
      for (const AtomSet& c : l1.family()) {
        if ((c & prefix) == col) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    nodes.tick();
    if (i == n1) {
      family.push_back(cur.cells);
      if (family.size() > limits.max_family) {
        throw Error(ErrorCode::kSizeGuard, "vee family too large");
      }
      return;
    }
    prefix.set(i);
    for (const AtomSet& row : l2.family()) {
      const Relation saved = cur;
      cur.set_row(i, row);
      if (columns_ok()) self(self, i + 1);
      cur = saved;
    }
    prefix.reset(i);
  };
  rec(rec, 0);
  return detail::grid_space(l1, l2, std::move(family), "v");
}

/// Members of Σ'_⊛ containing r, found by restricting each row of the
/// hom search to coatoms above the row of r.
inline std::vector<Relation> star_coatoms_above(const ClosureSpace& l1, const ClosureSpace& l2,
                                                const Relation& r, const Limits& limits = {}) {
  check_dimensions(l1, l2, r);
  const ClosureSpace dual2 = dual_space(l2);
  std::vector<std::vector<AtomImage>> candidates(r.n1);
  for (std::size_t p = 0; p < r.n1; ++p) {
    candidates[p].push_back(kZero);
    const AtomSet row = r.row(p);
    for (std::size_t k = 0; k < l2.coatoms().size(); ++k)
      if (row.is_subset_of(l2.coatoms()[k])) candidates[p].emplace_back(k);
  }
  std::vector<Relation> out;
  for (const AtomMap& f : enumerate_homs(l1, dual2, limits, &candidates)) {
    Relation x = xi_inv(l2, f);
    if (!x.is_full()) out.push_back(x);
  }
  return out;
}

/// Smallest member of L1 ⊛ L2 containing r.
inline Relation star_closure(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r,
                             const Limits& limits = {}) {
  Relation out = Relation::full(r.n1, r.n2);
  for (const Relation& x : star_coatoms_above(l1, l2, r, limits)) out = out & x;
  return out;
}

inline bool star_contains(const ClosureSpace& l1, const ClosureSpace& l2, const Relation& r,
                          const Limits& limits = {}) {
  return star_closure(l1, l2, r, limits) == r;
}

/// L1 ⊸ L2 = (L1 ⊛ L2^op)^op.
inline ClosureSpace lollipop(const ClosureSpace& l1, const ClosureSpace& l2,
                             const Limits& limits = {}) {
  const ClosureSpace dual2 = dual_space(l2);
  ClosureSpace t = dual_space(star_tensor(l1, dual2, limits));
  if (!l1.name().empty() && !l2.name().empty()) t.set_name(l1.name() + "-o" + l2.name());
  return t;
}

/// u(p1, p2) = (f1 p1, f2 p2), ZERO when either side is ZERO. t1 and t2 are
/// the tensor spaces of the sources and of the targets.
inline AtomMap arrow_tensor(const AtomMap& f1, const AtomMap& f2, const ClosureSpace& t1,
                            const ClosureSpace& t2) {
  const std::size_t n1 = f1.image.size();
  const std::size_t n2 = f2.image.size();
  const std::size_t m2 = f2.target->atom_count();
  if (t1.atom_count() != n1 * n2 || t2.atom_count() != f1.target->atom_count() * m2) {
    throw Error(ErrorCode::kDimensionMismatch, "tensor spaces do not match the arrows");
  }
  AtomMap u{&t1, &t2, {}};
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const AtomImage a = f1.image[i];
      const AtomImage b = f2.image[j];
      u.image.push_back(a && b ? AtomImage(*a * m2 + *b) : kZero);
    }
  }
  const ArrowCheck chk = is_arrow(u);
  if (!chk) throw Error(ErrorCode::kInvalidArrow, "tensor of arrows: " + chk.reason);
  return u;
}

inline AtomSet grid_permute(const AtomSet& cells, std::size_t n2,
                            const std::vector<std::size_t>& u1,
                            const std::vector<std::size_t>& u2) {
  AtomSet out;
  cells.for_each([&](std::size_t c) { out.set(u1[c / n2] * n2 + u2[c % n2]); });
  return out;
}

/// Membership in S(L1, L2): L1 ∧ L2 ⊆ L ⊆ L1 ∨ L2 and every pair of
/// automorphisms lifts to the grid.
inline bool in_S(const ClosureSpace& l1, const ClosureSpace& l2, const ClosureSpace& l,
                 const Limits& limits = {}) {
  const std::size_t n1 = l1.atom_count();
  const std::size_t n2 = l2.atom_count();
  if (l.atom_count() != n1 * n2) return false;
  // L is intersection closed, so the lower bound only needs the generators.
  for (const AtomSet& a1 : l1.family())
    for (const AtomSet& a2 : l2.family())
      if (!l.contains(box(l1, l2, a1, a2).cells)) return false;
  for (const AtomSet& c : l.family())
    if (!vee_contains(l1, l2, Relation{n1, n2, c})) return false;
  const auto aut1 = automorphisms(l1, limits);
  const auto aut2 = automorphisms(l2, limits);
  for (const auto& u1 : aut1)
    for (const auto& u2 : aut2)
      for (const AtomSet& c : l.family())
        if (!l.contains(grid_permute(c, n2, u1, u2))) return false;
  return true;
}

/// Rows g(p1, -) and columns g(-, p2) are arrows into l0. The grid map is an
/// AtomMap whose source is any space on the grid (only the image is read).
inline bool is_weak_bimorphism(const ClosureSpace& l1, const ClosureSpace& l2,
                               const ClosureSpace& l0, const std::vector<AtomImage>& grid) {
  const std::size_t n1 = l1.atom_count();
  const std::size_t n2 = l2.atom_count();
  if (grid.size() != n1 * n2) throw Error(ErrorCode::kDimensionMismatch, "grid map size");
  for (std::size_t i = 0; i < n1; ++i) {
    AtomMap row{&l2, &l0, {}};
    for (std::size_t j = 0; j < n2; ++j) row.image.push_back(grid[i * n2 + j]);
    if (!is_arrow(row)) return false;
  }
  for (std::size_t j = 0; j < n2; ++j) {
    AtomMap col{&l1, &l0, {}};
    for (std::size_t i = 0; i < n1; ++i) col.image.push_back(grid[i * n2 + j]);
    if (!is_arrow(col)) return false;
  }
  return true;
}

struct UniversalReport {
  bool ok = true;
  std::size_t bimorphisms = 0;
  std::size_t tensor_homs = 0;
  bool canonical_is_bimorphism = false;
  std::optional<std::vector<AtomImage>> witness;
  std::string reason;
};

/// Enumerates every weak bimorphism g into l0 (rows drawn from hom(L2, L0),
/// columns checked) and requires exactly one arrow h: L1 ⊛ L2 -> L0 agreeing
/// with g on atom pairs. The hom-set of the tensor must be exhausted by
/// these h, and the canonical map into the tensor must be a weak bimorphism.
inline UniversalReport universal_check(const ClosureSpace& l1, const ClosureSpace& l2,
                                       const ClosureSpace& l0, const Limits& limits = {}) {
  for (const ClosureSpace* l : {&l1, &l2, &l0}) {
    if (l->atom_count() > limits.max_bimorphism_atoms) {
      throw Error(ErrorCode::kSizeGuard,
                  "universal check limited to " + std::to_string(limits.max_bimorphism_atoms) +
                      " atoms per lattice");
    }
  }
  UniversalReport rep;
  const ClosureSpace t = star_tensor(l1, l2, limits);
  const std::size_t n1 = l1.atom_count();
  const std::size_t n2 = l2.atom_count();

  std::vector<AtomImage> canonical(n1 * n2);
  for (std::size_t c = 0; c < n1 * n2; ++c) canonical[c] = c;
  rep.canonical_is_bimorphism = is_weak_bimorphism(l1, l2, t, canonical);
  if (!rep.canonical_is_bimorphism) {
    rep.ok = false;
    rep.reason = "canonical map into the tensor is not a weak bimorphism";
    return rep;
  }

  const auto hs = enumerate_homs(t, l0, limits);
  rep.tensor_homs = hs.size();
  std::set<std::vector<AtomImage>> h_images;
  for (const AtomMap& h : hs) h_images.insert(h.image);
  if (h_images.size() != hs.size()) {
    rep.ok = false;
    rep.reason = "two arrows out of the tensor agree on atoms";
    return rep;
  }

  const auto rows = enumerate_homs(l2, l0, limits);
  detail::NodeCounter nodes(limits.max_nodes, "weak bimorphism enumeration");
  std::vector<AtomImage> grid(n1 * n2);
  std::set<std::vector<AtomImage>> matched;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    nodes.tick();
    if (!rep.ok) return;
    if (i == n1) {
      if (!is_weak_bimorphism(l1, l2, l0, grid)) return;
      ++rep.bimorphisms;
      if (!h_images.contains(grid)) {
        rep.ok = false;
        rep.witness = grid;
        rep.reason = "weak bimorphism without a factoring arrow";
        return;
      }
      matched.insert(grid);
      return;
    }
    for (const AtomMap& row : rows) {
      std::copy(row.image.begin(), row.image.end(), grid.begin() + i * n2);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  if (rep.ok && matched.size() != h_images.size()) {
    rep.ok = false;
    rep.reason = "some arrow out of the tensor does not restrict to a weak bimorphism";
  }
  return rep;
}

}  // namespace chulat

#endif  // CHULAT_TENSOR_HPP_
