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

// Finite Chu spaces over 2, pointed (index 0 is the basepoint of both
// carriers) or plain.
//
// Pair coding, used by every tensor and structure arrow below:
//   pointed: (a, b) -> 0 if a or b is the basepoint, else 1 + (a-1)(|B|-1) + (b-1)
//   plain:   (a, b) -> a |B| + b

#ifndef CHULAT_CHU_HPP_
#define CHULAT_CHU_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"
#include "chulat/morphisms.hpp"

namespace chulat {

struct PointedSet {
  std::size_t size = 1;
  std::vector<std::string> labels;
};

struct PairCoder {
  std::size_t na = 0;
  std::size_t nb = 0;
  bool pointed = true;

  std::size_t size() const { return pointed ? (na - 1) * (nb - 1) + 1 : na * nb; }
  std::size_t code(std::size_t a, std::size_t b) const {
    if (!pointed) return a * nb + b;
    if (a == 0 || b == 0) return 0;
    return 1 + (a - 1) * (nb - 1) + (b - 1);
  }
  /// Inverse on non-base codes; the base decodes to (0, 0).
  std::pair<std::size_t, std::size_t> decode(std::size_t c) const {
    if (!pointed) return {c / nb, c % nb};
    if (c == 0) return {0, 0};
    return {1 + (c - 1) / (nb - 1), 1 + (c - 1) % (nb - 1)};
  }
};

inline PairCoder smash(const PointedSet& a, const PointedSet& b) {
  return PairCoder{a.size, b.size, true};
}

struct ChuObject {
  std::size_t a = 1;
  std::size_t x = 1;
  bool pointed = true;
  std::vector<std::uint8_t> r;  // row-major a x x

  std::uint8_t at(std::size_t i, std::size_t j) const { return r[i * x + j]; }
  void put(std::size_t i, std::size_t j, bool v) { r[i * x + j] = v ? 1 : 0; }

  static ChuObject zeros(std::size_t a, std::size_t x, bool pointed) {
    return {a, x, pointed, std::vector<std::uint8_t>(a * x, 0)};
  }

  friend bool operator==(const ChuObject&, const ChuObject&) = default;
};

inline void validate(const ChuObject& o) {
  if (o.a == 0 || o.x == 0 || o.r.size() != o.a * o.x) {
    throw Error(ErrorCode::kDimensionMismatch, "Chu matrix does not match its carriers");
  }
  if (!o.pointed) return;
  for (std::size_t j = 0; j < o.x; ++j)
    if (o.at(0, j)) throw Error(ErrorCode::kInvalidArrow, "base row of a pointed Chu space");
  for (std::size_t i = 0; i < o.a; ++i)
    if (o.at(i, 0)) throw Error(ErrorCode::kInvalidArrow, "base column of a pointed Chu space");
}

/// ⊤ = (2₀, r, 2₀) with r the identity on 2₀.
inline ChuObject chu_top() {
  ChuObject t = ChuObject::zeros(2, 2, true);
  t.put(1, 1, true);
  return t;
}

inline ChuObject chu_dual(const ChuObject& o) {
  ChuObject d = ChuObject::zeros(o.x, o.a, o.pointed);
  for (std::size_t i = 0; i < o.a; ++i)
    for (std::size_t j = 0; j < o.x; ++j) d.put(j, i, o.at(i, j));
  return d;
}

inline ChuObject chu_bottom() { return chu_dual(chu_top()); }

/// f on the first carriers forward, g on the second carriers backward.
struct ChuArrow {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;

  friend bool operator==(const ChuArrow&, const ChuArrow&) = default;
  friend bool operator<(const ChuArrow& u, const ChuArrow& v) {
    return std::tie(u.f, u.g) < std::tie(v.f, v.g);
  }
};

inline ChuArrow arrow_dual(const ChuArrow& u) { return {u.g, u.f}; }

inline ChuArrow chu_identity(const ChuObject& o) {
  ChuArrow u;
  for (std::size_t i = 0; i < o.a; ++i) u.f.push_back(i);
  for (std::size_t j = 0; j < o.x; ++j) u.g.push_back(j);
  return u;
}

/// outer after inner.
inline ChuArrow chu_compose(const ChuArrow& outer, const ChuArrow& inner) {
  ChuArrow out;
  for (std::size_t v : inner.f) out.f.push_back(outer.f.at(v));
  for (std::size_t v : outer.g) out.g.push_back(inner.g.at(v));
  return out;
}

/// s(f a, y) = r(a, g y) everywhere, plus pointedness in pointed mode.
inline bool is_chu_arrow(const ChuObject& o1, const ChuObject& o2, const ChuArrow& u) {
  if (u.f.size() != o1.a || u.g.size() != o2.x) return false;
  for (std::size_t v : u.f)
    if (v >= o2.a) return false;
  for (std::size_t v : u.g)
    if (v >= o1.x) return false;
  if (o1.pointed && (u.f[0] != 0 || u.g[0] != 0)) return false;
  for (std::size_t a = 0; a < o1.a; ++a)
    for (std::size_t y = 0; y < o2.x; ++y)
      if (o2.at(u.f[a], y) != o1.at(a, u.g[y])) return false;
  return true;
}

namespace detail {

/// Backtracking over f row by row. Each column y of the target keeps the
/// sources x whose column agrees with s(f(.), y) on the assigned rows; g is
/// the product of the surviving candidates.
inline std::vector<ChuArrow> chu_homs_by_f(const ChuObject& o1, const ChuObject& o2,
                                           const Limits& limits) {
  const bool pointed = o1.pointed;
  std::vector<std::vector<std::size_t>> cand(o2.x);
  for (std::size_t y = 0; y < o2.x; ++y) {
    if (pointed && y == 0) {
      cand[y] = {0};
      continue;
    }
    for (std::size_t x = 0; x < o1.x; ++x) cand[y].push_back(x);
  }
  NodeCounter nodes(limits.max_nodes, "Chu hom enumeration");
  std::vector<ChuArrow> out;
  std::vector<std::size_t> f(o1.a, 0);

  auto emit = [&](const std::vector<std::vector<std::size_t>>& c) {
    std::vector<std::size_t> g(o2.x);
    auto rec = [&](auto&& self, std::size_t y) -> void {
      if (y == o2.x) {
        out.push_back({f, g});
        return;
      }
      for (std::size_t x : c[y]) {
        g[y] = x;
        self(self, y + 1);
      }
    };
    rec(rec, 0);
  };

  auto rec = [&](auto&& self, std::size_t a,
                 const std::vector<std::vector<std::size_t>>& c) -> void {
    nodes.tick();
    if (a == o1.a) {
      emit(c);
      return;
    }
    const std::size_t lo = 0;
    const std::size_t hi = (pointed && a == 0) ? 1 : o2.a;
    for (std::size_t b = lo; b < hi; ++b) {
      f[a] = b;
      std::vector<std::vector<std::size_t>> next(o2.x);
      bool alive = true;
      for (std::size_t y = 0; y < o2.x && alive; ++y) {
        const std::uint8_t want = o2.at(b, y);
        for (std::size_t x : c[y])
          if (o1.at(a, x) == want) next[y].push_back(x);
        alive = !next[y].empty();
      }
      if (alive) self(self, a + 1, next);
    }
  };
  rec(rec, 0, cand);
  return out;
}

}  // namespace detail

/// All Chu arrows o1 -> o2, ordered lexicographically on (f, g). The search
/// runs over whichever side has the smaller naive space; arrows o1 -> o2 are
/// the duals of arrows o2^⊥ -> o1^⊥.
inline std::vector<ChuArrow> chu_homs(const ChuObject& o1, const ChuObject& o2,
                                      const Limits& limits = {}) {
  if (o1.pointed != o2.pointed) throw Error(ErrorCode::kMismatch, "pointed and plain Chu spaces");
  const double by_f = static_cast<double>(o1.a) * std::log(static_cast<double>(o2.a) + 1.0);
  const double by_g = static_cast<double>(o2.x) * std::log(static_cast<double>(o1.x) + 1.0);
  std::vector<ChuArrow> out;
  if (by_f <= by_g) {
    out = detail::chu_homs_by_f(o1, o2, limits);
  } else {
    for (const ChuArrow& u : detail::chu_homs_by_f(chu_dual(o2), chu_dual(o1), limits))
      out.push_back(arrow_dual(u));
    std::sort(out.begin(), out.end());
  }
  return out;
}

/// o1 ⊗ o2 with its second carrier the hom-set o1 -> o2^⊥ by index.
struct ChuTensor {
  ChuObject object;
  ChuObject left;
  ChuObject right;
  PairCoder coder;
  std::vector<ChuArrow> homs;
  std::map<ChuArrow, std::size_t> index;

  std::size_t find(const ChuArrow& u) const {
    auto it = index.find(u);
    if (it == index.end()) throw Error(ErrorCode::kInvalidArrow, "not an arrow of the hom-set");
    return it->second;
  }
};

/// t((a1, a2), (f, g)) = r1(a1, g(a2)).
inline ChuTensor chu_tensor(const ChuObject& o1, const ChuObject& o2, const Limits& limits = {}) {
  ChuTensor t;
  t.left = o1;
  t.right = o2;
  t.coder = PairCoder{o1.a, o2.a, o1.pointed};
  t.homs = chu_homs(o1, chu_dual(o2), limits);
  for (std::size_t k = 0; k < t.homs.size(); ++k) t.index.emplace(t.homs[k], k);
  t.object = ChuObject::zeros(t.coder.size(), t.homs.size(), o1.pointed);
  for (std::size_t a1 = 0; a1 < o1.a; ++a1) {
    for (std::size_t a2 = 0; a2 < o2.a; ++a2) {
      const std::size_t c = t.coder.code(a1, a2);
      for (std::size_t k = 0; k < t.homs.size(); ++k)
        if (o1.at(a1, t.homs[k].g[a2])) t.object.put(c, k, true);
    }
  }
  return t;
}

/// u1 ⊗ u2 : src -> dst where src = o1 ⊗ o2 and dst = p1 ⊗ p2 for
/// u_i : o_i -> p_i. Second component (f, g) -> (g2 f f1, g1 g f2).
inline ChuArrow chu_tensor_arrows(const ChuArrow& u1, const ChuArrow& u2, const ChuTensor& src,
                                  const ChuTensor& dst) {
  ChuArrow w;
  w.f.assign(src.object.a, 0);
  for (std::size_t a1 = 0; a1 < src.left.a; ++a1)
    for (std::size_t a2 = 0; a2 < src.right.a; ++a2)
      w.f[src.coder.code(a1, a2)] = dst.coder.code(u1.f[a1], u2.f[a2]);
  for (const ChuArrow& h : dst.homs) {
    ChuArrow pulled;
    for (std::size_t a1 = 0; a1 < src.left.a; ++a1) pulled.f.push_back(u2.g[h.f[u1.f[a1]]]);
    for (std::size_t a2 = 0; a2 < src.right.a; ++a2) pulled.g.push_back(u1.g[h.g[u2.f[a2]]]);
    w.g.push_back(src.find(pulled));
  }
  return w;
}

/// F(L): atoms and coatoms shifted by one behind a basepoint; r(p, x) = 1
/// iff p is not below x.
inline ChuObject functor_F(const ClosureSpace& l) {
  const auto& xs = l.coatoms();
  ChuObject o = ChuObject::zeros(l.atom_count() + 1, xs.size() + 1, true);
  for (std::size_t p = 0; p < l.atom_count(); ++p)
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (!xs[k].test(p)) o.put(p + 1, k + 1, true);
  return o;
}

/// F(f) = (f, f°) on shifted indices.
inline ChuArrow functor_F_arrow(const AtomMap& f) {
  const ClosureSpace& s = *f.source;
  ChuArrow u;
  u.f.push_back(0);
  for (const AtomImage& v : f.image) u.f.push_back(v ? *v + 1 : 0);
  u.g.push_back(0);
  for (const AtomSet& x : f.target->coatoms()) {
    const AtomSet back = preimage(f, x);
    if (back == s.top()) {
      u.g.push_back(0);
    } else if (auto idx = s.coatom_index(back)) {
      u.g.push_back(*idx + 1);
    } else {
      throw Error(ErrorCode::kInvalidArrow, image_to_string(f) + " is not an arrow");
    }
  }
  return u;
}

/// Atom map read off the first component of a Chu arrow F(l1) -> F(l2).
inline AtomMap atom_map_of(const ChuArrow& u, const ClosureSpace& l1, const ClosureSpace& l2) {
  AtomMap f{&l1, &l2, {}};
  for (std::size_t p = 0; p < l1.atom_count(); ++p)
    f.image.push_back(u.f.at(p + 1) == 0 ? kZero : AtomImage(u.f[p + 1] - 1));
  return f;
}

/// G(L) = (Σ, ∈, L), plain.
inline ChuObject functor_G(const ClosureSpace& l) {
  ChuObject o = ChuObject::zeros(l.atom_count(), l.size(), false);
  for (std::size_t c = 0; c < l.size(); ++c)
    l.family()[c].for_each([&](std::size_t p) { o.put(p, c, true); });
  return o;
}

/// G(f) = (f, f°); f must send atoms to atoms.
inline ChuArrow functor_G_arrow(const AtomMap& f) {
  ChuArrow u;
  for (const AtomImage& v : f.image) {
    if (!v) throw Error(ErrorCode::kInvalidArrow, "G needs atoms sent to atoms");
    u.f.push_back(*v);
  }
  for (const AtomSet& b : f.target->family()) {
    const AtomSet back = preimage(f, b);
    auto idx = f.source->index_of(back);
    if (!idx) throw Error(ErrorCode::kInvalidArrow, "preimage " + back.to_string() + " not closed");
    u.g.push_back(*idx);
  }
  return u;
}

/// Bijections (φ on rows, ψ on columns) with s(φ a, ψ x) = r(a, x). Rows are
/// matched by backtracking with partial column signatures compared as
/// multisets; columns are then paired greedily.
inline std::optional<ChuArrow> chu_iso(const ChuObject& o1, const ChuObject& o2,
                                       const Limits& limits = {}) {
  if (o1.a != o2.a || o1.x != o2.x || o1.pointed != o2.pointed) return std::nullopt;
  if (o1.a > limits.max_chu_carrier || o1.x > limits.max_chu_carrier) {
    throw Error(ErrorCode::kSizeGuard, "Chu isomorphism search limited to " +
                                           std::to_string(limits.max_chu_carrier) +
                                           " rows and columns");
  }
  const std::size_t na = o1.a;
  const std::size_t nx = o1.x;
  auto row_of = [](const ChuObject& o, std::size_t i) {
    return std::vector<std::uint8_t>(o.r.begin() + i * o.x, o.r.begin() + (i + 1) * o.x);
  };
  auto weight = [&](const ChuObject& o, std::size_t i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < o.x; ++j) w += o.at(i, j);
    return w;
  };
  std::vector<std::optional<std::size_t>> same_as_before(na);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = i; k-- > 0;)
      if (row_of(o1, i) == row_of(o1, k)) {
        same_as_before[i] = k;
        break;
      }

  std::vector<std::size_t> phi(na);
  std::vector<bool> used(na, false);
  std::vector<std::vector<std::uint8_t>> sig1(nx), sig2(nx);
  detail::NodeCounter nodes(limits.max_nodes, "Chu isomorphism search");
  std::optional<ChuArrow> found;

  auto columns_match = [&]() {
    auto a = sig1;
    auto b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  auto finish = [&]() -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> psi(nx);
    std::vector<bool> taken(nx, false);
    for (std::size_t j = 0; j < nx; ++j) {
      bool ok = false;
      for (std::size_t k = 0; k < nx; ++k) {
        if (taken[k] || sig1[j] != sig2[k]) continue;
        if (o1.pointed && ((j == 0) != (k == 0))) continue;
        psi[j] = k;
        taken[k] = true;
        ok = true;
        break;
      }
      if (!ok) return std::nullopt;
    }
    return psi;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    nodes.tick();
    if (found) return;
    if (i == na) {
      if (auto psi = finish()) found = ChuArrow{phi, *psi};
      return;
    }
    for (std::size_t t = 0; t < na && !found; ++t) {
      if (used[t] || weight(o1, i) != weight(o2, t)) continue;
      if (o1.pointed && ((i == 0) != (t == 0))) continue;
      if (same_as_before[i] && t < phi[*same_as_before[i]]) continue;
      phi[i] = t;
      used[t] = true;
      for (std::size_t j = 0; j < nx; ++j) {
        sig1[j].push_back(o1.at(i, j));
        sig2[j].push_back(o2.at(t, j));
      }
      if (columns_match()) self(self, i + 1);
      for (std::size_t j = 0; j < nx; ++j) {
        sig1[j].pop_back();
        sig2[j].pop_back();
      }
      used[t] = false;
    }
  };
  rec(rec, 0);
  return found;
}

// Structure arrows. Each takes the concrete tensors it connects.

/// α : (A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C). ab = A⊗B, ab_c = (A⊗B)⊗C, bc = B⊗C,
/// a_bc = A⊗(B⊗C).
inline ChuArrow associator(const ChuTensor& ab, const ChuTensor& ab_c, const ChuTensor& bc,
                           const ChuTensor& a_bc) {
  const ChuObject& A = ab.left;
  const ChuObject& B = ab.right;
  const ChuObject& C = bc.right;
  ChuArrow w;
  w.f.assign(ab_c.object.a, 0);
  for (std::size_t a = 0; a < A.a; ++a)
    for (std::size_t b = 0; b < B.a; ++b)
      for (std::size_t c = 0; c < C.a; ++c)
        w.f[ab_c.coder.code(ab.coder.code(a, b), c)] = a_bc.coder.code(a, bc.coder.code(b, c));

  for (const ChuArrow& phi : a_bc.homs) {
    // phi.f indexes bc.homs; out.f lands in X_C and out.g indexes ab.homs.
    ChuArrow out;
    out.f.assign(ab.object.a, 0);
    for (std::size_t a = 0; a < A.a; ++a)
      for (std::size_t b = 0; b < B.a; ++b)
        out.f[ab.coder.code(a, b)] = bc.homs[phi.f[a]].f[b];
    for (std::size_t c = 0; c < C.a; ++c) {
      ChuArrow uv;
      for (std::size_t a = 0; a < A.a; ++a) uv.f.push_back(bc.homs[phi.f[a]].g[c]);
      for (std::size_t b = 0; b < B.a; ++b) uv.g.push_back(phi.g[bc.coder.code(b, c)]);
      out.g.push_back(ab.find(uv));
    }
    w.g.push_back(ab_c.find(out));
  }
  return w;
}

/// s : A ⊗ B -> B ⊗ A.
inline ChuArrow symmetry(const ChuTensor& ab, const ChuTensor& ba) {
  ChuArrow w;
  w.f.assign(ab.object.a, 0);
  for (std::size_t a = 0; a < ab.left.a; ++a)
    for (std::size_t b = 0; b < ab.right.a; ++b)
      w.f[ab.coder.code(a, b)] = ba.coder.code(b, a);
  for (const ChuArrow& h : ba.homs) w.g.push_back(ab.find(ChuArrow{h.g, h.f}));
  return w;
}

/// r : A ⊗ ⊤ -> A.
inline ChuArrow right_unitor(const ChuTensor& a_top) {
  const ChuObject& A = a_top.left;
  ChuArrow w;
  w.f.assign(a_top.object.a, 0);
  for (std::size_t a = 0; a < A.a; ++a)
    for (std::size_t t = 0; t < a_top.right.a; ++t)
      w.f[a_top.coder.code(a, t)] = t == 0 ? 0 : a;
  for (std::size_t x = 0; x < A.x; ++x) {
    ChuArrow h;
    for (std::size_t a = 0; a < A.a; ++a) h.f.push_back(A.at(a, x));
    h.g = {0, x};
    w.g.push_back(a_top.find(h));
  }
  return w;
}

/// l : ⊤ ⊗ A -> A.
inline ChuArrow left_unitor(const ChuTensor& top_a) {
  const ChuObject& A = top_a.right;
  ChuArrow w;
  w.f.assign(top_a.object.a, 0);
  for (std::size_t t = 0; t < top_a.left.a; ++t)
    for (std::size_t a = 0; a < A.a; ++a)
      w.f[top_a.coder.code(t, a)] = t == 0 ? 0 : a;
  for (std::size_t x = 0; x < A.x; ++x) {
    ChuArrow h;
    h.f = {0, x};
    for (std::size_t a = 0; a < A.a; ++a) h.g.push_back(A.at(a, x));
    w.g.push_back(top_a.find(h));
  }
  return w;
}

}  // namespace chulat

#endif  // CHULAT_CHU_HPP_
