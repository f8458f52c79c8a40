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

// Executable checks. Each returns a CheckReport; a guard that fires turns
// the check into Skipped, any other library error into Fail.

#ifndef CHULAT_VERIFY_HPP_
#define CHULAT_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chulat/chu.hpp"
#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"
#include "chulat/instances.hpp"
#include "chulat/morphisms.hpp"
#include "chulat/tensor.hpp"

namespace chulat {

using json = nlohmann::json;

enum class Status { kPass, kFail, kSkipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "unknown";
}

struct CheckReport {
  std::string name;
  Status status = Status::kPass;
  json witness;
  json stats = json::object();
  std::string guard;
  double elapsed_ms = 0;

  bool passed() const { return status == Status::kPass; }
  bool failed() const { return status == Status::kFail; }

  void fail(const std::string& what, json detail = json::object()) {
    status = Status::kFail;
    witness = json{{"reason", what}, {"detail", std::move(detail)}};
  }

  /// Deterministic part of the report; timing is left out.
  json to_json() const {
    json j{{"name", name}, {"status", to_string(status)}, {"stats", stats}};
    if (!witness.is_null()) j["witness"] = witness;
    if (!guard.empty()) j["guard"] = guard;
    return j;
  }
};

inline json to_json(const AtomMap& f) {
  json img = json::array();
  for (const AtomImage& v : f.image) img.push_back(v ? json(*v) : json(nullptr));
  return img;
}

inline json to_json(const Relation& r) {
  json cells = json::array();
  r.cells.for_each([&](std::size_t c) { cells.push_back({c / r.n2, c % r.n2}); });
  return json{{"n1", r.n1}, {"n2", r.n2}, {"cells", cells}};
}

inline json to_json(const ChuArrow& u) { return json{{"f", u.f}, {"g", u.g}}; }

namespace detail {

inline CheckReport guarded(const std::string& name, const std::function<void(CheckReport&)>& body) {
  CheckReport rep;
  rep.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSizeGuard) {
      rep.status = Status::kSkipped;
      rep.guard = e.what();
      rep.witness = nullptr;
    } else {
      rep.fail("library error", json{{"error", e.what()}});
    }
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::string pair_name(const ClosureSpace& a, const ClosureSpace& b) {
  return (a.name().empty() ? "?" : a.name()) + "," + (b.name().empty() ? "?" : b.name());
}

/// chu_dual(F(L)) with its columns moved to the atom order of F(dual(L)).
inline ChuObject dual_in_op_order(const ClosureSpace& l, const ClosureSpace& d) {
  const ChuObject lhs = chu_dual(functor_F(l));
  const auto perm = double_dual_relabeling(l, d);
  ChuObject out = ChuObject::zeros(lhs.a, lhs.x, true);
  for (std::size_t i = 0; i < lhs.a; ++i)
    for (std::size_t p = 0; p < l.atom_count(); ++p) out.put(i, perm[p] + 1, lhs.at(i, p + 1));
  return out;
}

/// Up to n distinct indices below total, drawn from a seeded mt19937.
inline std::vector<std::size_t> sample_indices(std::size_t total, std::size_t n,
                                               std::uint32_t seed) {
  std::vector<std::size_t> out;
  if (total <= n) {
    for (std::size_t i = 0; i < total; ++i) out.push_back(i);
    return out;
  }
  std::mt19937 rng(seed);
  std::set<std::size_t> seen;
  while (out.size() < n) {
    const std::size_t k = rng() % total;
    if (seen.insert(k).second) out.push_back(k);
  }
  return out;
}

}  // namespace detail

/// f -> F(f) is a bijection of hom-sets; F(L^op) equals F(L)^⊥ after the
/// double-dual relabeling; F(2) ≅ ⊤.
inline CheckReport verify_functor(const ClosureSpace& l1, const ClosureSpace& l2,
                                  const Limits& limits = {}) {
  return detail::guarded("functor:" + detail::pair_name(l1, l2), [&](CheckReport& rep) {
    const auto homs = enumerate_homs(l1, l2, limits);
    const auto chu = chu_homs(functor_F(l1), functor_F(l2), limits);
    rep.stats = {{"homs", homs.size()}, {"chu_homs", chu.size()}};
    const ChuObject f1 = functor_F(l1);
    const ChuObject f2 = functor_F(l2);
    std::set<ChuArrow> images;
    for (const AtomMap& f : homs) {
      const ChuArrow u = functor_F_arrow(f);
      if (!is_chu_arrow(f1, f2, u)) return rep.fail("F(f) is not a Chu arrow", to_json(f));
      images.insert(u);
    }
    if (images.size() != homs.size()) return rep.fail("F is not faithful");
    const std::set<ChuArrow> all(chu.begin(), chu.end());
    if (images != all) {
      for (const ChuArrow& u : chu)
        if (!images.contains(u)) return rep.fail("Chu arrow outside the image of F", to_json(u));
      return rep.fail("hom-set sizes differ");
    }
    for (const ChuArrow& u : chu) {
      const AtomMap f = atom_map_of(u, l1, l2);
      if (!is_arrow(f) || !(functor_F_arrow(f) == u)) {
        return rep.fail("roundtrip through atom maps failed", to_json(u));
      }
    }
    for (const ClosureSpace* l : {&l1, &l2}) {
      const ClosureSpace d = dual_space(*l);
      const ChuObject moved = detail::dual_in_op_order(*l, d);
      if (!(moved == functor_F(d))) {
        return rep.fail("F(L^op) differs from F(L)^perp", json{{"lattice", l->name()}});
      }
      if (!chu_iso(chu_dual(functor_F(*l)), functor_F(d), limits)) {
        return rep.fail("no isomorphism F(L)^perp -> F(L^op)", json{{"lattice", l->name()}});
      }
    }
    if (!chu_iso(functor_F(chain2()), chu_top(), limits)) return rep.fail("F(2) is not top");
  });
}

/// The arrow α = (χ, F∘ξ) : F(L1) ⊗ F(L2) -> F(L1 ⊛ L2).
struct AlphaArrow {
  ChuTensor source;
  ClosureSpace tensor;
  ChuObject target;
  ChuArrow alpha;
};

inline AlphaArrow build_alpha(const ClosureSpace& l1, const ClosureSpace& l2,
                              const Limits& limits = {}) {
  AlphaArrow out;
  out.source = chu_tensor(functor_F(l1), functor_F(l2), limits);
  out.tensor = star_tensor(l1, l2, limits);
  out.target = functor_F(out.tensor);
  const std::size_t n1 = l1.atom_count();
  const std::size_t n2 = l2.atom_count();
  const ChuTensor& t = out.source;

  out.alpha.f.assign(t.object.a, 0);
  for (std::size_t a1 = 1; a1 <= n1; ++a1)
    for (std::size_t a2 = 1; a2 <= n2; ++a2)
      out.alpha.f[t.coder.code(a1, a2)] = (a1 - 1) * n2 + (a2 - 1) + 1;

  const ClosureSpace d2 = dual_space(l2);
  const auto perm = double_dual_relabeling(l2, d2);
  out.alpha.g.push_back(0);
  for (const AtomSet& x : out.tensor.coatoms()) {
    const AtomMap f = xi(l1, l2, d2, Relation{n1, n2, x});
    const ChuArrow u = functor_F_arrow(f);
    ChuArrow moved{u.f, {0}};
    for (std::size_t p = 0; p < n2; ++p) moved.g.push_back(u.g[perm[p] + 1]);
    out.alpha.g.push_back(t.find(moved));
  }
  return out;
}

/// α is an invertible Chu arrow and F(f1 ⊛ f2) ∘ α = α ∘ (F f1 ⊗ F f2) on
/// sampled endomorphism pairs.
inline CheckReport verify_alpha(const ClosureSpace& l1, const ClosureSpace& l2,
                                const Limits& limits = {}, std::uint32_t seed = 20260101) {
  return detail::guarded("alpha:" + detail::pair_name(l1, l2), [&](CheckReport& rep) {
    const AlphaArrow a = build_alpha(l1, l2, limits);
    rep.stats = {{"rows", a.source.object.a}, {"columns", a.source.object.x}};
    if (!is_chu_arrow(a.source.object, a.target, a.alpha)) {
      return rep.fail("alpha is not a Chu arrow", to_json(a.alpha));
    }
    const std::set<std::size_t> fs(a.alpha.f.begin(), a.alpha.f.end());
    const std::set<std::size_t> gs(a.alpha.g.begin(), a.alpha.g.end());
    if (a.source.object.a != a.target.a || fs.size() != a.target.a ||
        a.source.object.x != a.target.x || gs.size() != a.source.object.x) {
      return rep.fail("alpha is not invertible", to_json(a.alpha));
    }
    const auto h1 = enumerate_homs(l1, l1, limits);
    const auto h2 = enumerate_homs(l2, l2, limits);
    const auto picks = detail::sample_indices(h1.size() * h2.size(), limits.naturality_samples, seed);
    for (std::size_t k : picks) {
      const AtomMap& f1 = h1[k / h2.size()];
      const AtomMap& f2 = h2[k % h2.size()];
      const AtomMap u = arrow_tensor(f1, f2, a.tensor, a.tensor);
      const ChuArrow lhs = chu_compose(functor_F_arrow(u), a.alpha);
      const ChuArrow rhs = chu_compose(
          a.alpha,
          chu_tensor_arrows(functor_F_arrow(f1), functor_F_arrow(f2), a.source, a.source));
      if (!(lhs == rhs)) {
        return rep.fail("naturality square fails", json{{"f1", to_json(f1)}, {"f2", to_json(f2)}});
      }
    }
    rep.stats["naturality_pairs"] = picks.size();
  });
}

/// G(L1 ∨ L2) ≅ G(L1) ⊗ G(L2) in plain Chu spaces.
inline CheckReport verify_G_vee(const ClosureSpace& l1, const ClosureSpace& l2,
                                const Limits& limits = {}) {
  return detail::guarded("G_vee:" + detail::pair_name(l1, l2), [&](CheckReport& rep) {
    const ClosureSpace v = vee(l1, l2, limits);
    const ChuObject lhs = functor_G(v);
    const ChuTensor rhs = chu_tensor(functor_G(l1), functor_G(l2), limits);
    rep.stats = {{"vee", v.size()}, {"tensor_columns", rhs.object.x}};
    if (!chu_iso(lhs, rhs.object, limits)) {
      return rep.fail("no isomorphism", json{{"vee", v.size()}, {"columns", rhs.object.x}});
    }
  });
}

/// G is a bijection from atom-preserving join maps onto plain Chu arrows.
inline CheckReport verify_G_functor(const ClosureSpace& l1, const ClosureSpace& l2,
                                    const Limits& limits = {}) {
  return detail::guarded("G_functor:" + detail::pair_name(l1, l2), [&](CheckReport& rep) {
    const auto homs = enumerate_join_homs(l1, l2, false, limits);
    const ChuObject g1 = functor_G(l1);
    const ChuObject g2 = functor_G(l2);
    const auto chu = chu_homs(g1, g2, limits);
    rep.stats = {{"homs", homs.size()}, {"chu_homs", chu.size()}};
    std::set<ChuArrow> images;
    for (const AtomMap& f : homs) {
      const ChuArrow u = functor_G_arrow(f);
      if (!is_chu_arrow(g1, g2, u)) return rep.fail("G(f) is not a Chu arrow", to_json(f));
      images.insert(u);
    }
    if (images != std::set<ChuArrow>(chu.begin(), chu.end()) || images.size() != homs.size()) {
      return rep.fail("G is not a bijection on hom-sets");
    }
  });
}

inline CheckReport verify_universal(const ClosureSpace& l1, const ClosureSpace& l2,
                                    const ClosureSpace& l0, const Limits& limits = {}) {
  return detail::guarded(
      "universal:" + detail::pair_name(l1, l2) + "," + l0.name(), [&](CheckReport& rep) {
        const UniversalReport u = universal_check(l1, l2, l0, limits);
        rep.stats = {{"weak_bimorphisms", u.bimorphisms}, {"tensor_homs", u.tensor_homs}};
        if (!u.ok) {
          json w = json::object();
          if (u.witness) {
            json g = json::array();
            for (const AtomImage& v : *u.witness) g.push_back(v ? json(*v) : json(nullptr));
            w["grid_map"] = g;
          }
          rep.fail(u.reason, w);
        }
      });
}

/// Hyperplane of each projective point under the standard form, as a coatom
/// index. This is an isomorphism of the lattice onto its dual.
inline std::vector<std::size_t> polarity(const SubspaceLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& phi : l.points) {
    AtomSet h;
    for (std::size_t p = 0; p < l.points.size(); ++p) {
      int dot = 0;
      for (std::size_t k = 0; k < l.d; ++k) dot += phi[k] * l.points[p][k];
      if (dot % l.q == 0) h.set(p);
    }
    out.push_back(*l.space.coatom_index(h));
  }
  return out;
}

/// All nonzero d2 x d1 matrices over GF(q) whose first nonzero entry is 1.
inline std::vector<Matrix> projective_matrices(int q, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  const std::size_t cells = rows * cols;
  std::vector<int> v(cells, 0);
  for (;;) {
    std::size_t i = cells;
    bool done = true;
    while (i > 0) {
      --i;
      if (++v[i] < q) {
        done = false;
        break;
      }
      v[i] = 0;
    }
    if (done) break;
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (*lead != 1) continue;
    Matrix m(rows, std::vector<int>(cols));
    for (std::size_t k = 0; k < cells; ++k) m[k / cols][k % cols] = v[k];
    out.push_back(m);
  }
  return out;
}

/// Buckets every coatom of L ⊛ L for a subspace lattice L: box coatoms,
/// ∗-coatoms from pencil bijections, and coatoms induced by nonzero linear
/// maps into the dual space. Residue is reported, not asserted away.
inline CheckReport classify_star_coatoms(int q, std::size_t d, const Limits& limits = {}) {
  return detail::guarded(
      "classify:" + std::to_string(q) + ":" + std::to_string(d), [&](CheckReport& rep) {
        const SubspaceLattice l = subspace_lattice(q, d, limits);
        if (l.points.size() > limits.max_classify_points) {
          throw Error(ErrorCode::kSizeGuard,
                      "classification limited to " + std::to_string(limits.max_classify_points) +
                          " points");
        }
        const ClosureSpace& s = l.space;
        const auto coatoms = sigma_star(s, s, limits);
        const auto& xs = s.coatoms();

        std::set<std::vector<std::size_t>> boxes, stars, linear;
        auto key = [](const Relation& r) { return r.cells.indices(); };
        for (const AtomSet& x1 : xs)
          for (const AtomSet& x2 : xs) boxes.insert(key(box(s, s, x1, x2)));

        std::size_t star_bad = 0;
        for (std::size_t x1 = 0; x1 < xs.size(); ++x1)
          for (std::size_t y1 = x1 + 1; y1 < xs.size(); ++y1)
            for (std::size_t x2 = 0; x2 < xs.size(); ++x2)
              for (std::size_t y2 = x2 + 1; y2 < xs.size(); ++y2) {
                auto target = s.sigma_prime_above(xs[x2] & xs[y2]).indices();
                const std::size_t want = s.sigma_prime_above(xs[x1] & xs[y1]).count();
                if (target.size() != want) continue;
                std::sort(target.begin(), target.end());
                do {
                  const Relation r = star_coatom(s, s, x1, y1, x2, y2, target);
                  if (!is_star_coatom(s, s, r)) ++star_bad;
                  stars.insert(key(r));
                } while (std::next_permutation(target.begin(), target.end()));
              }

        const auto pol = polarity(l);
        const ClosureSpace dual = dual_space(s);
        for (const Matrix& m : projective_matrices(q, d, d)) {
          const AtomMap f = linear_hom(m, l, l);
          AtomMap g{&s, &dual, {}};
          for (const AtomImage& v : f.image) g.image.push_back(v ? AtomImage(pol[*v]) : kZero);
          if (!is_arrow(g)) return rep.fail("linear map does not induce an arrow", to_json(g));
          const Relation r = xi_inv(s, g);
          if (!r.is_full()) linear.insert(key(r));
        }

        std::size_t n_box = 0, n_star = 0, n_linear = 0;
        json residue = json::array();
        for (const Relation& r : coatoms) {
          const auto k = key(r);
          const bool b = boxes.contains(k), st = stars.contains(k), li = linear.contains(k);
          n_box += b;
          n_star += st;
          n_linear += li;
          if (!b && !st && !li) residue.push_back(to_json(r));
        }
        rep.stats = {{"coatoms", coatoms.size()}, {"box", n_box},
                     {"star", n_star},            {"linear", n_linear},
                     {"residue", residue.size()}, {"residue_cells", residue}};
        if (star_bad != 0) rep.fail("a pencil bijection gave a non-coatom");
      });
}

/// Lines of E1 ⊗ E2 (nonzero n x n matrices up to scalars) map injectively
/// to atoms of P(E1) ⊸ P(E2).
inline CheckReport verify_injection(int q, std::size_t n, const Limits& limits = {}) {
  return detail::guarded(
      "injection:" + std::to_string(q) + ":" + std::to_string(n), [&](CheckReport& rep) {
        const SubspaceLattice l = subspace_lattice(q, n, limits);
        const ClosureSpace& s = l.space;
        const ClosureSpace d = dual_space(s);
        const ClosureSpace dd = dual_space(d);
        const ClosureSpace t = star_tensor(s, d, limits);
        const ClosureSpace lol = dual_space(t);
        const auto perm = double_dual_relabeling(s, d);

        const auto lines = projective_matrices(q, n, n);
        std::size_t expected = 0;
        for (std::size_t k = 0, pw = 1; k < n * n; ++k, pw *= static_cast<std::size_t>(q))
          expected += pw;

        std::set<std::size_t> hit;
        for (const Matrix& m : lines) {
          const AtomMap f = linear_hom(m, l, l);
          AtomMap g{&s, &dd, {}};
          for (const AtomImage& v : f.image) g.image.push_back(v ? AtomImage(perm[*v]) : kZero);
          if (!is_arrow(g)) return rep.fail("line does not induce an arrow", to_json(f));
          const Relation r = xi_inv(d, g);
          const auto idx = t.coatom_index(r.cells);
          if (!idx) return rep.fail("image is not an atom of the implication", to_json(r));
          if (!hit.insert(*idx).second) {
            return rep.fail("two lines share an atom", to_json(r));
          }
        }
        const std::size_t homs = enumerate_homs(s, s, limits).size();
        rep.stats = {{"lines", lines.size()},
                     {"expected_lines", expected},
                     {"atoms", lol.atom_count()},
                     {"homs", homs}};
        if (lines.size() != expected) return rep.fail("wrong number of lines");
        if (lol.atom_count() != homs - 1) {
          return rep.fail("atom count differs from nonconstant homs",
                          json{{"atoms", lol.atom_count()}, {"homs", homs}});
        }
      });
}

// The four worked examples.

inline CheckReport example_powerset(const Limits& limits = {}) {
  return detail::guarded("example:powerset", [&](CheckReport& rep) {
    const ClosureSpace l = powerset(2);
    const Relation r = Relation::from_pairs(2, 2, {{0, 1}, {1, 0}});
    const Relation s = r | circ(l, l, AtomSet{0}, l.top());
    if (!is_star_coatom(l, l, r) || !is_star_coatom(l, l, s)) {
      return rep.fail("R or S is not a star coatom", json{{"R", to_json(r)}, {"S", to_json(s)}});
    }
    if (!r.is_subset_of(s) || r == s || s.is_full()) return rep.fail("R, S are not nested");
    const auto sig = sigma_star(l, l, limits);
    if (std::find(sig.begin(), sig.end(), r) == sig.end() ||
        std::find(sig.begin(), sig.end(), s) == sig.end()) {
      return rep.fail("R or S missing from the hom-derived star coatoms");
    }
    bool lattice_image = false;
    try {
      const ClosureSpace l0 = ClosureSpace::from_family(4, star_family(l, l, limits));
      lattice_image = chu_iso(chu_tensor(functor_F(l), functor_F(l), limits).object,
                              functor_F(l0), limits)
                          .has_value();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kSizeGuard) throw;
    }
    if (lattice_image) return rep.fail("the Chu tensor is isomorphic to F of a lattice");
    rep.stats = {{"star_coatoms", sig.size()}, {"A0", check_A0(l).a0}};
    rep.witness = json{{"R", to_json(r)}, {"S", to_json(s)}};
  });
}

inline CheckReport example_z6(const Limits& limits = {}) {
  return detail::guarded("example:z6", [&](CheckReport& rep) {
    const OrthoSpace o = ortho_space(6, {2, 3, 4});
    const ClosureSpace& l = o.space;
    for (std::size_t p = 0; p < 6; ++p) {
      if (o.orthogonal(p, p)) return rep.fail("perp is reflexive");
      for (std::size_t q = 0; q < 6; ++q)
        if (o.orthogonal(p, q) != o.orthogonal(q, p)) return rep.fail("perp is not symmetric");
    }
    const A0Report a0 = check_A0(o);
    if (a0.a0 || !a0.witness_a0) return rep.fail("A0 holds");
    const auto w1 = perp_name(o, a0.witness_a0->first);
    const auto w2 = perp_name(o, a0.witness_a0->second);
    if (!w1 || !w2 || *w1 != 0 || *w2 != 3) {
      return rep.fail("unexpected A0 witness", json{{"x", a0.witness_a0->first.to_string()},
                                                    {"y", a0.witness_a0->second.to_string()}});
    }
    if (!is_irreducible(l, limits)) return rep.fail("not irreducible");
    const AtomSet low{0, 1, 2}, high{3, 4, 5};
    const Relation r = circ(l, l, low, low) | circ(l, l, high, high);
    const Relation s = circ(l, l, o.perp[4], l.top()) | circ(l, l, l.top(), o.perp[1]);
    if (!is_star_coatom(l, l, r) || !is_star_coatom(l, l, s)) {
      return rep.fail("R or S is not a star coatom", json{{"R", to_json(r)}, {"S", to_json(s)}});
    }
    if (!r.is_subset_of(s) || r == s || s.is_full()) return rep.fail("R, S are not nested");
    const ClosureSpace d = dual_space(l);
    if (!is_arrow(xi(l, l, d, r)) || !is_arrow(xi(l, l, d, s))) {
      return rep.fail("xi of R or S is not an arrow");
    }
    rep.stats = {{"elements", l.size()}, {"coatoms", l.coatoms().size()}};
    rep.witness = json{{"A0", {"0'", "3'"}}, {"R", to_json(r)}, {"S", to_json(s)}};
  });
}

inline CheckReport example_z12(const Limits& limits = {}) {
  return detail::guarded("example:z12", [&](CheckReport& rep) {
    const OrthoSpace o = ortho_space(12, {5, 6, 7});
    const ClosureSpace& l = o.space;
    if (!check_A0(o).holds()) return rep.fail("A0 fails");
    const AtomSet two{2}, eight{8};
    if (!(l.join(two, eight) == l.top())) return rep.fail("2 v 8 is not the top");
    if (!(eight.is_subset_of(o.perp[2]) && !(o.perp[2] == eight) && !(o.perp[2] == l.top()))) {
      return rep.fail("2' does not sit strictly between 8 and the top");
    }
    Relation x = Relation::empty(12, 12);
    for (std::size_t k : {0, 3, 6, 9}) x = x | circ(l, l, o.perp[k], o.perp[k]);
    if (!is_star_coatom(l, l, x)) return rep.fail("x is not a star coatom", to_json(x));
    if (!star_contains(l, l, x, limits)) return rep.fail("x is not closed in the tensor");
    const Relation xs = sharp_closed(o, o, x);
    if (xs.cells.count() != 0) return rep.fail("x^# is not empty", to_json(xs));
    if (wedge_contains(l, l, x)) return rep.fail("x lies in the separated product");

    const AtomSet mid = o.perp[2] & o.perp[3];
    Relation r = circ(l, l, o.perp[0], o.perp[0]) | circ(l, l, mid, mid) |
                 circ(l, l, o.perp[5], o.perp[5]) | circ(l, l, o.perp[8], o.perp[8]) |
                 circ(l, l, AtomSet{4}, AtomSet{4});
    if (!is_vee_coatom(l, l, r)) return rep.fail("R is not a coatom of the vee", to_json(r));
    if (is_star_coatom(l, l, r)) return rep.fail("R is a star coatom");
    if (!(r.row(4) == AtomSet{4})) return rep.fail("row of 4 is not {4}");
    if (star_contains(l, l, r, limits)) return rep.fail("R lies in the tensor");

    // Lower containment on generators: every coatom box is a star coatom.
    for (const AtomSet& x1 : l.coatoms())
      for (const AtomSet& x2 : l.coatoms())
        if (!is_star_coatom(l, l, box(l, l, x1, x2))) return rep.fail("box coatom outside");
    if (!vee_contains(l, l, x)) return rep.fail("x outside the vee");
    rep.stats = {{"elements", l.size()}, {"coatoms", l.coatoms().size()}, {"mid", mid.to_string()}};
    rep.witness = json{{"x", to_json(x)}, {"R", to_json(r)}};
  });
}

inline CheckReport example_mo3_mo4(const Limits& limits = {}) {
  return detail::guarded("example:mo3_mo4", [&](CheckReport& rep) {
    const ClosureSpace a = mo(3);
    const ClosureSpace b = mo(4);
    const ClosureSpace s = star_tensor(a, b, limits);
    const ClosureSpace w = wedge(a, b, limits);
    rep.stats = {{"star", s.size()}, {"wedge", w.size()}};
    if (!(s == w)) return rep.fail("families differ");
  });
}

inline std::vector<CheckReport> run_worked_examples(const Limits& limits = {}) {
  return {example_powerset(limits), example_z6(limits), example_z12(limits),
          example_mo3_mo4(limits)};
}

/// One named check over the structure arrows of a Chu tensor sample.
struct CoherenceResult {
  std::string diagram;
  bool ok = true;
  json witness;
};

namespace detail {

/// Tensors memoized by the identity of their factors.
class TensorCache {
 public:
  explicit TensorCache(const Limits& limits) : limits_(limits) {}

  const ChuTensor& get(const ChuObject& a, const ChuObject& b) {
    const std::size_t ia = intern(a);
    const std::size_t ib = intern(b);
    auto it = cache_.find({ia, ib});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(ia, ib), chu_tensor(a, b, limits_)).first;
    return it->second;
  }

 private:
  std::size_t intern(const ChuObject& o) {
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i] == o) return i;
    objects_.push_back(o);
    return objects_.size() - 1;
  }

  Limits limits_;
  std::vector<ChuObject> objects_;
  std::map<std::pair<std::size_t, std::size_t>, ChuTensor> cache_;
};

inline std::string first_difference(const ChuArrow& u, const ChuArrow& v) {
  for (std::size_t i = 0; i < std::min(u.f.size(), v.f.size()); ++i)
    if (u.f[i] != v.f[i]) return "f at " + std::to_string(i);
  for (std::size_t i = 0; i < std::min(u.g.size(), v.g.size()); ++i)
    if (u.g[i] != v.g[i]) return "g at " + std::to_string(i);
  return "shape";
}

}  // namespace detail

/// Pentagon, the three unit triangles, l_⊤ = r_⊤, s∘s = id, l∘s = r and the
/// hexagon, checked pointwise over all tuples from the structurally distinct
/// objects of the sample.
inline CheckReport check_coherence(const std::vector<ChuObject>& sample,
                                   const Limits& limits = {}) {
  return detail::guarded("coherence", [&](CheckReport& rep) {
    std::vector<ChuObject> objs;
    for (const ChuObject& o : sample)
      if (std::find(objs.begin(), objs.end(), o) == objs.end()) objs.push_back(o);
    detail::TensorCache tc(limits);
    const ChuObject top = chu_top();
    std::map<std::string, std::size_t> counts;
    auto check = [&](const std::string& name, const ChuArrow& lhs, const ChuArrow& rhs,
                     json where) {
      ++counts[name];
      if (lhs == rhs) return true;
      where["diagram"] = name;
      where["difference"] = detail::first_difference(lhs, rhs);
      rep.fail(name + " does not commute", where);
      return false;
    };
    auto idx = [&](const ChuObject& o) {
      return static_cast<std::size_t>(std::find(objs.begin(), objs.end(), o) - objs.begin());
    };
    auto alpha = [&](const ChuObject& a, const ChuObject& b, const ChuObject& c) {
      const ChuTensor& ab = tc.get(a, b);
      const ChuTensor& bc = tc.get(b, c);
      return associator(ab, tc.get(ab.object, c), bc, tc.get(a, bc.object));
    };

    {
      const ChuTensor& tt = tc.get(top, top);
      if (!check("l_top=r_top", left_unitor(tt), right_unitor(tt), json::object())) return;
    }
    for (const ChuObject& a : objs) {
      const ChuTensor& at = tc.get(a, top);
      const ChuTensor& ta = tc.get(top, a);
      json where{{"A", idx(a)}};
      if (!check("l_A s_A,top = r_A", chu_compose(left_unitor(ta), symmetry(at, ta)),
                 right_unitor(at), where))
        return;
      for (const ChuObject& b : objs) {
        where["B"] = idx(b);
        const ChuTensor& ab = tc.get(a, b);
        const ChuTensor& ba = tc.get(b, a);
        if (!check("s_BA s_AB = id", chu_compose(symmetry(ba, ab), symmetry(ab, ba)),
                   chu_identity(ab.object), where))
          return;

        // (⊤⊗A)⊗B -> A⊗B
        const ChuTensor& t_a = tc.get(top, a);
        const ChuTensor& ta_b = tc.get(t_a.object, b);
        const ChuTensor& t_ab = tc.get(top, ab.object);
        if (!check("triangle l", chu_compose(left_unitor(t_ab), alpha(top, a, b)),
                   chu_tensor_arrows(left_unitor(t_a), chu_identity(b), ta_b, ab), where))
          return;
        // (A⊗⊤)⊗B -> A⊗B
        const ChuTensor& a_t = tc.get(a, top);
        const ChuTensor& at_b = tc.get(a_t.object, b);
        const ChuTensor& t_b = tc.get(top, b);
        const ChuTensor& a_tb = tc.get(a, t_b.object);
        if (!check("triangle middle",
                   chu_compose(chu_tensor_arrows(chu_identity(a), left_unitor(t_b), a_tb, ab),
                               alpha(a, top, b)),
                   chu_tensor_arrows(right_unitor(a_t), chu_identity(b), at_b, ab), where))
          return;
        // (A⊗B)⊗⊤ -> A⊗B
        const ChuTensor& ab_t = tc.get(ab.object, top);
        const ChuTensor& b_t = tc.get(b, top);
        const ChuTensor& a_bt = tc.get(a, b_t.object);
        if (!check("triangle r",
                   chu_compose(chu_tensor_arrows(chu_identity(a), right_unitor(b_t), a_bt, ab),
                               alpha(a, b, top)),
                   right_unitor(ab_t), where))
          return;

        for (const ChuObject& c : objs) {
          where["C"] = idx(c);
          // Hexagon: (A⊗B)⊗C -> B⊗(C⊗A).
          const ChuTensor& bc = tc.get(b, c);
          const ChuTensor& ca = tc.get(c, a);
          const ChuTensor& ac = tc.get(a, c);
          const ChuTensor& a_bc = tc.get(a, bc.object);
          const ChuTensor& bc_a = tc.get(bc.object, a);
          const ChuTensor& ab_c = tc.get(ab.object, c);
          const ChuTensor& ba_c = tc.get(ba.object, c);
          const ChuTensor& b_ca = tc.get(b, ca.object);
          const ChuTensor& b_ac = tc.get(b, ac.object);
          const ChuArrow top_path = chu_compose(
              alpha(b, c, a), chu_compose(symmetry(a_bc, bc_a), alpha(a, b, c)));
          const ChuArrow bottom_path = chu_compose(
              chu_tensor_arrows(chu_identity(b), symmetry(ac, ca), b_ac, b_ca),
              chu_compose(alpha(b, a, c),
                          chu_tensor_arrows(symmetry(ab, ba), chu_identity(c), ab_c, ba_c)));
          if (!check("hexagon", top_path, bottom_path, where)) return;

          for (const ChuObject& d : objs) {
            where["D"] = idx(d);
            const ChuTensor& abc = ab_c;
            const ChuTensor& cd = tc.get(c, d);
            const ChuTensor& b_cd = tc.get(b, cd.object);
            const ChuTensor& bc_d = tc.get(bc.object, d);
            const ChuTensor& a_bc_d = tc.get(a, bc_d.object);
            const ChuTensor& a_b_cd = tc.get(a, b_cd.object);
            const ChuTensor& abc_d = tc.get(abc.object, d);
            const ChuTensor& a_bc__d = tc.get(a_bc.object, d);
            const ChuArrow lhs = chu_compose(alpha(a, b, cd.object), alpha(ab.object, c, d));
            const ChuArrow rhs = chu_compose(
                chu_tensor_arrows(chu_identity(a), alpha(b, c, d), a_bc_d, a_b_cd),
                chu_compose(alpha(a, bc.object, d),
                            chu_tensor_arrows(alpha(a, b, c), chu_identity(d), abc_d, a_bc__d)));
            if (!check("pentagon", lhs, rhs, where)) return;
          }
        }
      }
    }
    rep.stats = json{{"objects", objs.size()}, {"diagrams", counts}};
  });
}

}  // namespace chulat

#endif  // CHULAT_VERIFY_HPP_
