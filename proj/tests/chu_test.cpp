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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "chulat/chulat.hpp"
#include "oracles.hpp"

namespace chulat {
namespace {

/// Every (f, g) with f(0) = g(0) = 0 in pointed mode satisfying the
/// adjointness law, found by trying all function pairs.
std::vector<ChuArrow> naive_homs(const ChuObject& o1, const ChuObject& o2) {
  const std::size_t lo = o1.pointed ? 1 : 0;
  std::vector<ChuArrow> out;
  std::vector<std::size_t> f(o1.a, 0), g(o2.x, 0);
  auto next = [&](std::vector<std::size_t>& v, std::size_t base) {
    for (std::size_t i = v.size(); i-- > lo;) {
      if (++v[i] < base) return true;
      v[i] = 0;
    }
    return false;
  };
  do {
    std::fill(g.begin(), g.end(), 0);
    do {
      bool ok = true;
      for (std::size_t a = 0; a < o1.a && ok; ++a)
        for (std::size_t y = 0; y < o2.x && ok; ++y)
          ok = o2.r[f[a] * o2.x + y] == o1.r[a * o1.x + g[y]];
      if (ok) out.push_back({f, g});
    } while (next(g, o1.x));
  } while (next(f, o2.a));
  std::sort(out.begin(), out.end());
  return out;
}

ChuObject permuted(const ChuObject& o, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  ChuObject p = ChuObject::zeros(o.a, o.x, o.pointed);
  for (std::size_t i = 0; i < o.a; ++i)
    for (std::size_t j = 0; j < o.x; ++j) p.put(rows[i], cols[j], o.at(i, j));
  return p;
}

std::vector<std::size_t> pointed_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

std::vector<ChuObject> pointed_zoo() {
  return {chu_top(), chu_bottom(), functor_F(chain2()), functor_F(mo(2)), functor_F(mo(3)),
          functor_F(powerset(2))};
}

TEST(ChuObject, TopDualAndValidation) {
  const ChuObject t = chu_top();
  EXPECT_EQ(t.a, 2u);
  EXPECT_EQ(t.at(1, 1), 1);
  EXPECT_EQ(t.at(0, 0) + t.at(0, 1) + t.at(1, 0), 0);
  EXPECT_EQ(chu_dual(chu_dual(functor_F(mo(4)))), functor_F(mo(4)));
  EXPECT_EQ(chu_bottom(), chu_dual(t));
  ChuObject bad = chu_top();
  bad.put(0, 1, true);
  EXPECT_THROW(validate(bad), Error);
  EXPECT_NO_THROW(validate(functor_F(mo(3))));
}

TEST(ChuObject, PairCoding) {
  const PairCoder c{3, 4, true};
  EXPECT_EQ(c.size(), 7u);
  EXPECT_EQ(c.code(0, 2), 0u);
  EXPECT_EQ(c.code(1, 1), 1u);
  EXPECT_EQ(c.code(2, 3), 6u);
  for (std::size_t k = 1; k < c.size(); ++k) {
    const auto [a, b] = c.decode(k);
    EXPECT_EQ(c.code(a, b), k);
  }
  const PairCoder plain{3, 4, false};
  EXPECT_EQ(plain.size(), 12u);
  EXPECT_EQ(plain.code(2, 3), 11u);
}

TEST(ChuHoms, MatchNaiveEnumeration) {
  const auto zoo = pointed_zoo();
  for (const ChuObject& a : zoo)
    for (const ChuObject& b : zoo) {
      if (a.a > 4 || b.a > 4) continue;
      EXPECT_EQ(chu_homs(a, b), naive_homs(a, b)) << a.a << "x" << a.x << " -> " << b.a << "x" << b.x;
    }
  const std::vector<ChuObject> plain{functor_G(chain2()), functor_G(mo(2)), functor_G(mo(3))};
  for (const ChuObject& a : plain)
    for (const ChuObject& b : plain) EXPECT_EQ(chu_homs(a, b), naive_homs(a, b));
}

TEST(ChuHoms, MixedModesAreRejected) {
  EXPECT_THROW(chu_homs(chu_top(), functor_G(mo(2))), Error);
}

TEST(ChuHoms, CompositionAndIdentity) {
  const ChuObject a = functor_F(mo(3));
  const ChuObject b = functor_F(mo(4));
  const auto ab = chu_homs(a, b);
  const auto ba = chu_homs(b, a);
  for (const ChuArrow& u : ab) {
    EXPECT_EQ(chu_compose(chu_identity(b), u), u);
    EXPECT_EQ(chu_compose(u, chu_identity(a)), u);
    for (const ChuArrow& v : ba) {
      ASSERT_TRUE(is_chu_arrow(a, a, chu_compose(v, u)));
      EXPECT_TRUE(is_chu_arrow(chu_dual(a), chu_dual(b), arrow_dual(v)) ==
                  is_chu_arrow(b, a, v));
    }
  }
}

TEST(ChuIso, FindsPermutedCopiesAndRejectsChangedWeights) {
  std::mt19937 rng(17);
  for (const ChuObject& o : pointed_zoo()) {
    for (int k = 0; k < 5; ++k) {
      const auto rows = pointed_permutation(rng, o.a);
      const auto cols = pointed_permutation(rng, o.x);
      const ChuObject p = permuted(o, rows, cols);
      const auto iso = chu_iso(o, p);
      ASSERT_TRUE(iso.has_value());
      for (std::size_t i = 0; i < o.a; ++i)
        for (std::size_t j = 0; j < o.x; ++j) ASSERT_EQ(p.at(iso->f[i], iso->g[j]), o.at(i, j));
    }
    if (o.a > 2) {
      ChuObject q = o;
      q.put(1, 1, !q.at(1, 1));
      EXPECT_FALSE(chu_iso(o, q).has_value());
    }
  }
}

TEST(ChuTensor, ShapeUnitAndFunctoriality) {
  const ChuObject a = functor_F(mo(3));
  const ChuObject b = functor_F(mo(4));
  const ChuTensor ab = chu_tensor(a, b);
  EXPECT_EQ(ab.object.a, 13u);
  EXPECT_EQ(ab.homs.size(), chu_homs(a, chu_dual(b)).size());
  EXPECT_NO_THROW(validate(ab.object));
  EXPECT_EQ(ab.homs.size(), naive_homs(a, chu_dual(b)).size());

  for (const ChuObject& o : pointed_zoo()) {
    EXPECT_TRUE(chu_iso(chu_tensor(o, chu_top()).object, o).has_value());
    EXPECT_TRUE(chu_iso(chu_tensor(chu_top(), o).object, o).has_value());
  }

  EXPECT_EQ(chu_tensor_arrows(chu_identity(a), chu_identity(b), ab, ab), chu_identity(ab.object));
  const auto ea = chu_homs(a, a);
  const auto eb = chu_homs(b, b);
  std::mt19937 rng(2);
  for (int k = 0; k < 20; ++k) {
    const ChuArrow& u1 = ea[rng() % ea.size()];
    const ChuArrow& v1 = ea[rng() % ea.size()];
    const ChuArrow& u2 = eb[rng() % eb.size()];
    const ChuArrow& v2 = eb[rng() % eb.size()];
    const ChuArrow lhs = chu_tensor_arrows(chu_compose(v1, u1), chu_compose(v2, u2), ab, ab);
    const ChuArrow rhs = chu_compose(chu_tensor_arrows(v1, v2, ab, ab),
                                     chu_tensor_arrows(u1, u2, ab, ab));
    ASSERT_EQ(lhs, rhs);
    ASSERT_TRUE(is_chu_arrow(ab.object, ab.object, lhs));
  }
  EXPECT_THROW(ab.find(ChuArrow{{0}, {0}}), Error);
}

TEST(Functors, FPreservesIdentityAndComposition) {
  EXPECT_EQ(functor_F(chain2()), chu_top());
  const ClosureSpace a = mo(3);
  const ClosureSpace b = mo(4);
  EXPECT_EQ(functor_F_arrow(identity_map(a)), chu_identity(functor_F(a)));
  for (const AtomMap& f : enumerate_homs(a, b))
    for (const AtomMap& g : enumerate_homs(b, a)) {
      ASSERT_EQ(functor_F_arrow(compose(g, f)), chu_compose(functor_F_arrow(g), functor_F_arrow(f)));
    }
  for (const ChuArrow& u : chu_homs(functor_F(a), functor_F(b)))
    EXPECT_EQ(functor_F_arrow(atom_map_of(u, a, b)), u);
}

TEST(Functors, GPreservesComposition) {
  const ClosureSpace a = mo(3);
  const ClosureSpace b = mo(2);
  const auto ab = enumerate_join_homs(a, b, false);
  const auto ba = enumerate_join_homs(b, a, false);
  for (const AtomMap& f : ab) {
    ASSERT_TRUE(is_chu_arrow(functor_G(a), functor_G(b), functor_G_arrow(f)));
    for (const AtomMap& g : ba)
      ASSERT_EQ(functor_G_arrow(compose(g, f)), chu_compose(functor_G_arrow(g), functor_G_arrow(f)));
  }
  EXPECT_EQ(functor_G_arrow(identity_map(a)), chu_identity(functor_G(a)));
  EXPECT_THROW(functor_G_arrow(constant_map(a, b)), Error);
}

TEST(StructureArrows, AreInvertibleChuArrows) {
  const std::vector<ChuObject> objs{chu_top(), functor_F(mo(2)), functor_F(mo(3))};
  const ChuObject t = chu_top();
  for (const ChuObject& a : objs) {
    const ChuTensor at = chu_tensor(a, t);
    const ChuTensor ta = chu_tensor(t, a);
    EXPECT_TRUE(is_chu_arrow(at.object, a, right_unitor(at)));
    EXPECT_TRUE(is_chu_arrow(ta.object, a, left_unitor(ta)));
    for (const ChuObject& b : objs) {
      const ChuTensor ab = chu_tensor(a, b);
      const ChuTensor ba = chu_tensor(b, a);
      const ChuArrow s = symmetry(ab, ba);
      EXPECT_TRUE(is_chu_arrow(ab.object, ba.object, s));
      EXPECT_EQ(std::set<std::size_t>(s.f.begin(), s.f.end()).size(), ab.object.a);
      for (const ChuObject& c : {chu_top(), functor_F(mo(2))}) {
        const ChuTensor bc = chu_tensor(b, c);
        const ChuTensor ab_c = chu_tensor(ab.object, c);
        const ChuTensor a_bc = chu_tensor(a, bc.object);
        const ChuArrow al = associator(ab, ab_c, bc, a_bc);
        EXPECT_TRUE(is_chu_arrow(ab_c.object, a_bc.object, al));
        EXPECT_EQ(std::set<std::size_t>(al.g.begin(), al.g.end()).size(), ab_c.object.x);
      }
    }
  }
}

TEST(StructureArrows, CoherenceOnASmallSample) {
  const CheckReport rep = check_coherence({chu_top(), functor_F(mo(2)), chu_top()});
  EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
  EXPECT_EQ(rep.stats["objects"], 2);
}

}  // namespace
}  // namespace chulat
