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

std::vector<ClosureSpace> small_zoo() {
  std::mt19937 rng(7);
  return {chain2(), mo(2), mo(3), mo(4), powerset(2), powerset(3),
          oracle::random_space(rng, 4, 3), oracle::random_space(rng, 4, 4)};
}

TEST(AtomSet, BasicOperations) {
  const AtomSet a{0, 2, 5};
  const AtomSet b{2, 3};
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(a.test(5));
  EXPECT_FALSE(a.test(1));
  EXPECT_EQ(a & b, AtomSet{2});
  EXPECT_EQ(a | b, (AtomSet{0, 2, 3, 5}));
  EXPECT_EQ(a - b, (AtomSet{0, 5}));
  EXPECT_TRUE(AtomSet{2}.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.first(), 0u);
  EXPECT_EQ(a.indices(), (std::vector<std::size_t>{0, 2, 5}));
  EXPECT_EQ(a.to_string(), "{0,2,5}");
  EXPECT_EQ(AtomSet::full(3), (AtomSet{0, 1, 2}));
  EXPECT_EQ(AtomSet::full(200).count(), 200u);
  EXPECT_TRUE(AtomSet{}.empty());
}

TEST(AtomSet, CapacityGuard) {
  EXPECT_NO_THROW(AtomSet::full(256));
  try {
    AtomSet::full(257);
    FAIL() << "expected a size guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
}

TEST(AtomSet, CanonicalOrderIsSizeThenSmallestDifference) {
  std::vector<AtomSet> v{{1, 2}, {0}, {}, {0, 2}, {2}, {0, 1}};
  std::sort(v.begin(), v.end(), canonical_less);
  const std::vector<AtomSet> want{{}, {0}, {2}, {0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(v, want);
}

TEST(ClosureSpace, SmallInstances) {
  EXPECT_EQ(mo(3).size(), 5u);
  EXPECT_EQ(chain2().size(), 2u);
  EXPECT_EQ(powerset(3).size(), 8u);
  EXPECT_EQ(chain2().coatoms(), std::vector<AtomSet>{AtomSet{}});
}

TEST(ClosureSpace, IntersectionClosureMatchesSubsetScan) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<AtomSet> gens;
    for (std::size_t p = 0; p < n; ++p) gens.push_back(AtomSet::singleton(p));
    for (int k = 0; k < 4; ++k) gens.push_back(oracle::from_mask(rng() % (1ULL << n)));
    const ClosureSpace l = build_space(n, gens);
    EXPECT_EQ(oracle::names(l.family()), oracle::closed_subsets(n, gens));
  }
}

TEST(ClosureSpace, ClosureCoatomsAndJoinAgainstScan) {
  for (const ClosureSpace& l : small_zoo()) {
    SCOPED_TRACE(l.name());
    auto xs = oracle::coatoms(l);
    std::sort(xs.begin(), xs.end(), canonical_less);
    EXPECT_EQ(l.coatoms(), xs);
    for (const AtomSet& s : oracle::all_subsets(l.atom_count())) {
      EXPECT_EQ(l.closure(s), oracle::closure(l, s));
    }
    for (const AtomSet& a : l.family())
      for (const AtomSet& b : l.family()) {
        EXPECT_EQ(l.join(a, b), oracle::closure(l, a | b));
        const std::vector<AtomSet> pair{a, b};
        EXPECT_EQ(l.meet(pair), a & b);
      }
  }
}

TEST(ClosureSpace, ValidationErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  EXPECT_EQ(code_of([] { ClosureSpace::from_family(0, {}); }), ErrorCode::kEmptyAtomSet);
  EXPECT_EQ(code_of([] { ClosureSpace::from_family(2, {{}, {0}, {0, 1}}); }),
            ErrorCode::kNotSimple);
  EXPECT_EQ(code_of([] { ClosureSpace::from_family(4, {{}, {0}, {1}, {2}, {3}, {0, 1, 2}, {1, 2, 3}, {0, 1, 2, 3}}); }),
            ErrorCode::kNotClosed);
  EXPECT_EQ(code_of([] { ClosureSpace::from_family(2, {{}, {0}, {1}, {0, 1}}, "x", {"a"}); }),
            ErrorCode::kMismatch);
  EXPECT_EQ(code_of([] { ClosureSpace::from_family(2, {{}, {0}, {1}, {0, 5}, {0, 1}}); }),
            ErrorCode::kNotSimple);
}

TEST(ClosureSpace, DualOfNonCoatomisticThrows) {
  const ClosureSpace l = ClosureSpace::from_family(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 1, 2}});
  EXPECT_FALSE(l.is_coatomistic());
  try {
    dual_space(l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCoatomistic);
  }
}

TEST(ClosureSpace, DoubleDualIsARelabeling) {
  for (const ClosureSpace& l : {chain2(), mo(3), mo(4), powerset(3)}) {
    SCOPED_TRACE(l.name());
    const ClosureSpace d = dual_space(l);
    EXPECT_EQ(d.atom_count(), l.coatoms().size());
    EXPECT_EQ(d.size(), l.size());
    const auto perm = double_dual_relabeling(l, d);
    EXPECT_EQ(relabel(l, perm), dual_space(d));
  }
  EXPECT_TRUE(isomorphic(dual_space(mo(3)), mo(3)));
  EXPECT_TRUE(isomorphic(dual_space(powerset(3)), powerset(3)));
}

TEST(ClosureSpace, A0AgainstPairScan) {
  for (const ClosureSpace& l : small_zoo()) {
    SCOPED_TRACE(l.name());
    const auto xs = l.coatoms();
    bool a0 = true;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if ((xs[i] | xs[j]) == l.top()) a0 = false;
    bool a0_op = true;
    for (std::size_t p = 0; p < l.atom_count(); ++p)
      for (std::size_t q = 0; q < l.atom_count(); ++q) {
        bool all = true;
        for (const AtomSet& x : xs) all = all && (x.test(p) || x.test(q));
        if (all) a0_op = false;
      }
    const A0Report rep = check_A0(l);
    EXPECT_EQ(rep.a0, a0);
    EXPECT_EQ(rep.a0_op, a0_op);
    EXPECT_EQ(rep.witness_a0.has_value(), !a0);
    if (rep.witness_a0) {
      EXPECT_EQ(rep.witness_a0->first | rep.witness_a0->second, l.top());
    }
  }
  EXPECT_FALSE(check_A0(mo(2)).a0);
  EXPECT_TRUE(check_A0(mo(3)).holds());
  EXPECT_FALSE(check_A0(powerset(2)).a0);
}

TEST(ClosureSpace, IrreducibilityAgainstExplicitProducts) {
  for (const ClosureSpace& l : small_zoo()) {
    SCOPED_TRACE(l.name());
    const std::size_t n = l.atom_count();
    bool reducible = false;
    for (unsigned long long m = 1; m + 1 < (1ULL << n) && !reducible; ++m) {
      const AtomSet a = oracle::from_mask(m);
      const AtomSet b = l.top() - a;
      std::set<std::string> product;
      for (const AtomSet& x : l.family())
        for (const AtomSet& y : l.family()) product.insert(((x & a) | (y & b)).to_string());
      reducible = product == oracle::names(l.family());
    }
    EXPECT_EQ(is_irreducible(l), !reducible);
  }
  EXPECT_TRUE(is_irreducible(mo(3)));
  EXPECT_FALSE(is_irreducible(powerset(2)));
}

TEST(ClosureSpace, AutomorphismsAgainstPermutationScan) {
  for (const ClosureSpace& l : small_zoo()) {
    SCOPED_TRACE(l.name());
    std::vector<std::size_t> p(l.atom_count());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::vector<std::vector<std::size_t>> want;
    do {
      bool ok = true;
      for (const AtomSet& c : l.family()) ok = ok && l.contains(permute(c, p));
      if (ok) want.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(automorphisms(l), want);
  }
  EXPECT_EQ(automorphisms(mo(4)).size(), 24u);
}

TEST(ClosureSpace, IsomorphismOfRandomRelabelings) {
  std::mt19937 rng(5);
  for (const ClosureSpace& l : small_zoo()) {
    const auto perm = oracle::random_permutation(rng, l.atom_count());
    const ClosureSpace r = relabel(l, perm);
    const auto found = find_isomorphism(l, r);
    ASSERT_TRUE(found.has_value());
    for (const AtomSet& c : l.family()) EXPECT_TRUE(r.contains(permute(c, *found)));
  }
  EXPECT_FALSE(isomorphic(mo(3), powerset(3)));
}

TEST(ClosureSpace, CoversAgainstIntervalScan) {
  for (const ClosureSpace& l : small_zoo()) {
    SCOPED_TRACE(l.name());
    const auto& f = l.family();
    std::set<std::pair<std::size_t, std::size_t>> want;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (i == j || !f[i].is_subset_of(f[j])) continue;
        bool between = false;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (k != i && k != j && f[i].is_subset_of(f[k]) && f[k].is_subset_of(f[j])) between = true;
        if (!between) want.insert({i, j});
      }
    const auto got = covers(l);
    using Edges = std::set<std::pair<std::size_t, std::size_t>>;
    EXPECT_EQ(Edges(got.begin(), got.end()), want);
  }
}

TEST(Morphisms, EnumerationMatchesNaiveFilter) {
  const auto zoo = small_zoo();
  for (const ClosureSpace& a : zoo)
    for (const ClosureSpace& b : zoo) {
      if (!a.is_coatomistic() || !b.is_coatomistic()) continue;
      SCOPED_TRACE(a.name() + " -> " + b.name());
      EXPECT_EQ(oracle::images(enumerate_homs(a, b)), oracle::homs(a, b));
    }
}

TEST(Morphisms, HomCountsOfMO) {
  EXPECT_EQ(oracle::homs(mo(3), mo(3)).size(), 16u);
  EXPECT_EQ(enumerate_homs(mo(3), mo(3)).size(), 16u);
  EXPECT_EQ(enumerate_homs(mo(3), mo(4)).size(), oracle::homs(mo(3), mo(4)).size());
  EXPECT_EQ(enumerate_homs(chain2(), chain2()).size(), 2u);
}

TEST(Morphisms, IsArrowAgreesWithDefinition) {
  const auto zoo = small_zoo();
  for (const ClosureSpace& a : zoo)
    for (const ClosureSpace& b : zoo) {
      if (!a.is_coatomistic() || !b.is_coatomistic() || a.atom_count() > 3) continue;
      oracle::for_each_map(a, b, [&](const AtomMap& f) {
        EXPECT_EQ(static_cast<bool>(is_arrow(f)), oracle::is_arrow(f)) << image_to_string(f);
      });
    }
}

TEST(Morphisms, InjectionMO3IntoMO4FailsOnTheAdjoint) {
  const ClosureSpace a = mo(3);
  const ClosureSpace b = mo(4);
  const AtomMap f{&a, &b, {0, 1, 2}};
  const ArrowCheck chk = is_arrow(f);
  EXPECT_FALSE(chk.ok);
  EXPECT_EQ(chk.clause, 'b');
  EXPECT_FALSE(oracle::is_arrow(f));
}

TEST(Morphisms, GaloisLawExhaustive) {
  const auto zoo = small_zoo();
  std::size_t checked = 0;
  for (const ClosureSpace& a : zoo)
    for (const ClosureSpace& b : zoo) {
      if (!a.is_coatomistic() || !b.is_coatomistic()) continue;
      for (const AtomMap& f : enumerate_homs(a, b)) {
        const Adjoint adj = right_adjoint(f);
        for (const AtomSet& x : a.family())
          for (const AtomSet& y : b.family()) {
            ASSERT_EQ(induced(f, x).is_subset_of(y), x.is_subset_of(adj(y)))
                << image_to_string(f) << " " << x.to_string() << " " << y.to_string();
            ++checked;
          }
        for (const AtomSet& y : b.family()) ASSERT_EQ(adj(y), oracle::adjoint(f, y));
      }
    }
  EXPECT_GT(checked, 0u);
}

TEST(Morphisms, RightAdjointRejectsNonJoinPreservingMaps) {
  const ClosureSpace a = mo(3);
  const ClosureSpace b = powerset(2);
  const AtomMap f{&a, &b, {0, 1, 0}};
  try {
    right_adjoint(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotJoinPreserving);
  }
}

TEST(Morphisms, CompositionIsClosedAndUnital) {
  const ClosureSpace a = mo(3);
  const ClosureSpace b = mo(4);
  const auto ab = enumerate_homs(a, b);
  const auto ba = enumerate_homs(b, a);
  for (const AtomMap& f : ab) {
    EXPECT_EQ(compose(identity_map(b), f), f);
    EXPECT_EQ(compose(f, identity_map(a)), f);
    for (const AtomMap& g : ba) EXPECT_TRUE(oracle::is_arrow(compose(g, f)));
  }
  try {
    compose(ab.front(), ab.front());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMismatch);
  }
  EXPECT_TRUE(is_constant(constant_map(a, b)));
  EXPECT_TRUE(is_arrow(constant_map(a, b)));
}

TEST(Morphisms, OpArrowIsAnInvolutionUpToRelabeling) {
  for (const auto& [a, b] : std::vector<std::pair<ClosureSpace, ClosureSpace>>{
           {mo(3), mo(4)}, {mo(4), mo(3)}, {chain2(), mo(3)}, {powerset(2), powerset(3)}}) {
    const ClosureSpace da = dual_space(a);
    const ClosureSpace db = dual_space(b);
    const ClosureSpace dda = dual_space(da);
    const ClosureSpace ddb = dual_space(db);
    const auto pa = double_dual_relabeling(a, da);
    const auto pb = double_dual_relabeling(b, db);
    for (const AtomMap& f : enumerate_homs(a, b)) {
      const AtomMap g = op_arrow(f, db, da);
      ASSERT_TRUE(oracle::is_arrow(g)) << image_to_string(f);
      const AtomMap h = op_arrow(g, dda, ddb);
      for (std::size_t p = 0; p < a.atom_count(); ++p) {
        const AtomImage want = f.image[p] ? AtomImage(pb[*f.image[p]]) : kZero;
        EXPECT_EQ(h.image[pa[p]], want);
      }
    }
  }
}

}  // namespace
}  // namespace chulat
