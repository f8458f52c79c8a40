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

// Finite complete atomistic lattices, stored as simple closure spaces: the
// family of closed subsets of the atom set 0..n-1. A lattice element is its
// set of atoms; 0 is the empty set and 1 the full set.

#ifndef CHULAT_CLOSURE_SPACE_HPP_
#define CHULAT_CLOSURE_SPACE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chulat/atom_set.hpp"
#include "chulat/error.hpp"

namespace chulat {

class ClosureSpace {
 public:
  ClosureSpace() = default;

  /// Validates and canonicalizes an explicit family of closed sets.
  static ClosureSpace from_family(std::size_t n, std::vector<AtomSet> family,
                                  std::string name = {},
                                  std::vector<std::string> labels = {}) {
    if (n == 0) throw Error(ErrorCode::kEmptyAtomSet, "closure space needs atoms");
    AtomSet::check_capacity(n);
    const AtomSet top = AtomSet::full(n);
    std::sort(family.begin(), family.end(), canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (const AtomSet& c : family) {
      if (!c.is_subset_of(top)) {
        throw Error(ErrorCode::kNotSimple, "closed set " + c.to_string() +
                                               " leaves the atom range");
      }
    }
    ClosureSpace s;
    s.n_ = n;
    s.family_ = std::move(family);
    s.name_ = std::move(name);
    if (labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) {
      throw Error(ErrorCode::kMismatch, "label count differs from atom count");
    }
    s.labels_ = std::move(labels);

    if (!s.contains(AtomSet{})) throw Error(ErrorCode::kNotSimple, "empty set is not closed");
    if (!s.contains(top)) throw Error(ErrorCode::kNotSimple, "full set is not closed");
    for (std::size_t a = 0; a < n; ++a) {
      if (!s.contains(AtomSet::singleton(a))) {
        throw Error(ErrorCode::kNotSimple,
                    "singleton {" + std::to_string(a) + "} is not closed");
      }
    }
    for (std::size_t i = 0; i < s.family_.size(); ++i) {
      for (std::size_t j = i + 1; j < s.family_.size(); ++j) {
        if (!s.contains(s.family_[i] & s.family_[j])) {
          throw Error(ErrorCode::kNotClosed,
                      "family not closed under intersection: " +
                          s.family_[i].to_string() + " & " + s.family_[j].to_string());
        }
      }
    }
    s.compute_coatoms();
    return s;
  }

  std::size_t atom_count() const { return n_; }
  std::size_t size() const { return family_.size(); }
  const std::vector<AtomSet>& family() const { return family_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_name(std::string name) { name_ = std::move(name); }

  AtomSet bottom() const { return {}; }
  AtomSet top() const { return AtomSet::full(n_); }

  bool contains(const AtomSet& s) const {
    return std::binary_search(family_.begin(), family_.end(), s, canonical_less);
  }
  std::optional<std::size_t> index_of(const AtomSet& s) const {
    auto it = std::lower_bound(family_.begin(), family_.end(), s, canonical_less);
    if (it == family_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - family_.begin());
  }

  /// Smallest closed superset.
  AtomSet closure(const AtomSet& s) const {
    AtomSet out = top();
    if (coatomistic_) {
      for (const AtomSet& x : coatoms_)
        if (s.is_subset_of(x)) out &= x;
      return out;
    }
    for (const AtomSet& c : family_)
      if (s.is_subset_of(c)) out &= c;
    return out;
  }

  AtomSet join(std::span<const AtomSet> elems) const {
    AtomSet u;
    for (const AtomSet& e : elems) u |= e;
    return closure(u);
  }
  AtomSet join(const AtomSet& a, const AtomSet& b) const { return closure(a | b); }
  AtomSet meet(std::span<const AtomSet> elems) const {
    AtomSet m = top();
    for (const AtomSet& e : elems) m &= e;
    return m;
  }

  /// Coatoms in canonical order. For the lattice 2 this is {empty set}.
  const std::vector<AtomSet>& coatoms() const { return coatoms_; }
  bool is_coatomistic() const { return coatomistic_; }

  std::optional<std::size_t> coatom_index(const AtomSet& s) const {
    for (std::size_t i = 0; i < coatoms_.size(); ++i)
      if (coatoms_[i] == s) return i;
    return std::nullopt;
  }

  /// Coatoms above a, as a set of coatom indices.
  AtomSet sigma_prime_above(const AtomSet& a) const {
    AtomSet out;
    for (std::size_t i = 0; i < coatoms_.size(); ++i)
      if (a.is_subset_of(coatoms_[i])) out.set(i);
    return out;
  }

  friend bool operator==(const ClosureSpace& a, const ClosureSpace& b) {
    return a.n_ == b.n_ && a.family_ == b.family_;
  }

 private:
  void compute_coatoms() {
    const AtomSet full_set = top();
    std::vector<AtomSet> proper;
    for (auto it = family_.rbegin(); it != family_.rend(); ++it)
      if (!(*it == full_set)) proper.push_back(*it);
    // Every proper member sits under a coatom, and coatoms arrive first when
    // scanning by decreasing size.
    for (const AtomSet& c : proper) {
      bool covered = false;
      for (const AtomSet& x : coatoms_) {
        if (c.is_subset_of(x)) {
          covered = true;
          break;
        }
      }
      if (!covered) coatoms_.push_back(c);
    }
    std::sort(coatoms_.begin(), coatoms_.end(), canonical_less);

    coatomistic_ = true;
    for (const AtomSet& c : family_) {
      AtomSet m = full_set;
      for (const AtomSet& x : coatoms_)
        if (c.is_subset_of(x)) m &= x;
      if (!(m == c)) {
        coatomistic_ = false;
        break;
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<AtomSet> family_;
  std::vector<AtomSet> coatoms_;
  bool coatomistic_ = false;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Closes generators (plus the full set) under intersection.
inline std::vector<AtomSet> intersection_closure(std::size_t n,
                                                 std::span<const AtomSet> generators,
                                                 const Limits& limits = {}) {
  const AtomSet top = AtomSet::full(n);
  std::unordered_set<AtomSet, AtomSetHash> seen{top};
  std::vector<AtomSet> members{top};
  for (const AtomSet& g : generators) {
    if (!g.is_subset_of(top)) {
      throw Error(ErrorCode::kNotSimple, "generator " + g.to_string() + " leaves the atom range");
    }
    if (seen.contains(g)) continue;
    const std::size_t current = members.size();
    for (std::size_t i = 0; i < current; ++i) {
      AtomSet m = members[i] & g;
      if (seen.insert(m).second) {
        members.push_back(m);
        if (members.size() > limits.max_family) {
          throw Error(ErrorCode::kSizeGuard,
                      "intersection closure exceeded " + std::to_string(limits.max_family) +
                          " members");
        }
      }
    }
  }
  return members;
}

/// Builds a simple closure space from generators. Missing singletons are an
/// error, never silently added.
inline ClosureSpace build_space(std::size_t n, std::span<const AtomSet> generators,
                                std::string name = {}, std::vector<std::string> labels = {},
                                const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorCode::kEmptyAtomSet, "closure space needs atoms");
  AtomSet::check_capacity(n);
  std::vector<AtomSet> family = intersection_closure(n, generators, limits);
  family.push_back(AtomSet{});
  return ClosureSpace::from_family(n, std::move(family), std::move(name), std::move(labels));
}

inline ClosureSpace build_space(std::size_t n, std::initializer_list<AtomSet> generators,
                                std::string name = {}) {
  std::vector<AtomSet> g(generators);
  return build_space(n, std::span<const AtomSet>(g), std::move(name));
}

/// The dual lattice, realized on the coatom index set: its closed sets are
/// the coatom sets above each element.
inline ClosureSpace dual_space(const ClosureSpace& space) {
  if (!space.is_coatomistic()) {
    throw Error(ErrorCode::kNotCoatomistic, space.name() + " is not coatomistic");
  }
  const std::size_t k = space.coatoms().size();
  std::vector<AtomSet> family;
  family.reserve(space.size());
  for (const AtomSet& a : space.family()) family.push_back(space.sigma_prime_above(a));
  for (std::size_t i = 0; i < k; ++i) {
    if (std::find(family.begin(), family.end(), AtomSet::singleton(i)) == family.end()) {
      throw Error(ErrorCode::kDualNotAtomistic,
                  "coatom " + std::to_string(i) + " is not an atom of the dual");
    }
  }
  std::vector<std::string> labels;
  for (const AtomSet& x : space.coatoms()) {
    std::string l = "{";
    bool first = true;
    x.for_each([&](std::size_t a) {
      if (!first) l += ',';
      l += space.labels()[a];
      first = false;
    });
    labels.push_back(l + "}");
  }
  std::string name = space.name().empty() ? std::string{} : space.name() + "^op";
  return ClosureSpace::from_family(k, std::move(family), std::move(name), std::move(labels));
}

/// Atom p of the space is the coatom Σ'[p] of the dual, which is an atom of
/// the double dual. Returns p -> atom index of dual_space(dual_space(space)).
inline std::vector<std::size_t> double_dual_relabeling(const ClosureSpace& space,
                                                       const ClosureSpace& dual) {
  std::vector<std::size_t> perm(space.atom_count());
  for (std::size_t p = 0; p < space.atom_count(); ++p) {
    auto idx = dual.coatom_index(space.sigma_prime_above(AtomSet::singleton(p)));
    if (!idx) {
      throw Error(ErrorCode::kDualNotAtomistic,
                  "atom " + std::to_string(p) + " is not a coatom of the dual");
    }
    perm[p] = *idx;
  }
  return perm;
}

inline AtomSet permute(const AtomSet& s, std::span<const std::size_t> perm) {
  AtomSet out;
  s.for_each([&](std::size_t a) { out.set(perm[a]); });
  return out;
}

inline ClosureSpace relabel(const ClosureSpace& space, std::span<const std::size_t> perm) {
  std::vector<AtomSet> family;
  family.reserve(space.size());
  for (const AtomSet& c : space.family()) family.push_back(permute(c, perm));
  std::vector<std::string> labels(space.atom_count());
  for (std::size_t p = 0; p < space.atom_count(); ++p) labels[perm[p]] = space.labels()[p];
  return ClosureSpace::from_family(space.atom_count(), std::move(family), space.name(),
                                   std::move(labels));
}

struct A0Report {
  bool a0 = true;
  bool a0_op = true;
  std::optional<std::pair<AtomSet, AtomSet>> witness_a0;   // coatom atom-sets
  std::optional<std::pair<std::size_t, std::size_t>> witness_a0_op;  // atoms

  bool holds() const { return a0 && a0_op; }
};

/// Axiom A0 and its dual. Coatom pairs are scanned in the given order (the
/// canonical coatom order unless the caller supplies another one).
inline A0Report check_A0(const ClosureSpace& space,
                         std::span<const AtomSet> coatom_order = {}) {
  A0Report report;
  const AtomSet top = space.top();
  std::span<const AtomSet> xs = coatom_order.empty()
                                    ? std::span<const AtomSet>(space.coatoms())
                                    : coatom_order;
  for (std::size_t i = 0; i < xs.size() && report.a0; ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if ((xs[i] | xs[j]) == top) {
        report.a0 = false;
        report.witness_a0 = std::make_pair(xs[i], xs[j]);
        break;
      }
    }
  }
  const AtomSet all_coatoms = AtomSet::full(space.coatoms().size());
  std::vector<AtomSet> above(space.atom_count());
  for (std::size_t p = 0; p < space.atom_count(); ++p)
    above[p] = space.sigma_prime_above(AtomSet::singleton(p));
  for (std::size_t p = 0; p < space.atom_count() && report.a0_op; ++p) {
    for (std::size_t q = p; q < space.atom_count(); ++q) {
      if ((above[p] | above[q]) == all_coatoms) {
        report.a0_op = false;
        report.witness_a0_op = std::make_pair(p, q);
        break;
      }
    }
  }
  return report;
}

/// Direct-product irreducibility: no bipartition of the atoms splits the
/// family as {x | y : x in its trace on A, y in its trace on B}.
inline bool is_irreducible(const ClosureSpace& space, const Limits& limits = {}) {
  const std::size_t n = space.atom_count();
  if (n > limits.max_iso_atoms) {
    throw Error(ErrorCode::kSizeGuard,
                "irreducibility check limited to " + std::to_string(limits.max_iso_atoms) +
                    " atoms");
  }
  if (n == 1) return true;
  const AtomSet top = space.top();
  // Atom 0 always sits in A; mask enumerates the rest of A.
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << (n - 1)); ++mask) {
    AtomSet part_a = AtomSet::singleton(0);
    for (std::size_t i = 1; i < n; ++i)
      if ((mask >> (i - 1)) & 1U) part_a.set(i);
    const AtomSet part_b = top - part_a;
    std::unordered_set<AtomSet, AtomSetHash> trace_a, trace_b;
    for (const AtomSet& c : space.family()) {
      trace_a.insert(c & part_a);
      trace_b.insert(c & part_b);
    }
    // The family always embeds in the product of traces; equal sizes means equal.
    if (trace_a.size() * trace_b.size() == space.size()) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> atom_signatures(const ClosureSpace& s) {
  std::vector<std::vector<std::size_t>> sig(s.atom_count());
  for (const AtomSet& c : s.family()) {
    const std::size_t k = c.count();
    c.for_each([&](std::size_t a) { sig[a].push_back(k); });
  }
  for (auto& v : sig) std::sort(v.begin(), v.end());
  return sig;
}

/// Backtracking over atom bijections with signature pruning and a trace
/// comparison on the assigned prefix. Calls visit(perm) for each full match;
/// stops when visit returns false.
template <class Visit>
void search_isomorphisms(const ClosureSpace& a, const ClosureSpace& b, const Limits& limits,
                         Visit&& visit) {
  const std::size_t n = a.atom_count();
  if (n != b.atom_count() || a.size() != b.size()) return;
  if (n > limits.max_iso_atoms) {
    throw Error(ErrorCode::kSizeGuard,
                "isomorphism search limited to " + std::to_string(limits.max_iso_atoms) +
                    " atoms");
  }
  auto sig_a = atom_signatures(a);
  auto sig_b = atom_signatures(b);
  std::vector<std::size_t> perm(n);
  AtomSet used;
  NodeCounter nodes(limits.max_nodes, "lattice isomorphism search");
  bool stop = false;

  auto traces_match = [&](std::size_t depth) {
    auto encode = [&](const AtomSet& c, bool image_side) {
      AtomSet code;
      for (std::size_t i = 0; i < depth; ++i)
        if (c.test(image_side ? perm[i] : i)) code.set(i);
      return code;
    };
    std::unordered_set<AtomSet, AtomSetHash> ta, tb;
    for (const AtomSet& c : a.family()) ta.insert(encode(c, false));
    for (const AtomSet& c : b.family()) tb.insert(encode(c, true));
    return ta == tb;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    nodes.tick();
    if (depth == n) {
      for (const AtomSet& c : a.family())
        if (!b.contains(permute(c, perm))) return;
      if (!visit(perm)) stop = true;
      return;
    }
    for (std::size_t t = 0; t < n && !stop; ++t) {
      if (used.test(t) || sig_a[depth] != sig_b[t]) continue;
      perm[depth] = t;
      used.set(t);
      if (traces_match(depth + 1)) self(self, depth + 1);
      used.reset(t);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Atom bijection carrying one family onto the other, if any.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const ClosureSpace& a,
                                                                const ClosureSpace& b,
                                                                const Limits& limits = {}) {
  std::optional<std::vector<std::size_t>> found;
  detail::search_isomorphisms(a, b, limits, [&](const std::vector<std::size_t>& p) {
    found = p;
    return false;
  });
  return found;
}

inline bool isomorphic(const ClosureSpace& a, const ClosureSpace& b, const Limits& limits = {}) {
  return find_isomorphism(a, b, limits).has_value();
}

/// All atom permutations preserving the family, in lexicographic order.
inline std::vector<std::vector<std::size_t>> automorphisms(const ClosureSpace& s,
                                                           const Limits& limits = {}) {
  std::vector<std::vector<std::size_t>> out;
  detail::search_isomorphisms(s, s, limits, [&](const std::vector<std::size_t>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

/// Cover pairs (lower, upper) as family indices; the Hasse diagram.
inline std::vector<std::pair<std::size_t, std::size_t>> covers(const ClosureSpace& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& fam = s.family();
  for (std::size_t u = 0; u < fam.size(); ++u) {
    std::vector<std::size_t> lower;
    // Larger candidates first: a strict subset is covered unless it already
    // sits below a recorded lower cover.
    for (std::size_t l = u; l-- > 0;) {
      if (!fam[l].is_subset_of(fam[u]) || fam[l] == fam[u]) continue;
      bool blocked = false;
      for (std::size_t c : lower) {
        if (fam[l].is_subset_of(fam[c])) {
          blocked = true;
          break;
        }
      }
      if (!blocked) lower.push_back(l);
    }
    std::sort(lower.begin(), lower.end());
    for (std::size_t l : lower) out.emplace_back(l, u);
  }
  return out;
}

}  // namespace chulat

#endif  // CHULAT_CLOSURE_SPACE_HPP_
