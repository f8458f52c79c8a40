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

// Lattice morphisms given on atoms. An atom goes to an atom of the target or
// to ZERO (the bottom element); the join-preserving map is recovered by
// closing the image.

#ifndef CHULAT_MORPHISMS_HPP_
#define CHULAT_MORPHISMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chulat/atom_set.hpp"
#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"

namespace chulat {

using AtomImage = std::optional<std::size_t>;
inline constexpr std::nullopt_t kZero = std::nullopt;

/// Source and target are borrowed; they must outlive the map.
struct AtomMap {
  const ClosureSpace* source = nullptr;
  const ClosureSpace* target = nullptr;
  std::vector<AtomImage> image;

  std::size_t size() const { return image.size(); }

  /// Equal images between structurally equal spaces.
  friend bool operator==(const AtomMap& a, const AtomMap& b) {
    return a.image == b.image && same_space(a.source, b.source) &&
           same_space(a.target, b.target);
  }

  static bool same_space(const ClosureSpace* a, const ClosureSpace* b) {
    return a == b || (a != nullptr && b != nullptr && *a == *b);
  }
};

inline AtomMap identity_map(const ClosureSpace& s) {
  AtomMap f{&s, &s, {}};
  for (std::size_t p = 0; p < s.atom_count(); ++p) f.image.emplace_back(p);
  return f;
}

inline AtomMap constant_map(const ClosureSpace& source, const ClosureSpace& target) {
  return AtomMap{&source, &target, std::vector<AtomImage>(source.atom_count(), kZero)};
}

inline bool is_constant(const AtomMap& f) {
  for (const AtomImage& v : f.image)
    if (v) return false;
  return true;
}

inline std::string image_to_string(const AtomMap& f) {
  std::string s = "[";
  for (std::size_t p = 0; p < f.image.size(); ++p) {
    if (p) s += ',';
    s += f.image[p] ? std::to_string(*f.image[p]) : std::string("0");
  }
  return s + "]";
}

/// Image atoms of a, ZERO dropped.
inline AtomSet image_atoms(const AtomMap& f, const AtomSet& a) {
  AtomSet out;
  a.for_each([&](std::size_t p) {
    if (f.image[p]) out.set(*f.image[p]);
  });
  return out;
}

inline AtomSet induced(const AtomMap& f, const AtomSet& a) {
  return f.target->closure(image_atoms(f, a));
}

/// Atoms landing in b or on ZERO.
inline AtomSet preimage(const AtomMap& f, const AtomSet& b) {
  AtomSet out;
  for (std::size_t p = 0; p < f.image.size(); ++p)
    if (!f.image[p] || b.test(*f.image[p])) out.set(p);
  return out;
}

/// f°(b) = join of all a with f(a) <= b. Cached on target coatoms; other
/// values are meets of cached ones when the target is coatomistic.
class Adjoint {
 public:
  Adjoint() = default;
  explicit Adjoint(const AtomMap& f) : f_(f) {
    for (const AtomSet& x : f.target->coatoms())
      on_coatoms_.push_back(f.source->closure(preimage(f, x)));
  }

  const std::vector<AtomSet>& on_coatoms() const { return on_coatoms_; }

  AtomSet operator()(const AtomSet& b) const {
    const ClosureSpace& t = *f_.target;
    if (!t.is_coatomistic()) return f_.source->closure(preimage(f_, b));
    AtomSet m = f_.source->top();
    const auto& xs = t.coatoms();
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (b.is_subset_of(xs[i])) m &= on_coatoms_[i];
    return m;
  }

 private:
  AtomMap f_;
  std::vector<AtomSet> on_coatoms_;
};

/// Throws NotJoinPreserving unless every relevant preimage is closed.
inline Adjoint right_adjoint(const AtomMap& f) {
  const ClosureSpace& t = *f.target;
  const std::vector<AtomSet>& probes = t.is_coatomistic() ? t.coatoms() : t.family();
  for (const AtomSet& b : probes) {
    const AtomSet p = preimage(f, b);
    if (!f.source->contains(p)) {
      throw Error(ErrorCode::kNotJoinPreserving,
                  "preimage " + p.to_string() + " of " + b.to_string() + " is not closed");
    }
  }
  return Adjoint(f);
}

struct ArrowCheck {
  bool ok = true;
  char clause = 0;  // 'a' preimage not closed, 'b' adjoint misses coatoms, 0 malformed
  std::size_t coatom = 0;
  std::string reason;

  explicit operator bool() const { return ok; }
};

inline ArrowCheck is_arrow(const AtomMap& f) {
  ArrowCheck r;
  if (f.source == nullptr || f.target == nullptr || f.image.size() != f.source->atom_count()) {
    return {false, 0, 0, "image length differs from source atom count"};
  }
  for (const AtomImage& v : f.image) {
    if (v && *v >= f.target->atom_count()) {
      return {false, 0, 0, "image atom " + std::to_string(*v) + " out of range"};
    }
  }
  const ClosureSpace& s = *f.source;
  const auto& xs = f.target->coatoms();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const AtomSet p = preimage(f, xs[j]);
    if (!s.contains(p)) {
      return {false, 'a', j, "preimage of coatom " + xs[j].to_string() + " is " + p.to_string() +
                                 ", not closed"};
    }
    if (!(p == s.top()) && !s.coatom_index(p)) {
      return {false, 'b', j, "adjoint sends coatom " + xs[j].to_string() + " to " +
                                 p.to_string() + ", neither a coatom nor 1"};
    }
  }
  return r;
}

namespace detail {

/// Backtracking over atom images in lexicographic order (ZERO first). The
/// preimage of every probe set must end up in `allowed`; partial preimages
/// are pruned against the traces of `allowed` on the assigned prefix.
struct HomSearch {
  const ClosureSpace* source;
  const ClosureSpace* target;
  std::vector<AtomSet> probes;
  std::vector<AtomSet> allowed;
  bool allow_zero = true;
  const std::vector<std::vector<AtomImage>>* candidates = nullptr;

  template <class Visit>
  void run(const Limits& limits, Visit&& visit) const {
    const std::size_t n1 = source->atom_count();
    const std::size_t n2 = target->atom_count();
    std::vector<AtomImage> default_choices;
    if (allow_zero) default_choices.push_back(kZero);
    for (std::size_t v = 0; v < n2; ++v) default_choices.emplace_back(v);

    NodeCounter nodes(limits.max_nodes, "hom enumeration");
    std::vector<AtomImage> image(n1);
    std::vector<AtomSet> partial(probes.size());
    AtomSet prefix;

    auto consistent = [&]() {
      for (const AtomSet& p : partial) {
        bool found = false;
        for (const AtomSet& c : allowed) {
          if ((c & prefix) == p) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
      nodes.tick();
      if (depth == n1) {
        visit(AtomMap{source, target, image});
        return;
      }
      const auto& choices = candidates ? (*candidates)[depth] : default_choices;
      const std::vector<AtomSet> saved = partial;
      prefix.set(depth);
      for (const AtomImage& v : choices) {
        image[depth] = v;
        for (std::size_t j = 0; j < probes.size(); ++j) {
          if (!v || probes[j].test(*v)) partial[j].set(depth);
        }
        if (consistent()) self(self, depth + 1);
        partial = saved;
      }
      prefix.reset(depth);
    };
    rec(rec, 0);
  }
};

}  // namespace detail

/// All arrows source -> target in lexicographic order of image arrays.
/// `candidates`, when given, restricts the images tried for each atom.
inline std::vector<AtomMap> enumerate_homs(
    const ClosureSpace& source, const ClosureSpace& target, const Limits& limits = {},
    const std::vector<std::vector<AtomImage>>* candidates = nullptr) {
  detail::HomSearch search{&source, &target, target.coatoms(), source.coatoms(), true,
                           candidates};
  search.allowed.push_back(source.top());
  std::vector<AtomMap> out;
  search.run(limits, [&](AtomMap f) { out.push_back(std::move(f)); });
  return out;
}

/// Join-preserving maps with every closed preimage, without the coatom
/// condition on the adjoint. allow_zero = false gives maps sending atoms to
/// atoms.
inline std::vector<AtomMap> enumerate_join_homs(const ClosureSpace& source,
                                                const ClosureSpace& target, bool allow_zero,
                                                const Limits& limits = {}) {
  detail::HomSearch search{&source, &target, target.family(), source.family(), allow_zero,
                           nullptr};
  std::vector<AtomMap> out;
  search.run(limits, [&](AtomMap f) { out.push_back(std::move(f)); });
  return out;
}

/// outer after inner.
inline AtomMap compose(const AtomMap& outer, const AtomMap& inner) {
  if (!AtomMap::same_space(inner.target, outer.source)) {
    throw Error(ErrorCode::kMismatch, "codomain of the inner map is not the outer domain");
  }
  AtomMap out{inner.source, outer.target, {}};
  out.image.reserve(inner.image.size());
  for (const AtomImage& v : inner.image)
    out.image.push_back(v ? outer.image[*v] : kZero);
  return out;
}

/// The arrow dual(target) -> dual(source): coatom x of the target goes to
/// f°(x) as a source coatom, or to ZERO when f°(x) = 1. dual_target and
/// dual_source must be dual_space of f.target and f.source.
inline AtomMap op_arrow(const AtomMap& f, const ClosureSpace& dual_target,
                        const ClosureSpace& dual_source) {
  const ClosureSpace& s = *f.source;
  const ClosureSpace& t = *f.target;
  if (dual_target.atom_count() != t.coatoms().size() ||
      dual_source.atom_count() != s.coatoms().size()) {
    throw Error(ErrorCode::kMismatch, "dual spaces do not match the arrow");
  }
  AtomMap out{&dual_target, &dual_source, {}};
  const auto& xs = t.coatoms();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const AtomSet v = preimage(f, xs[j]);
    if (v == s.top()) {
      out.image.push_back(kZero);
    } else if (auto idx = s.coatom_index(v)) {
      out.image.emplace_back(*idx);
    } else {
      throw Error(ErrorCode::kInvalidArrow,
                  "adjoint of " + image_to_string(f) + " misses coatoms at " + xs[j].to_string());
    }
  }
  return out;
}

}  // namespace chulat

#endif  // CHULAT_MORPHISMS_HPP_
