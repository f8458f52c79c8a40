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

// Compares the three tensor products on a few small lattices and prints the
// nested star coatoms on the 2-atom Boolean algebra, which fails A0.

#include <algorithm>
#include <iostream>

#include "chulat/chulat.hpp"

int main() {
  using namespace chulat;

  for (const auto& [a, b] : {std::pair{mo(3), mo(4)}, std::pair{mo(3), mo(3)},
                             std::pair{mo(3), chain2()}}) {
    const ClosureSpace w = wedge(a, b);
    const ClosureSpace s = star_tensor(a, b);
    const ClosureSpace v = vee(a, b);
    std::cout << a.name() << " x " << b.name() << ": wedge " << w.size() << ", star " << s.size()
              << ", vee " << v.size() << " closed sets\n";
  }

  const ClosureSpace p = powerset(2);
  const auto sig = sigma_star(p, p);
  std::cout << "\nstar coatoms of " << p.name() << " x " << p.name() << ":\n";
  for (const Relation& r : sig) std::cout << "  " << r.to_string() << '\n';
  for (const Relation& r : sig)
    for (const Relation& s : sig)
      if (r.is_subset_of(s) && !(r == s))
        std::cout << "nested: " << r.to_string() << " < " << s.to_string() << '\n';
}
