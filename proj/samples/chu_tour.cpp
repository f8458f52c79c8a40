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

// Embeds lattices as Chu spaces, tensors them, and checks that the
// results match the lattice tensor.

#include <iostream>

#include "chulat/chulat.hpp"

namespace {

void show(const chulat::ChuObject& o) {
  for (std::size_t i = 0; i < o.a; ++i) {
    std::cout << "  ";
    for (std::size_t k = 0; k < o.x; ++k) std::cout << (o.at(i, k) ? '1' : '.');
    std::cout << '\n';
  }
}

}  // namespace

int main() {
  using namespace chulat;

  const ChuObject f3 = functor_F(mo(3));
  std::cout << "F(MO3), " << f3.a << " x " << f3.x << ":\n";
  show(f3);

  std::cout << "hom(MO3, MO3): " << enumerate_homs(mo(3), mo(3)).size() << " lattice arrows, "
            << chu_homs(f3, f3).size() << " Chu arrows\n";

  for (const auto& [a, b] : {std::pair{mo(3), mo(4)}, std::pair{mo(3), chain2()}}) {
    const ChuTensor t = chu_tensor(functor_F(a), functor_F(b));
    const ChuObject lat = functor_F(star_tensor(a, b));
    std::cout << "F(" << a.name() << ") (x) F(" << b.name() << "): " << t.object.a << " x "
              << t.object.x << ", matches F of the star tensor: "
              << (chu_iso(t.object, lat) ? "yes" : "no") << '\n';
  }
}
