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

#ifndef CHULAT_CHULAT_HPP_
#define CHULAT_CHULAT_HPP_

#include "chulat/atom_set.hpp"
#include "chulat/chu.hpp"
#include "chulat/closure_space.hpp"
#include "chulat/error.hpp"
#include "chulat/instances.hpp"
#include "chulat/io.hpp"
#include "chulat/morphisms.hpp"
#include "chulat/tensor.hpp"
#include "chulat/verify.hpp"

#endif  // CHULAT_CHULAT_HPP_
