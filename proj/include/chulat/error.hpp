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

#ifndef CHULAT_ERROR_HPP_
#define CHULAT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chulat {

enum class ErrorCode {
  kNotSimple,
  kEmptyAtomSet,
  kSizeGuard,
  kNotCoatomistic,
  kDualNotAtomistic,
  kNotClosed,
  kNotJoinPreserving,
  kMismatch,
  kInvalidArrow,
  kNotAnObject,
  kNotACoatom,
  kDimensionMismatch,
  kNotSymmetric,
  kNotSeparating,
  kNotPrime,
  kNotABijection,
  kIntervalMismatch,
  kParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kEmptyAtomSet: return "EmptyAtomSet";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kNotCoatomistic: return "NotCoatomistic";
    case ErrorCode::kDualNotAtomistic: return "DualNotAtomistic";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kNotJoinPreserving: return "NotJoinPreserving";
    case ErrorCode::kMismatch: return "Mismatch";
    case ErrorCode::kInvalidArrow: return "InvalidArrow";
    case ErrorCode::kNotAnObject: return "NotAnObject";
    case ErrorCode::kNotACoatom: return "NotACoatom";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotSeparating: return "NotSeparating";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kIntervalMismatch: return "IntervalMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Search and materialization guards. Every check reads its thresholds from
/// here; nothing downstream hard-codes a limit.
struct Limits {
  std::size_t max_nodes = 10'000'000;   // backtracking nodes per search
  std::size_t max_cells = 24;           // grid cells for materializing vee
  std::size_t max_iso_atoms = 12;       // lattice isomorphism, irreducibility
  std::size_t max_chu_carrier = 256;    // rows/columns for Chu iso search
  std::size_t max_points = 64;          // projective points of a subspace lattice
  std::size_t max_bimorphism_atoms = 4; // atoms per factor in universal_check
  std::size_t max_family = 2'000'000;   // members of an intersection closure
  std::size_t max_classify_points = 7;  // projective points in the coatom classification
  std::size_t naturality_samples = 10;  // arrow pairs per naturality check
};

namespace detail {

class NodeCounter {
 public:
  NodeCounter(std::size_t limit, std::string_view what)
      : limit_(limit), what_(what) {}

  void tick() {
    if (++count_ > limit_) {
      throw Error(ErrorCode::kSizeGuard,
                  std::string(what_) + " exceeded " + std::to_string(limit_) +
                      " search nodes");
    }
  }
  std::size_t count() const { return count_; }

 private:
  std::size_t limit_;
  std::string_view what_;
  std::size_t count_ = 0;
};

}  // namespace detail
}  // namespace chulat

#endif  // CHULAT_ERROR_HPP_
