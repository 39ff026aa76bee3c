// Copyright 2026 The pmcover Authors.
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

// Internal: exact integer views of rational vectors.

#ifndef PMCOVER_SCALED_H_
#define PMCOVER_SCALED_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pmcover/rational.h"

namespace pmcover::internal {

struct ScaledVector {
  std::vector<std::int64_t> numerators;
  BigInt denominator;
};

// Rewrites values over their least common denominator. Returns nullopt when
// some numerator needs more than max_bits bits, so that callers summing up to
// 2^(62 - max_bits) terms cannot overflow.
inline std::optional<ScaledVector> ScaleToCommonDenominator(
    std::span<const Rational> values, int max_bits = 48) {
  ScaledVector out;
  out.denominator = 1;
  for (const Rational& value : values) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
            value.get_den_mpz_t());
  }
  out.numerators.reserve(values.size());
  for (const Rational& value : values) {
    BigInt scaled = value.get_num() * (out.denominator / value.get_den());
    if (mpz_sizeinbase(scaled.get_mpz_t(), 2) > static_cast<std::size_t>(max_bits)) {
      return std::nullopt;
    }
    out.numerators.push_back(scaled.get_si());
  }
  return out;
}

}  // namespace pmcover::internal

#endif  // PMCOVER_SCALED_H_
