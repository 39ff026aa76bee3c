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

#include "pmcover/bounds.h"

#include <string>

#include "pmcover/error.h"

namespace pmcover {

namespace {

void RequireAtLeast(int t, int lowest, const char* what) {
  if (t < lowest) {
    throw Error(ErrorCode::kInvalidParameter,
                std::string(what) + " needs t >= " + std::to_string(lowest) +
                    ", got " + std::to_string(t));
  }
}

}  // namespace

std::vector<Rational> ASequencePrefix(int t) {
  RequireAtLeast(t, 0, "a_t");
  std::vector<Rational> out;
  out.reserve(t + 1);
  Rational a = 0;
  out.push_back(a);
  for (int s = 1; s <= t; ++s) {
    Rational step(s, 2 * s + 1);
    step.canonicalize();
    a += step * (1 - a);
    out.push_back(a);
  }
  return out;
}

Rational ASequence(int t) { return ASequencePrefix(t).back(); }

BigInt CoverageGuarantee(int t, const BigInt& edge_count) {
  if (edge_count < 0) {
    throw Error(ErrorCode::kInvalidParameter, "negative edge count");
  }
  return Ceil(ASequence(t) * Rational(edge_count));
}

BigInt SizeBoundThreshold(int t) {
  RequireAtLeast(t, 1, "size bound");
  BigInt four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(t));
  // m^2 t <= 4^t  <=>  m^2 <= floor(4^t / t)
  BigInt quotient = four_pow / t;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  return root;
}

bool SizeBoundCheck(int t) {
  RequireAtLeast(t, 1, "size bound");
  return Rational(SizeBoundThreshold(t)) * (1 - ASequence(t)) < 1;
}

bool InductionStepCheck(int t) {
  RequireAtLeast(t, 5, "induction step");
  const BigInt lhs = BigInt(2 * (t + 2)) * (2 * (t + 2)) * t;
  const BigInt rhs = BigInt(2 * t + 3) * (2 * t + 3) * (t + 1);
  return lhs < rhs;
}

std::vector<BoundsRow> BoundsTable(int t_max) {
  RequireAtLeast(t_max, 1, "bounds table");
  const std::vector<Rational> a = ASequencePrefix(t_max);
  std::vector<BoundsRow> rows;
  for (int t = 1; t <= t_max; ++t) {
    const Rational gap = 1 - a[t];
    const BigInt threshold = SizeBoundThreshold(t);
    rows.push_back(BoundsRow{t, a[t], Rational(1 / gap), threshold,
                             Rational(threshold) * gap < 1});
  }
  return rows;
}

}  // namespace pmcover
