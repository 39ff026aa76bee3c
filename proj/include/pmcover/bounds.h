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

// Exact values of the coverage sequence
//
//   a_0 = 0,  a_t = a_{t-1} + t/(2t+1) (1 - a_{t-1}),
//
// and the integer arithmetic behind the edge-count bound 2^t / sqrt(t).
// Square roots never appear: every comparison is squared first.

#ifndef PMCOVER_BOUNDS_H_
#define PMCOVER_BOUNDS_H_

#include <vector>

#include "pmcover/rational.h"

namespace pmcover {

Rational ASequence(int t);

// a_0, ..., a_t.
std::vector<Rational> ASequencePrefix(int t);

// ceil(a_t * edge_count)
BigInt CoverageGuarantee(int t, const BigInt& edge_count);

// floor(2^t / sqrt(t)): the largest m with m^2 t <= 4^t. t >= 1.
BigInt SizeBoundThreshold(int t);

// Exact comparison floor(2^t/sqrt(t)) * (1 - a_t) < 1, i.e. the threshold is
// below 1/(1 - a_t). Reports the literal result; it is false for t = 1.
bool SizeBoundCheck(int t);

// (2(t+2))^2 t < (2t+3)^2 (t+1). t >= 5.
bool InductionStepCheck(int t);

struct BoundsRow {
  int t;
  Rational a;
  Rational inverse_gap;  // 1 / (1 - a_t)
  BigInt threshold;      // floor(2^t / sqrt(t))
  bool check;            // SizeBoundCheck(t)
};

// Rows 1..t_max. Throws kInvalidParameter for t_max < 1.
std::vector<BoundsRow> BoundsTable(int t_max);

}  // namespace pmcover

#endif  // PMCOVER_BOUNDS_H_
