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

#ifndef PMCOVER_RATIONAL_H_
#define PMCOVER_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pmcover {

// Exact arbitrary-precision values. mpq_class keeps itself canonical
// (reduced, positive denominator) after every arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

// Always "p/q", including integers ("1/1", "0/1").
std::string ToFractionString(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws Error(kInvalidParameter).
Rational ParseRational(std::string_view text);

// Smallest integer >= value.
BigInt Ceil(const Rational& value);

// Largest integer <= value.
BigInt Floor(const Rational& value);

}  // namespace pmcover

#endif  // PMCOVER_RATIONAL_H_
