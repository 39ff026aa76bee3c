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

#include "pmcover/rational.h"

#include <string>

#include "pmcover/error.h"

namespace pmcover {

std::string ToFractionString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool IsIntegerText(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerText(num) || !IsIntegerText(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kInvalidParameter,
                "not a fraction: '" + std::string(text) + "'");
  }
  BigInt denominator{std::string(den)};
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "zero denominator in '" + std::string(text) + "'");
  }
  std::string num_text(num);
  if (num_text.front() == '+') num_text.erase(0, 1);
  Rational value(BigInt(num_text), denominator);
  value.canonicalize();
  return value;
}

BigInt Ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt Floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace pmcover
