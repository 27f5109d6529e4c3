// Copyright 2026 The Patrol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patrol/rational.hpp"

#include <cctype>
#include <string>

namespace patrol {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidArgument:
      return "invalid_argument";
    case ErrorCategory::kNoCoveringSet:
      return "no_covering_set";
    case ErrorCategory::kInfeasible:
      return "infeasible";
    case ErrorCategory::kUnbounded:
      return "unbounded";
    case ErrorCategory::kCapExceeded:
      return "cap_exceeded";
    case ErrorCategory::kMalformedInput:
      return "malformed_input";
    case ErrorCategory::kInvalidWalk:
      return "invalid_walk";
    case ErrorCategory::kNoClosedForm:
      return "no_closed_form";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  PATROL_REQUIRE(is_integer_literal(num) && is_integer_literal(den) &&
                     den[0] != '-' && den[0] != '+',
                 ErrorCategory::kMalformedInput,
                 "not a rational literal: '" + std::string(text) + "'");
  const BigInt d{std::string(den)};
  PATROL_REQUIRE(d != 0, ErrorCategory::kMalformedInput,
                 "zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(std::string(num[0] == '+' ? num.substr(1) : num)), d);
}

}  // namespace patrol
