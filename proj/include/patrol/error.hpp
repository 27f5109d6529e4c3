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

#ifndef PATROL_ERROR_HPP_
#define PATROL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace patrol {

enum class ErrorCategory {
  kInvalidArgument,
  kNoCoveringSet,
  kInfeasible,
  kUnbounded,
  kCapExceeded,
  kMalformedInput,
  kInvalidWalk,
  kNoClosedForm,
};

std::string_view category_name(ErrorCategory category);

class PatrolError : public std::runtime_error {
 public:
  PatrolError(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

#define PATROL_REQUIRE(cond, category, message)           \
  do {                                                    \
    if (!(cond)) {                                        \
      throw ::patrol::PatrolError((category), (message)); \
    }                                                     \
  } while (false)

}  // namespace patrol

#endif  // PATROL_ERROR_HPP_
