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

#ifndef PATROL_RATIONAL_HPP_
#define PATROL_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "patrol/error.hpp"

namespace patrol {

// Expression templates are disabled so the types compose cleanly with Eigen.
using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<
    boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p/q", "p" and "-p/q". Throws PatrolError{kMalformedInput}.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace patrol

#endif  // PATROL_RATIONAL_HPP_
