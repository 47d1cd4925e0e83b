// Copyright 2026 The stabench Authors
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


#ifndef STABENCH_RATIONAL_H
#define STABENCH_RATIONAL_H

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace stabench {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational &r);
/// Accepts "p/q" or an integer.
Rational parse_rational(std::string_view text);
double rational_to_double(const Rational &r);

}  // namespace stabench

#endif
