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


#include "stabench/rational.h"

#include <stdexcept>

namespace stabench {

std::string rational_str(const Rational &r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    using boost::multiprecision::cpp_int;
    auto digits = [&](std::string_view s) {
        size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (start == s.size()) {
            throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        }
        for (size_t i = start; i < s.size(); i++) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("bad rational '" + std::string(text) + "'");
            }
        }
        return cpp_int(std::string(s));
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(digits(text));
    }
    cpp_int den = digits(text.substr(slash + 1));
    if (den <= 0) {
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    return Rational(digits(text.substr(0, slash)), den);
}

double rational_to_double(const Rational &r) {
    return r.convert_to<double>();
}

}  // namespace stabench
