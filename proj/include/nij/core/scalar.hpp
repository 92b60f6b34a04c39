/* Copyright 2026 The nij Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Exact rational scalars.


#ifndef NIJ_CORE_SCALAR_HPP
#define NIJ_CORE_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>


namespace nij {
    using Scalar = mpq_class;

    // (-1)^parity as an int
    constexpr int parity_sign(long long parity) { return (parity % 2 == 0) ? 1 : -1; }

    /* Parses "p/q", "p" or "-p/q". Whitespace is not accepted. The result is canonical, so 2/4 becomes 1/2. */
    inline Scalar parse_scalar(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        std::string s(text);
        std::size_t slash = s.find('/');
        auto digits_ok = [](std::string_view part, bool allow_sign) {
            if (part.empty()) return false;
            std::size_t start = 0;
            if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
            if (start == part.size()) return false;
            for (std::size_t i = start; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return false;
            return true;
        };
        std::string_view num = std::string_view(s).substr(0, slash);
        if (!digits_ok(num, true)) throw std::invalid_argument("malformed rational literal '" + s + "'");
        if (slash != std::string::npos) {
            std::string_view den = std::string_view(s).substr(slash + 1);
            if (!digits_ok(den, false)) throw std::invalid_argument("malformed rational literal '" + s + "'");
            bool zero = true;
            for (char c : den) if (c != '0') zero = false;
            if (zero) throw std::invalid_argument("zero denominator in '" + s + "'");
        }
        if (s[0] == '+') s.erase(0, 1);
        Scalar q(s, 10);
        q.canonicalize();
        return q;
    }

    inline std::string to_string(const Scalar& q) { return q.get_str(); }
}  // namespace nij

#endif  // NIJ_CORE_SCALAR_HPP
