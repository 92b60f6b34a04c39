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
 // Linear Nijenhuis endomorphisms and pre-Lie products on a degree-zero space.


#ifndef NIJ_INFINITY_DICTIONARY_HPP
#define NIJ_INFINITY_DICTIONARY_HPP

#include <stdexcept>
#include <string>

#include "nij/axiom/structure.hpp"
#include "nij/geometry/fields.hpp"


namespace nij {
namespace infinity {
    struct DomainError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    /* J = sum c^g_{ab} t^a theta^b d/dt^g with e_a o e_b = sum_g c^g_{ab} e_g: the t-index sits in the left slot.
     * The other slot assignment does not match N_J = 0 with the pre-Lie identity.
     */
    inline axiom::AlgebraStructure prelie_from_linear_J(const geometry::Coordinates& c, const geometry::TVForm& J) {
        for (int e : c.basis_degrees())
            if (e != 0) throw DomainError("the dictionary is stated for a space concentrated in degree 0");
        axiom::AlgebraStructure s;
        for (int a = 0; a < c.n(); ++a) s.basis.push_back({"e" + std::to_string(a), 0});
        axiom::BilinearOp circ{0, {}};
        for (const auto& [g, poly] : J.comp)
            for (const auto& [m, x] : poly) {
                int ta = -1, tb = -1, tot = 0;
                for (int a = 0; a < c.n(); ++a) {
                    tot += m[static_cast<std::size_t>(c.t(a))] + m[static_cast<std::size_t>(c.theta(a))];
                    if (m[static_cast<std::size_t>(c.t(a))]) ta = a;
                    if (m[static_cast<std::size_t>(c.theta(a))]) tb = a;
                }
                if (tot != 2 || ta < 0 || tb < 0) throw DomainError("J is not linear in t with form-arity one");
                circ.add(ta, tb, g, x);
            }
        s.ops["circ"] = circ;
        return s;
    }

    inline geometry::TVForm linear_J_from_prelie(const geometry::Coordinates& c, const axiom::AlgebraStructure& s) {
        const auto& circ = s.op("circ");
        if (s.dim() != c.n()) throw DomainError("dimension mismatch");
        geometry::TVForm J;
        for (const auto& [ab, out] : circ.table)
            for (const auto& [g, x] : out)
                J.add(g, geometry::mul(c, geometry::var(c, c.t(ab.first)), geometry::var(c, c.theta(ab.second))), x);
        return J;
    }
}  // namespace infinity
}  // namespace nij

#endif  // NIJ_INFINITY_DICTIONARY_HPP
