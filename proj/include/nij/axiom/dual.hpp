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
 // Differential graded commutative algebras and the dual algebras built on their desuspension.


#ifndef NIJ_AXIOM_DUAL_HPP
#define NIJ_AXIOM_DUAL_HPP

#include <string>
#include <vector>

#include "nij/axiom/checks.hpp"
#include "nij/axiom/structure.hpp"
#include "nij/operad/relations.hpp"


namespace nij {
namespace axiom {
    enum class DualVariant { pre_lie2_dual, nijenhuis_dual };

    /* Product stored as the operation "dot" of degree 0, differential as the unary map. */
    struct DgcaStructure {
        AlgebraStructure a;

        Vec mul(const Vec& x, const Vec& y) const { return a.mul("dot", x, y); }
        Vec d(const Vec& x) const { return a.apply_d(x); }
    };

    inline ViolationReport check_dgca(const DgcaStructure& g) {
        const auto& s = g.a;
        ViolationReport r;
        s.op("dot");
        auto name = [&](int i) { return s.basis[static_cast<std::size_t>(i)].name; };
        for (int x = 0; x < s.dim(); ++x) {
            Vec ex = basis_vec(x);
            Vec dd = g.d(g.d(ex));
            if (!dd.empty()) r.violations.push_back({"d^2", {name(x)}, dd, {}});
            for (const auto& kv : g.d(ex))
                if (s.deg(kv.first) != s.deg(x) + 1) r.violations.push_back({"degree of d", {name(x)}, g.d(ex), {}});
            for (int y = 0; y < s.dim(); ++y) {
                Vec ey = basis_vec(y);
                Vec xy = g.mul(ex, ey);
                Vec yx = scaled(g.mul(ey, ex), detail::sgn(static_cast<long long>(s.deg(x)) * s.deg(y)));
                if (xy != yx) r.violations.push_back({"graded commutativity", {name(x), name(y)}, xy, yx});
                Vec lhs = g.d(xy);
                Vec rhs = g.mul(g.d(ex), ey);
                axpy(rhs, detail::sgn(s.deg(x)), g.mul(ex, g.d(ey)));
                if (lhs != rhs) r.violations.push_back({"Leibniz", {name(x), name(y)}, lhs, rhs});
                for (int z = 0; z < s.dim(); ++z) {
                    Vec ez = basis_vec(z);
                    Vec l = g.mul(xy, ez), rr = g.mul(ex, g.mul(ey, ez));
                    if (l != rr) r.violations.push_back({"associativity", {name(x), name(y), name(z)}, l, rr});
                }
            }
        }
        return r;
    }

    /* On A[-1], with a = Pi alpha of degree |alpha| + 1:
     *   a o b = Pi(alpha d beta),  a . b = Pi(alpha beta),  a * b = (-1)^{|a|} Pi(d alpha d beta).
     * The dual products have degrees 0, -1 and +1.
     */
    inline AlgebraStructure dual_from_dgca(const DgcaStructure& g) {
        auto pre = check_dgca(g);
        if (!pre.ok()) throw PreconditionError("not a dgca: " + pre.to_string(g.a, 1));
        const auto& s = g.a;
        AlgebraStructure out;
        for (const auto& b : s.basis) out.basis.push_back({"P" + b.name, b.degree + 1});
        BilinearOp circ{0, {}}, bullet{-1, {}}, star{1, {}};
        for (int x = 0; x < s.dim(); ++x)
            for (int y = 0; y < s.dim(); ++y) {
                Vec ex = basis_vec(x), ey = basis_vec(y);
                Vec c = g.mul(ex, g.d(ey));
                if (!c.empty()) circ.table[{x, y}] = c;
                Vec b = g.mul(ex, ey);
                if (!b.empty()) bullet.table[{x, y}] = b;
                Vec st = scaled(g.mul(g.d(ex), g.d(ey)), detail::sgn(s.deg(x) + 1));
                if (!st.empty()) star.table[{x, y}] = st;
            }
        out.ops["circ"] = circ;
        out.ops["bullet"] = bullet;
        out.ops["star"] = star;
        return out;
    }

    inline ViolationReport check_dual_algebra(const AlgebraStructure& s, DualVariant v) {
        s.op("circ");
        s.op("bullet");
        if (v == DualVariant::nijenhuis_dual) s.op("star");
        auto rels = v == DualVariant::pre_lie2_dual ? operad::pre_lie2_dual_relations() : operad::nijenhuis_dual_relations();
        ViolationReport r;
        for (const auto& rel : rels)
            detail::run_triples(s, rel.name, [&](int a, int b, int c) {
                return std::make_pair(operad::evaluate_relation(rel, s, {a, b, c}), Vec{});
            }, r);
        return r;
    }
}  // namespace axiom
}  // namespace nij

#endif  // NIJ_AXIOM_DUAL_HPP
