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
 // Nijenhuis-Richardson and Frolicher-Nijenhuis products on tangent-valued forms, and the classical Nijenhuis tensor.


#ifndef NIJ_GEOMETRY_FORMS_HPP
#define NIJ_GEOMETRY_FORMS_HPP

#include <functional>
#include <map>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/structure.hpp"
#include "nij/geometry/fields.hpp"


namespace nij {
namespace geometry {
    struct ConsistencyError : std::logic_error {
        using std::logic_error::logic_error;
    };
    struct ArityError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    /* (A o B)^d = i(A)(B^d) */
    inline TVForm nr_product(const Coordinates& c, const TVForm& A, const TVForm& B) {
        VectorField iA = iota(c, A);
        TVForm out;
        for (const auto& [g, p] : B.comp) out.add(g, apply(c, iA, p));
        return out;
    }

    /* [[d, iA], [d, iB]] = [d, i([A . B])]; a horizontal-free remainder would mean a sign error upstream. */
    inline TVForm fn_bracket(const Coordinates& c, const TVForm& A, const TVForm& B) {
        VectorField X = vf_commutator(c, psi(c, A), psi(c, B));
        auto [x1, x2] = split_vertical(c, X);
        if (!x1.is_zero()) throw ConsistencyError("Frolicher-Nijenhuis commutator has a vertical remainder");
        return x2;
    }

    inline bool is_zero_form(const Coordinates& c, const TVForm& A) {
        for (const auto& [g, p] : A.comp)
            for (const auto& kv : p)
                if (theta_degree(c, kv.first) != 0) return false;
        return true;
    }

    inline TVForm lie_derivative(const Coordinates& c, const TVForm& X, const TVForm& G) {
        if (!is_zero_form(c, X)) throw ArityError("Lie derivative needs a vector field (a 0-form)");
        return fn_bracket(c, X, G);
    }

    /* Form arity of a homogeneous form; throws on mixed arity. */
    inline int form_arity(const Coordinates& c, const TVForm& A) {
        int p = -1;
        for (const auto& [g, poly] : A.comp)
            for (const auto& kv : poly) {
                int q = theta_degree(c, kv.first);
                if (p >= 0 && p != q) throw ArityError("form has mixed arity");
                p = q;
            }
        return p < 0 ? 0 : p;
    }

    namespace detail {
        inline void require_even_base(const Coordinates& c) {
            for (int e : c.basis_degrees())
                if (e != 0) throw ArityError("the classical Nijenhuis tensor is implemented for a base concentrated in degree 0");
        }

        /* J^g_b(t): the coefficient of theta^b in J^g. */
        inline Poly entry(const Coordinates& c, const TVForm& J, int g, int b) {
            Poly out;
            for (const auto& [m, cm] : J.at(g)) {
                if (theta_degree(c, m) != 1 || !m[static_cast<std::size_t>(c.theta(b))]) continue;
                Monomial nm = m;
                nm[static_cast<std::size_t>(c.theta(b))] = 0;
                out.add(nm, cm);
            }
            return out;
        }

        inline VectorField endo(const Coordinates& c, const TVForm& J, const VectorField& X) {
            VectorField out;
            for (int g = 0; g < c.n(); ++g)
                for (int b = 0; b < c.n(); ++b) out.add(c.t(g), mul(c, entry(c, J, g, b), X.at(c.t(b))));
            return out;
        }
    }  // namespace detail

    /* N_J(X, Y) = [JX, JY] + J^2 [X, Y] - J[X, JY] - J[JX, Y] for an arity-one J on an even base. */
    inline VectorField nijenhuis_classical(const Coordinates& c, const TVForm& J, const VectorField& X, const VectorField& Y) {
        detail::require_even_base(c);
        if (!J.is_zero() && form_arity(c, J) != 1) throw ArityError("J must be a 1-form");
        auto Jx = [&](const VectorField& Z) { return detail::endo(c, J, Z); };
        VectorField JX = Jx(X), JY = Jx(Y);
        VectorField out = vf_commutator(c, JX, JY);
        out = out + Jx(Jx(vf_commutator(c, X, Y)));
        out = out - Jx(vf_commutator(c, X, JY));
        out = out - Jx(vf_commutator(c, JX, Y));
        return out;
    }

    inline VectorField coordinate_field(const Coordinates& c, int a) {
        VectorField X;
        X.add(c.t(a), one(c));
        return X;
    }

    struct FnConstant {
        std::optional<Scalar> c;  // empty when both sides vanish
        bool consistent = true;
        TVForm fn_square;
    };

    /* Compares [J . J] with N_J read as a 2-form: the coefficient of theta^a theta^b (a < b) against
     * N_J(d/dt^a, d/dt^b). Returns the ratio when one exists.
     */
    inline FnConstant fn_square_vs_classical(const Coordinates& c, const TVForm& J) {
        detail::require_even_base(c);
        FnConstant r;
        r.fn_square = fn_bracket(c, J, J);
        auto note = [&](const Scalar& lhs, const Scalar& rhs) {
            if (lhs == 0 && rhs == 0) return;
            if (rhs == 0 || lhs == 0) { r.consistent = false; return; }
            Scalar q = lhs / rhs;
            if (!r.c) r.c = q;
            else if (*r.c != q) r.consistent = false;
        };
        for (int a = 0; a < c.n(); ++a)
            for (int b = a + 1; b < c.n(); ++b) {
                VectorField N = nijenhuis_classical(c, J, coordinate_field(c, a), coordinate_field(c, b));
                for (int g = 0; g < c.n(); ++g) {
                    Poly two;
                    for (const auto& [m, cm] : r.fn_square.at(g)) {
                        if (theta_degree(c, m) != 2 || !m[static_cast<std::size_t>(c.theta(a))] ||
                            !m[static_cast<std::size_t>(c.theta(b))])
                            continue;
                        Monomial nm = m;
                        nm[static_cast<std::size_t>(c.theta(a))] = 0;
                        nm[static_cast<std::size_t>(c.theta(b))] = 0;
                        two.add(nm, cm);
                    }
                    const Poly& cl = N.at(c.t(g));
                    std::set<Monomial> keys;
                    for (const auto& kv : two) keys.insert(kv.first);
                    for (const auto& kv : cl) keys.insert(kv.first);
                    for (const auto& m : keys) note(two.coeff(m), cl.coeff(m));
                }
            }
        // any theta-degree other than 2 in [J . J] would be unexplained
        for (const auto& [g, p] : r.fn_square.comp)
            for (const auto& kv : p)
                if (theta_degree(c, kv.first) != 2) r.consistent = false;
        return r;
    }

    /* The circ of the suspension picture: the [d, i(.)] part of [[d, iA], iB]. It equals
     * -(-1)^{|a||b|} i(B)(A) with |a| = |A| - 1, so it is the NR composition read right to left.
     */
    inline TVForm suspension_circ(const Coordinates& c, const TVForm& A, const TVForm& B) {
        return split_vertical(c, vf_commutator(c, psi(c, A), iota(c, B))).second;
    }

    /* The tangent-valued forms with Euler weight in [0, W] (weight = polynomial degree - 1) as a finite
     * pre-Lie^2 algebra; everything heavier is an ideal and is dropped. The algebra degree is |iA| = |A| - 1.
     */
    struct FormAlgebra {
        std::vector<TVForm> basis;
        axiom::AlgebraStructure structure;
    };

    inline FormAlgebra form_algebra(const Coordinates& c, int W) {
        FormAlgebra out;
        std::vector<Monomial> monos;
        std::function<void(int, Monomial&, int)> rec = [&](int v, Monomial& m, int total) {
            if (v == c.vars()) {
                if (total >= 1 && total <= W + 1) monos.push_back(m);
                return;
            }
            int cap = c.odd(v) ? 1 : W + 1 - total;
            for (int e = 0; e <= cap && total + e <= W + 1; ++e) {
                m[static_cast<std::size_t>(v)] = e;
                rec(v + 1, m, total + e);
            }
            m[static_cast<std::size_t>(v)] = 0;
        };
        Monomial m = unit_monomial(c);
        rec(0, m, 0);
        std::map<std::pair<int, Monomial>, int> index;
        for (int g = 0; g < c.n(); ++g)
            for (const auto& mm : monos) {
                TVForm A;
                A.add(g, Poly(mm));
                index[{g, mm}] = static_cast<int>(out.basis.size());
                out.basis.push_back(A);
                out.structure.basis.push_back({"(" + render_monomial(c, mm) + ")d/dt" + std::to_string(g),
                                               monomial_degree(c, mm) - c.deg(g) - 1});
            }
        auto coords = [&](const TVForm& A) {
            axiom::Vec v;
            for (const auto& [g, p] : A.comp)
                for (const auto& [mm, cm] : p) {
                    int tot = 0;
                    for (int e : mm) tot += e;
                    if (tot > W + 1) continue;
                    v[index.at({g, mm})] = cm;
                }
            return v;
        };
        axiom::BilinearOp circ{0, {}}, bullet{1, {}};
        int N = static_cast<int>(out.basis.size());
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                auto x = coords(suspension_circ(c, out.basis[static_cast<std::size_t>(a)], out.basis[static_cast<std::size_t>(b)]));
                if (!x.empty()) circ.table[{a, b}] = x;
                auto y = coords(fn_bracket(c, out.basis[static_cast<std::size_t>(a)], out.basis[static_cast<std::size_t>(b)]));
                if (!y.empty()) bullet.table[{a, b}] = y;
            }
        out.structure.ops["circ"] = circ;
        out.structure.ops["bullet"] = bullet;
        return out;
    }
}  // namespace geometry
}  // namespace nij

#endif  // NIJ_GEOMETRY_FORMS_HPP
