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
 // Maurer-Cartan, quadratic relation and lifted-field checks for an assembled mu collection.


#ifndef NIJ_INFINITY_MAURER_CARTAN_HPP
#define NIJ_INFINITY_MAURER_CARTAN_HPP

#include <string>
#include <vector>

#include "nij/core/linalg.hpp"
#include "nij/geometry/forms.hpp"
#include "nij/infinity/mu.hpp"
#include "nij/operad/cobar.hpp"
#include "nij/operad/evaluate.hpp"


namespace nij {
namespace infinity {
    using geometry::VectorField;

    struct Witness {
        std::string where;  // monomial, tree or component
        std::string value;
    };

    struct CheckReport {
        std::string name;
        bool ok = true;
        int K = 0, P = 0;
        std::vector<Witness> witnesses;
        void fail(std::string where, std::string value) {
            ok = false;
            witnesses.push_back({std::move(where), std::move(value)});
        }
        std::string to_string(std::size_t limit = 3) const {
            std::string s = name + ": " + (ok ? "pass" : "FAIL") + " (mod t-degree > " + std::to_string(K) + ", p <= " +
                            std::to_string(P) + ")";
            for (std::size_t i = 0; i < witnesses.size() && i < limit; ++i)
                s += "\n  " + witnesses[i].where + " = " + witnesses[i].value;
            if (witnesses.size() > limit) s += "\n  ... " + std::to_string(witnesses.size() - limit) + " more";
            return s;
        }
    };

    /* The relations are read at t^k theta^p with 1 <= k <= K (pre-Lie^2_inf) or 0 <= k <= K - 1 (Nijenhuis_inf),
     * and p <= P. Outside that window the truncated data cannot be complete.
     */
    inline bool in_range(Variant v, int K, int P, int k, int p) {
        if (p < 0 || p > P) return false;
        if (v == Variant::pinf) return k >= 1 && k <= K;
        return k >= 0 && k <= K - 1;
    }

    namespace detail {
        inline void scan(const Coordinates& c, const TVForm& C, const std::function<bool(int, int)>& keep,
                         CheckReport& r, const std::string& tag) {
            for (const auto& [g, poly] : C.comp)
                for (const auto& [m, x] : poly) {
                    int k = geometry::t_degree(c, m), p = geometry::theta_degree(c, m);
                    if (!keep(k, p)) continue;
                    r.fail(tag + "[" + std::to_string(g) + "] at " + geometry::render_monomial(c, m), x.get_str());
                }
        }
    }  // namespace detail

    /* [X . X] for X = field + gamma. Its p = 0 part is [field, field]; the rest is twice Lie_field(gamma) + [gamma . gamma]/2. */
    inline CheckReport check_maurer_cartan(const DgManifoldPair& pr) {
        CheckReport r{"maurer-cartan", true, pr.K, pr.P, {}};
        TVForm X = pr.total();
        TVForm C = geometry::fn_bracket(pr.coords, X, X);
        detail::scan(pr.coords, C, [&](int k, int p) { return in_range(pr.variant, pr.K, pr.P, k, p); }, r, "[X.X]");
        return r;
    }

    /* mu as a corolla algebra: corolla (k, p) acts by mu_{k,p}. */
    inline operad::CorollaAlgebra corolla_algebra(const MuCollection& mu) {
        return {mu.degrees(), [&mu](const std::vector<int>& A, const std::vector<int>& B) { return mu(A, B); }};
    }

    /* Evaluates the cobar differential of each generator corolla in the window on every ascending input tuple. */
    inline CheckReport quadratic_relations_check(const MuCollection& mu, int K, int P) {
        CheckReport r{"quadratic-relations", true, K, P, {}};
        operad::CobarOptions o{mu.variant(), true};
        auto alg = corolla_algebra(mu);
        for (int k = 0; k <= K; ++k)
            for (int p = 0; p <= P; ++p) {
                if (!in_range(mu.variant(), K, P, k, p) || !operad::admissible(k, p, o)) continue;
                operad::TreeSum dt = operad::cobar_d_corolla(k, p, o);
                std::vector<int> A, B;
                std::function<void(int)> recA, recB;
                recB = [&](int lo) {
                    if (static_cast<int>(B.size()) == p) {
                        std::vector<int> in = A;
                        in.insert(in.end(), B.begin(), B.end());
                        Vec v = operad::evaluate_tree(dt, alg, in);
                        for (const auto& [g, x] : v) {
                            std::string w = "d(" + std::to_string(k) + "," + std::to_string(p) + ") on (";
                            for (std::size_t i = 0; i < in.size(); ++i) w += (i ? "," : "") + std::to_string(in[i]);
                            r.fail(w + ")[" + std::to_string(g) + "]", x.get_str());
                        }
                        return;
                    }
                    for (int b = lo; b < mu.dim(); ++b) { B.push_back(b); recB(b); B.pop_back(); }
                };
                recA = [&](int lo) {
                    if (static_cast<int>(A.size()) == k) { recB(0); return; }
                    for (int a = lo; a < mu.dim(); ++a) { A.push_back(a); recA(a); A.pop_back(); }
                };
                recA(0);
            }
        return r;
    }

    /* The lift to the odd tangent bundle: [d, i(field + gamma)]. */
    inline VectorField psi_lift(const DgManifoldPair& pr) { return geometry::psi(pr.coords, pr.total()); }

    /* [lift, lift] read where the Maurer-Cartan window says it is complete, and [d, lift] everywhere. */
    inline CheckReport check_theorem_521(const DgManifoldPair& pr, const VectorField& lift) {
        const Coordinates& c = pr.coords;
        CheckReport r{"lifted-field", true, pr.K, pr.P, {}};
        VectorField Z = geometry::vf_commutator(c, lift, lift);
        for (const auto& [v, poly] : Z.comp)
            for (const auto& [m, x] : poly) {
                int k = geometry::t_degree(c, m), p = geometry::theta_degree(c, m);
                bool keep = v < c.n() ? in_range(pr.variant, pr.K, pr.P, k, p) : in_range(pr.variant, pr.K, pr.P, k + 1, p - 1);
                if (keep) r.fail("[L,L] d/d" + c.var_name(v) + " at " + geometry::render_monomial(c, m), x.get_str());
            }
        VectorField D = geometry::vf_commutator(c, geometry::de_rham(c), lift);
        for (const auto& [v, poly] : D.comp)
            for (const auto& [m, x] : poly)
                r.fail("[d,L] d/d" + c.var_name(v) + " at " + geometry::render_monomial(c, m), x.get_str());
        return r;
    }

    inline CheckReport check_theorem_521(const DgManifoldPair& pr) { return check_theorem_521(pr, psi_lift(pr)); }

    /* No component of the lift has a part linear in (t, theta). */
    inline bool is_minimal(const DgManifoldPair& pr) {
        VectorField L = psi_lift(pr);
        for (const auto& [v, poly] : L.comp)
            for (const auto& [m, x] : poly) {
                int tot = 0;
                for (int e : m) tot += e;
                if (tot == 1) return false;
            }
        return true;
    }

    /* Y exactly linear, Y^2 = 0, and no cohomology on the span of the coordinates. */
    inline bool is_linear_contractible(const Coordinates& c, const VectorField& Y) {
        std::vector<SparseVec> rows;
        for (int w = 0; w < c.vars(); ++w) {
            SparseVec row;
            for (const auto& [m, x] : Y.at(w)) {
                int tot = 0, which = -1;
                for (int v = 0; v < c.vars(); ++v)
                    if (m[static_cast<std::size_t>(v)]) { tot += m[static_cast<std::size_t>(v)]; which = v; }
                if (tot != 1) return false;
                row[which] += x;
            }
            rows.push_back(row);
        }
        if (!geometry::vf_commutator(c, Y, Y).is_zero()) return false;
        return c.vars() - 2 * static_cast<int>(rank_of(rows)) == 0;
    }

    inline bool is_linear_contractible(const DgManifoldPair& pr) { return is_linear_contractible(pr.coords, psi_lift(pr)); }

    /* d + lift, the field a minimal structure should turn into a linear contractible one at linear order. */
    inline VectorField ambient_total(const DgManifoldPair& pr) { return geometry::de_rham(pr.coords) + psi_lift(pr); }
}  // namespace infinity
}  // namespace nij

#endif  // NIJ_INFINITY_MAURER_CARTAN_HPP
