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
 // Chevalley-Eilenberg complexes on symmetric powers of the suspended dg Lie algebra.


#ifndef NIJ_AXIOM_CE_HPP
#define NIJ_AXIOM_CE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/checks.hpp"
#include "nij/axiom/dgla.hpp"
#include "nij/core/formal_sum.hpp"


namespace nij {
namespace axiom {
    using Monomial = std::vector<int>;
    using MonomialSum = FormalSum<Monomial>;

    /* The graded symmetric coalgebra on g[1]. Generator i carries degree |g_i| - 1. */
    class SymmetricCoalgebra {
    public:
        explicit SymmetricCoalgebra(const DgLieStructure& g) : g_(g) {
            for (int i = 0; i < g.dim(); ++i) sdeg_.push_back(g.deg(i) - 1);
        }

        int shifted_degree(int i) const { return sdeg_[static_cast<std::size_t>(i)]; }
        bool odd(int i) const { return (shifted_degree(i) & 1) != 0; }

        /* Sorts a word of generators into a monomial. Returns 0 if an odd generator repeats. */
        int canonical(Monomial& w) const {
            int sign = 1;
            // insertion sort so that each adjacent swap pays its Koszul sign
            for (std::size_t i = 1; i < w.size(); ++i)
                for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
                    if (odd(w[j - 1]) && odd(w[j])) sign = -sign;
                    std::swap(w[j - 1], w[j]);
                }
            for (std::size_t i = 1; i < w.size(); ++i)
                if (w[i] == w[i - 1] && odd(w[i])) return 0;
            return sign;
        }

        /* All monomials of the given length in the chosen generators. */
        std::vector<Monomial> monomials(int length, const std::vector<int>& gens) const {
            std::vector<Monomial> out;
            Monomial cur;
            std::function<void(std::size_t)> rec = [&](std::size_t start) {
                if (static_cast<int>(cur.size()) == length) { out.push_back(cur); return; }
                for (std::size_t k = start; k < gens.size(); ++k) {
                    int gi = gens[k];
                    cur.push_back(gi);
                    rec(odd(gi) ? k + 1 : k);
                    cur.pop_back();
                }
            };
            rec(0);
            return out;
        }

        /* l2(sx, sy) = (-1)^{|x|} s[x, y], extended as a coderivation:
         * D(x_1 ... x_m) = sum_{i<j} eps l2(x_i, x_j) x_1 ..^i ..^j .. x_m
         */
        MonomialSum differential(const Monomial& m) const {
            MonomialSum out;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j) {
                    Vec br = g_.bracket(basis_vec(m[i]), basis_vec(m[j]));
                    if (br.empty()) continue;
                    // move x_i then x_j to the front
                    long long e = 0;
                    for (std::size_t k = 0; k < i; ++k) e += static_cast<long long>(sdeg_[static_cast<std::size_t>(m[k])]) * sdeg_[static_cast<std::size_t>(m[i])];
                    for (std::size_t k = 0; k < j; ++k)
                        if (k != i) e += static_cast<long long>(sdeg_[static_cast<std::size_t>(m[k])]) * sdeg_[static_cast<std::size_t>(m[j])];
                    Scalar c = Scalar(parity_sign(e + g_.deg(m[i])));
                    Monomial rest;
                    for (std::size_t k = 0; k < m.size(); ++k)
                        if (k != i && k != j) rest.push_back(m[k]);
                    for (const auto& [gi, cg] : br) {
                        Monomial w{gi};
                        w.insert(w.end(), rest.begin(), rest.end());
                        int s = canonical(w);
                        if (s != 0) out.add(w, c * cg * s);
                    }
                }
            return out;
        }

        MonomialSum differential(const MonomialSum& x) const {
            MonomialSum out;
            for (const auto& [m, c] : x) out.add(differential(m), c);
            return out;
        }

    private:
        const DgLieStructure& g_;
        std::vector<int> sdeg_;
    };

    struct CeBicomplexReport {
        bool circ_squares_to_zero = true;
        bool bullet_squares_to_zero = true;
        bool anticommute = true;
        std::size_t residue_terms = 0;
        std::vector<std::string> witnesses;
        bool ok() const { return circ_squares_to_zero && bullet_squares_to_zero && anticommute; }
    };

    inline std::string render_monomial(const DgLieStructure& g, const Monomial& m) {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + ("s" + g.basis[static_cast<std::size_t>(m[i])].name);
        return s.empty() ? "1" : s;
    }

    /* d_o comes from the bracket of a o b and the right o-module V[-1]; d_. from [a . b] and its adjoint action.
     * Both act on the symmetric powers of (V + V[-1])[1] up to the given word length.
     */
    inline CeBicomplexReport ce_bicomplex(const AlgebraStructure& s, int max_length) {
        if (max_length < 2) throw PreconditionError("word length bound must be at least 2");
        auto pre = check_prelie(s);
        if (!pre.ok()) throw PreconditionError("circ is not pre-Lie: " + pre.to_string(s, 1));
        auto odd = check_odd_jacobi(s);
        if (!odd.ok()) throw PreconditionError("bullet fails the odd Jacobi identity: " + odd.to_string(s, 1));
        DgLieStructure gc = suspend_parts(s, {true, false, false});
        DgLieStructure gb = suspend_parts(s, {false, true, false});
        SymmetricCoalgebra cc(gc), cb(gb);
        std::vector<int> gens;
        for (int i = 0; i < gc.dim(); ++i) gens.push_back(i);
        CeBicomplexReport r;
        for (int len = 1; len <= max_length; ++len)
            for (const auto& m : cc.monomials(len, gens)) {
                MonomialSum one(m);
                if (!cc.differential(cc.differential(one)).empty()) r.circ_squares_to_zero = false;
                if (!cb.differential(cb.differential(one)).empty()) r.bullet_squares_to_zero = false;
                MonomialSum res = cc.differential(cb.differential(one));
                res += cb.differential(cc.differential(one));
                if (!res.empty()) {
                    r.anticommute = false;
                    r.residue_terms += res.size();
                    if (r.witnesses.size() < 5) r.witnesses.push_back(render_monomial(gc, m));
                }
            }
        return r;
    }

    struct HomologyReport {
        std::vector<int> dims;   // dim J_n, index n
        std::vector<int> ranks;  // rank of d: J_n -> J_{n-1}
        std::vector<int> homology;
        bool full_d_squared_zero = true, sub_d_squared_zero = true, quotient_d_squared_zero = true;
        bool ok() const { return full_d_squared_zero && sub_d_squared_zero && quotient_d_squared_zero; }
    };

    /* J is the quotient of the symmetric powers of (V + V[-1])[1] by those of V[1], under the Chevalley-Eilenberg
     * differential of the bracket. Ranks are computed exactly; H_n for 1 <= n <= m.
     */
    inline HomologyReport operadic_homology(const AlgebraStructure& s, int m) {
        if (m < 1) throw PreconditionError("word length bound must be at least 1");
        auto pre = check_prelie2(s);
        if (!pre.ok()) throw PreconditionError("not a pre-Lie^2 algebra: " + pre.to_string(s, 1));
        DgLieStructure g = suspend_to_dgla(s);
        SymmetricCoalgebra co(g);
        int n = s.dim();
        std::vector<int> all, sub;
        for (int i = 0; i < 2 * n; ++i) all.push_back(i);
        for (int i = 0; i < n; ++i) sub.push_back(i);
        auto in_sub = [&](const Monomial& x) {
            return std::all_of(x.begin(), x.end(), [&](int i) { return i < n; });
        };
        HomologyReport r;
        r.dims.assign(static_cast<std::size_t>(m + 2), 0);
        r.ranks.assign(static_cast<std::size_t>(m + 2), 0);
        std::vector<std::map<Monomial, int>> index(static_cast<std::size_t>(m + 2));
        for (int len = 1; len <= m + 1; ++len) {
            for (const auto& x : co.monomials(len, all)) {
                MonomialSum one(x);
                MonomialSum dd = co.differential(co.differential(one));
                if (!dd.empty()) r.full_d_squared_zero = false;
                if (in_sub(x)) {
                    for (const auto& kv : co.differential(one))
                        if (!in_sub(kv.first)) r.sub_d_squared_zero = false;
                    if (!dd.empty()) r.sub_d_squared_zero = false;
                    continue;
                }
                auto& idx = index[static_cast<std::size_t>(len)];
                idx.emplace(x, static_cast<int>(idx.size()));
            }
            r.dims[static_cast<std::size_t>(len)] = static_cast<int>(index[static_cast<std::size_t>(len)].size());
        }
        auto project = [&](const MonomialSum& x) {
            MonomialSum out;
            for (const auto& [mono, c] : x)
                if (!in_sub(mono)) out.add(mono, c);
            return out;
        };
        for (int len = 2; len <= m + 1; ++len) {
            std::vector<SparseVec> cols;
            for (const auto& [x, i] : index[static_cast<std::size_t>(len)]) {
                MonomialSum dx = project(co.differential(MonomialSum(x)));
                if (!project(co.differential(dx)).empty()) r.quotient_d_squared_zero = false;
                SparseVec v;
                for (const auto& [mono, c] : dx) v[index[static_cast<std::size_t>(len - 1)].at(mono)] = c;
                cols.push_back(v);
            }
            r.ranks[static_cast<std::size_t>(len)] = static_cast<int>(rank_of(cols));
        }
        r.homology.assign(static_cast<std::size_t>(m + 1), 0);
        for (int len = 1; len <= m; ++len)
            r.homology[static_cast<std::size_t>(len)] = r.dims[static_cast<std::size_t>(len)] -
                                                        r.ranks[static_cast<std::size_t>(len)] -
                                                        r.ranks[static_cast<std::size_t>(len + 1)];
        return r;
    }
}  // namespace axiom
}  // namespace nij

#endif  // NIJ_AXIOM_CE_HPP
