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
 // The cobar differential on mixed-symmetry corollas, extended to trees, and dimension accounting.


#ifndef NIJ_OPERAD_COBAR_HPP
#define NIJ_OPERAD_COBAR_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nij/operad/tree.hpp"


namespace nij {
namespace operad {
    struct CobarOptions {
        Variant variant = Variant::pinf;
        // admit arity-one vertices; the Maurer-Cartan equations need them, the nilpotence check holds either way
        bool unary = false;
    };

    inline bool admissible(int k, int p, const CobarOptions& o) {
        int n = k + p;
        if (k < 0 || p < 0) return false;
        if (n < (o.unary ? 1 : 2)) return false;
        return o.variant == Variant::ninf || k >= 1;
    }

    namespace detail {
        // every split of {0..m-1} into (chosen, rest), both ascending
        inline std::vector<std::pair<std::vector<int>, std::vector<int>>> splits(int m) {
            std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<int> a, b;
                for (int i = 0; i < m; ++i) ((mask >> i) & 1 ? a : b).push_back(i);
                out.emplace_back(a, b);
            }
            return out;
        }

        template <class F>
        void pick(const std::vector<Tree>& legs, const std::vector<int>& idx, F&& sink) {
            for (int i : idx) sink(legs[static_cast<std::size_t>(i)]);
        }

        inline std::vector<Tree> take(const std::vector<Tree>& legs, const std::vector<int>& idx) {
            std::vector<Tree> out;
            for (int i : idx) out.push_back(legs[static_cast<std::size_t>(i)]);
            return out;
        }
    }  // namespace detail

    /* One term of the differential of a vertex: the lower vertex keeps the root position and receives the upper
     * vertex as a leg, either at the end of its symmetric block or at the front of its antisymmetric block.
     */
    struct SplitTerm {
        int sign;
        Tree lower, upper;
        bool edge_symmetric;
    };

    /* First sum: I1 + I2 = sym, J1 + J2 = anti, lower = (I1, edge | J2), upper = (I2 | J1),
     *   sign (-1)^{#J2 + sigma(J1 J2)}.
     * Second sum: j1 + J2 + J3 = anti, lower = (I1 | edge, J3), upper = (I2, j1 | J2),
     *   sign -(-1)^{#J2 + #J3 + sigma(j1 J2 J3)}.
     * P-infinity asks #I2 >= 1 in the first sum and #I1 >= 1 in the second.
     */
    inline std::vector<SplitTerm> split_vertex(const Tree& v, const CobarOptions& o) {
        std::vector<SplitTerm> out;
        const int k = static_cast<int>(v.sym.size()), p = static_cast<int>(v.anti.size());
        const bool pinf = o.variant == Variant::pinf;
        const int min_arity = o.unary ? 1 : 2;
        for (const auto& [I2, I1] : detail::splits(k))
            for (const auto& [J1, J2] : detail::splits(p)) {
                if (pinf && I2.empty()) continue;
                if (static_cast<int>(I1.size() + 1 + J2.size()) < min_arity) continue;
                if (static_cast<int>(I2.size() + J1.size()) < min_arity) continue;
                std::vector<int> cat = J1;
                cat.insert(cat.end(), J2.begin(), J2.end());
                int sign = parity_sign(static_cast<long long>(J2.size())) * permutation_sign(cat);
                Tree upper = Tree::corolla(detail::take(v.sym, I2), detail::take(v.anti, J1));
                std::vector<Tree> ls = detail::take(v.sym, I1);
                ls.push_back(upper);
                Tree lower = Tree::corolla(std::move(ls), detail::take(v.anti, J2));
                out.push_back({sign, std::move(lower), std::move(upper), true});
            }
        for (const auto& [I2, I1] : detail::splits(k))
            for (int j1 = 0; j1 < p; ++j1) {
                std::vector<int> rest;
                for (int i = 0; i < p; ++i)
                    if (i != j1) rest.push_back(i);
                for (const auto& [A, B] : detail::splits(static_cast<int>(rest.size()))) {
                    std::vector<int> J2, J3;
                    for (int i : A) J2.push_back(rest[static_cast<std::size_t>(i)]);
                    for (int i : B) J3.push_back(rest[static_cast<std::size_t>(i)]);
                    if (pinf && I1.empty()) continue;
                    if (static_cast<int>(I1.size() + 1 + J3.size()) < min_arity) continue;
                    if (static_cast<int>(I2.size() + 1 + J2.size()) < min_arity) continue;
                    std::vector<int> cat{j1};
                    cat.insert(cat.end(), J2.begin(), J2.end());
                    cat.insert(cat.end(), J3.begin(), J3.end());
                    int sign = -parity_sign(static_cast<long long>(J2.size() + J3.size())) * permutation_sign(cat);
                    std::vector<Tree> us = detail::take(v.sym, I2);
                    us.push_back(v.anti[static_cast<std::size_t>(j1)]);
                    Tree upper = Tree::corolla(std::move(us), detail::take(v.anti, J2));
                    std::vector<Tree> la{upper};
                    for (int i : J3) la.push_back(v.anti[static_cast<std::size_t>(i)]);
                    Tree lower = Tree::corolla(detail::take(v.sym, I1), std::move(la));
                    out.push_back({sign, std::move(lower), std::move(upper), false});
                }
            }
        return out;
    }

    namespace detail {
        /* Replaces the vertex with preorder id `target` by each split in turn. */
        inline void split_at(const Tree& t, int target, const CobarOptions& o, std::vector<std::pair<int, Tree>>& out) {
            std::function<bool(Tree&, const std::function<void(Tree&)>&)> find;
            find = [&](Tree& node, const std::function<void(Tree&)>& act) -> bool {
                if (node.is_leaf()) return false;
                if (node.id == target) { act(node); return true; }
                for (auto& c : node.sym) if (find(c, act)) return true;
                for (auto& c : node.anti) if (find(c, act)) return true;
                return false;
            };
            Tree probe = t;
            const Tree* v = nullptr;
            std::function<void(const Tree&)> locate = [&](const Tree& node) {
                if (node.is_leaf() || v) return;
                if (node.id == target) { v = &node; return; }
                for (const auto& c : node.sym) locate(c);
                for (const auto& c : node.anti) locate(c);
            };
            locate(t);
            if (!v) return;
            for (auto term : split_vertex(*v, o)) {
                Tree nt = t;
                // ids after the split vertex shift by one; the lower vertex keeps `target`, the upper gets target + 1
                for_each_vertex(nt, [&](Tree& w) { if (w.id > target) ++w.id; });
                auto shift = [&](Tree& sub) { for_each_vertex(sub, [&](Tree& w) { if (w.id > target) ++w.id; }); };
                for (auto& c : term.lower.sym) shift(c);
                for (auto& c : term.lower.anti) shift(c);
                term.lower.id = target;
                Tree& up = term.edge_symmetric ? term.lower.sym.back() : term.lower.anti.front();
                for (auto& c : up.sym) shift(c);
                for (auto& c : up.anti) shift(c);
                up.id = target + 1;
                find(nt, [&](Tree& node) { node = term.lower; });
                out.emplace_back(term.sign, std::move(nt));
            }
        }
    }  // namespace detail

    /* The differential on a canonical tree: sum over vertices in preorder with the Leibniz sign
     * (-1)^{sum of degrees of the earlier vertices}.
     */
    inline TreeSum cobar_d(const Tree& t, const CobarOptions& o) {
        TreeSum out;
        if (t.is_leaf()) return out;
        Tree numbered = t;
        number_preorder(numbered);
        std::vector<int> degrees;
        for_each_vertex(numbered, [&](const Tree& v) { degrees.push_back(v.vertex_degree()); });
        long long before = 0;
        for (int i = 0; i < static_cast<int>(degrees.size()); ++i) {
            std::vector<std::pair<int, Tree>> terms;
            detail::split_at(numbered, i, o, terms);
            for (auto& [s, nt] : terms) out += canonical_sum(std::move(nt), Scalar(s * parity_sign(before)));
            before += degrees[static_cast<std::size_t>(i)];
        }
        return out;
    }

    inline TreeSum cobar_d(const TreeSum& x, const CobarOptions& o) {
        TreeSum out;
        for (const auto& [t, c] : x) out.add(cobar_d(t, o), c);
        return out;
    }

    inline TreeSum cobar_d_corolla(int k, int p, const CobarOptions& o) {
        if (!admissible(k, p, o))
            throw std::invalid_argument("corolla (" + std::to_string(k) + "," + std::to_string(p) +
                                        ") is not a generator of the " + to_string(o.variant) + " variant");
        return cobar_d(Tree::corolla(k, p), o);
    }

    /* Generators of arity n up to the action of the symmetric group: one corolla per admissible p. */
    inline std::vector<Tree> generator_corollas(int n, const CobarOptions& o) {
        std::vector<Tree> out;
        for (int p = 0; p <= n; ++p)
            if (admissible(n - p, p, o)) out.push_back(Tree::corolla(n - p, p));
        return out;
    }

    struct DSquaredReport {
        int generators_checked = 0;
        std::size_t residue_terms = 0;
        std::vector<std::string> offenders;
        bool ok() const { return residue_terms == 0; }
    };

    inline DSquaredReport d_squared_check(int max_arity, const CobarOptions& o) {
        if (max_arity < 2) throw std::invalid_argument("arity bound must be at least 2");
        DSquaredReport r;
        for (int n = 1; n <= max_arity; ++n)
            for (const auto& c : generator_corollas(n, o)) {
                ++r.generators_checked;
                TreeSum dd = cobar_d(cobar_d(c, o), o);
                if (!dd.empty()) {
                    r.residue_terms += dd.size();
                    r.offenders.push_back(render(c) + " -> " + render(dd));
                }
            }
        return r;
    }

    /* Dimension of the arity-n generating S-module: sum of binom(n, p) over the admissible p. */
    inline long long smodule_dim(int n, Variant v) {
        if (n < 1) throw std::invalid_argument("arity must be at least 1");
        long long total = 0, binom = 1;
        for (int p = 0; p <= n; ++p) {
            if (v == Variant::ninf || p <= n - 1) total += binom;
            binom = binom * (n - p) / (p + 1);
        }
        return total;
    }

    /* Independent count: all normalized corollas on labels 1..n, one per choice of the antisymmetric label set. */
    inline long long enumerate_corollas(int n, Variant v) {
        std::vector<Tree> seen;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> s, a;
            for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? a : s).push_back(i + 1);
            if (v == Variant::pinf && s.empty()) continue;
            auto [sign, t] = corolla_normalize(s, a);
            if (sign == 0) continue;
            if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
        }
        return static_cast<long long>(seen.size());
    }
}  // namespace operad
}  // namespace nij

#endif  // NIJ_OPERAD_COBAR_HPP
