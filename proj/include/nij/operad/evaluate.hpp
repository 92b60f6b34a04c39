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
 // Evaluation of decorated trees and planar relation expressions in the endomorphism operad.


#ifndef NIJ_OPERAD_EVALUATE_HPP
#define NIJ_OPERAD_EVALUATE_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/structure.hpp"
#include "nij/operad/tree.hpp"


namespace nij {
namespace operad {
    using axiom::Vec;

    struct MissingOperation : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    /* A target for corolla decorations: mu(sym inputs; anti inputs) on basis indices, output a vector. */
    struct CorollaAlgebra {
        std::vector<int> degrees;
        std::function<Vec(const std::vector<int>&, const std::vector<int>&)> mu;
        int dim() const { return static_cast<int>(degrees.size()); }
    };

    namespace detail {
        inline void leaves_in_order(const Tree& t, std::vector<int>& out) { collect_labels(t, out); }

        inline Vec apply_mu(const CorollaAlgebra& alg, const std::vector<Vec>& sym, const std::vector<Vec>& anti) {
            Vec out;
            std::vector<int> si(sym.size()), ai(anti.size());
            std::function<void(std::size_t, Scalar)> rec = [&](std::size_t pos, Scalar c) {
                if (pos == sym.size() + anti.size()) {
                    axiom::Vec v = alg.mu(si, ai);
                    axpy(out, c, v);
                    return;
                }
                const Vec& src = pos < sym.size() ? sym[pos] : anti[pos - sym.size()];
                for (const auto& [i, ci] : src) {
                    (pos < sym.size() ? si[pos] : ai[pos - sym.size()]) = i;
                    rec(pos + 1, c * ci);
                }
            };
            rec(0, Scalar(1));
            return out;
        }

        /* Value of a subtree on the inputs; `left` accumulates degrees of the leaves already passed in planar order. */
        inline Vec eval_rec(const Tree& t, const CorollaAlgebra& alg, const std::vector<int>& input_of_label,
                            long long& left, long long& sign_parity, bool is_root) {
            if (t.is_leaf()) {
                int b = input_of_label.at(static_cast<std::size_t>(t.leaf - 1));
                left += alg.degrees.at(static_cast<std::size_t>(b));
                return axiom::basis_vec(b);
            }
            if (!is_root) sign_parity += static_cast<long long>(t.vertex_degree()) * left;
            std::vector<Vec> s, a;
            for (const auto& c : t.sym) s.push_back(eval_rec(c, alg, input_of_label, left, sign_parity, false));
            for (const auto& c : t.anti) a.push_back(eval_rec(c, alg, input_of_label, left, sign_parity, false));
            return apply_mu(alg, s, a);
        }
    }  // namespace detail

    /* inputs[l-1] is the basis index fed to tail l. The inputs are first permuted into planar leaf order (Koszul
     * sign on their degrees); then each non-root vertex w pays (-1)^{|w| * degrees of the leaves left of its subtree}.
     */
    inline Vec evaluate_tree(const Tree& t, const CorollaAlgebra& alg, const std::vector<int>& inputs) {
        std::vector<int> planar;
        detail::leaves_in_order(t, planar);
        if (planar.size() != inputs.size()) throw std::invalid_argument("input count differs from the tree arity");
        std::vector<int> degs, perm;
        for (int b : inputs) degs.push_back(alg.degrees.at(static_cast<std::size_t>(b)));
        for (int l : planar) perm.push_back(l - 1);
        long long parity = koszul_sign(degs, perm) < 0 ? 1 : 0;
        long long left = 0;
        Vec v = detail::eval_rec(t, alg, inputs, left, parity, true);
        return axiom::scaled(v, Scalar(parity_sign(parity)));
    }

    inline Vec evaluate_tree(const TreeSum& x, const CorollaAlgebra& alg, const std::vector<int>& inputs) {
        Vec out;
        for (const auto& [t, c] : x) axpy(out, c, evaluate_tree(t, alg, inputs));
        return out;
    }

    /* All input tuples of length n over the basis. */
    inline std::vector<std::vector<int>> input_tuples(int dim, int n) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur(static_cast<std::size_t>(n), 0);
        if (dim == 0) return out;
        while (true) {
            out.push_back(cur);
            int i = n - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == dim - 1) cur[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
        }
        return out;
    }

    /* The composite multilinear map as a structure-constant array keyed by input tuple. */
    inline std::map<std::vector<int>, Vec> evaluate_array(const TreeSum& x, const CorollaAlgebra& alg) {
        std::map<std::vector<int>, Vec> out;
        if (x.empty()) return out;
        int n = tail_count(x.begin()->first);
        for (const auto& in : input_tuples(alg.dim(), n)) {
            Vec v = evaluate_tree(x, alg, in);
            if (!v.empty()) out[in] = v;
        }
        return out;
    }

    /* Binary corollas of a pre-Lie^2 algebra: (2,0) is (-1)^{|a|}[a . b], (1,1) is a o b. The sign turns the
     * symmetry of the bracket into plain graded symmetry.
     */
    inline CorollaAlgebra corolla_algebra(const axiom::AlgebraStructure& s) {
        CorollaAlgebra alg;
        for (const auto& b : s.basis) alg.degrees.push_back(b.degree);
        alg.mu = [&s](const std::vector<int>& sym, const std::vector<int>& anti) -> Vec {
            if (sym.size() == 2 && anti.empty())
                return axiom::scaled(s.mul("bullet", sym[0], sym[1]), Scalar(parity_sign(s.deg(sym[0]))));
            if (sym.size() == 1 && anti.size() == 1) return s.mul("circ", sym[0], anti[0]);
            throw MissingOperation("no operation for the corolla (" + std::to_string(sym.size()) + "," +
                                   std::to_string(anti.size()) + ")");
        };
        return alg;
    }
}  // namespace operad
}  // namespace nij

#endif  // NIJ_OPERAD_EVALUATE_HPP
