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
 // The pre-Lie^2 algebra Im Q inside a weight-truncated free Lie algebra, as structure constants.


#ifndef NIJ_FREELIE_EXAMPLE_HPP
#define NIJ_FREELIE_EXAMPLE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/structure.hpp"
#include "nij/freelie/free_lie.hpp"


namespace nij {
namespace freelie {
    /* Everything above the truncation weight is an ideal for both operations, so the quotient is again a
     * pre-Lie^2 algebra. Basis vectors are Q applied to Lyndon basis elements, pruned to an independent set.
     */
    struct ImageOfQ {
        std::shared_ptr<const Context> ctx;
        std::vector<Element> basis;
        axiom::AlgebraStructure structure;
    };

    namespace detail {
        inline int word_index(const Context& ctx, const Word& w) {
            // length-prefixed so that words of different lengths never collide
            int k = 1;
            for (int l : w) k = k * (ctx.letter_count() + 1) + l + 1;
            return k;
        }
        inline SparseVec flatten(const Element& x) {
            SparseVec v;
            for (const auto& [w, c] : x.terms()) v[word_index(x.context(), w)] = c;
            return v;
        }
    }  // namespace detail

    inline ImageOfQ image_of_Q(const std::vector<std::pair<std::string, int>>& bases, int max_weight) {
        ImageOfQ out;
        out.ctx = std::make_shared<const Context>(bases, max_weight);
        Echelon e;
        for (int lambda = 1; lambda <= max_weight; ++lambda)
            for (const auto& lw : lie_basis(out.ctx, lambda)) {
                Element q = apply_Q(expand(out.ctx, lw));
                if (q.is_zero() || e.contains(detail::flatten(q))) continue;
                e.insert(detail::flatten(q));
                std::string name = "Q(" + out.ctx->render(lw.word) + (lw.doubled ? ")^2" : ")");
                if (lambda == 1) name = out.ctx->render(q.terms().begin()->first);
                out.basis.push_back(q);
                out.structure.basis.push_back({name, out.ctx->word_degree(q.terms().begin()->first)});
            }
        auto coords = [&](const Element& x) {
            auto c = e.coordinates(detail::flatten(x));
            if (!c) throw DomainError("product left the image of Q");
            return *c;
        };
        axiom::BilinearOp circ{0, {}}, bullet{1, {}};
        int n = static_cast<int>(out.basis.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Element &x = out.basis[static_cast<std::size_t>(a)], &y = out.basis[static_cast<std::size_t>(b)];
                auto c1 = coords(induced_circ(x, y));
                if (!c1.empty()) circ.table[{a, b}] = c1;
                auto c2 = coords(induced_bullet(x, y));
                if (!c2.empty()) bullet.table[{a, b}] = c2;
            }
        out.structure.ops["circ"] = circ;
        out.structure.ops["bullet"] = bullet;
        return out;
    }
}  // namespace freelie
}  // namespace nij

#endif  // NIJ_FREELIE_EXAMPLE_HPP
