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
 // Planar binary relation trees for the Koszul dual operads, evaluated on structure constants.


#ifndef NIJ_OPERAD_RELATIONS_HPP
#define NIJ_OPERAD_RELATIONS_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/structure.hpp"
#include "nij/core/graded.hpp"


namespace nij {
namespace operad {
    /* A planar binary tree whose vertices name an operation and whose tails carry labels 1..3. */
    struct Planar {
        int leaf = 0;
        std::string op;
        std::shared_ptr<const Planar> left, right;

        static Planar tail(int l) {
            Planar p;
            p.leaf = l;
            return p;
        }
        static Planar node(std::string op, Planar l, Planar r) {
            Planar p;
            p.op = std::move(op);
            p.left = std::make_shared<const Planar>(std::move(l));
            p.right = std::make_shared<const Planar>(std::move(r));
            return p;
        }
    };

    /* coeff * (-1)^{sum of degrees of sign_labels} * tree */
    struct RelationTerm {
        Scalar coeff;
        std::vector<int> sign_labels;
        Planar tree;
    };

    struct Relation {
        std::string name;
        std::vector<RelationTerm> terms;
    };

    namespace detail {
        inline void planar_labels(const Planar& p, std::vector<int>& out) {
            if (p.leaf) { out.push_back(p.leaf); return; }
            planar_labels(*p.left, out);
            planar_labels(*p.right, out);
        }
        inline axiom::Vec planar_value(const Planar& p, const axiom::AlgebraStructure& s, const std::vector<int>& in) {
            if (p.leaf) return axiom::basis_vec(in.at(static_cast<std::size_t>(p.leaf - 1)));
            return s.mul_or_zero(p.op, planar_value(*p.left, s, in), planar_value(*p.right, s, in));
        }
    }  // namespace detail

    /* The inputs are moved into planar order with their Koszul sign and then multiplied as written. */
    inline axiom::Vec evaluate_planar(const Planar& p, const axiom::AlgebraStructure& s, const std::vector<int>& in) {
        std::vector<int> order, degs, perm;
        detail::planar_labels(p, order);
        for (int b : in) degs.push_back(s.deg(b));
        for (int l : order) perm.push_back(l - 1);
        return axiom::scaled(detail::planar_value(p, s, in), Scalar(koszul_sign(degs, perm)));
    }

    inline axiom::Vec evaluate_relation(const Relation& r, const axiom::AlgebraStructure& s, const std::vector<int>& in) {
        axiom::Vec out;
        for (const auto& t : r.terms) {
            long long e = 0;
            for (int l : t.sign_labels) e += s.deg(in.at(static_cast<std::size_t>(l - 1)));
            axpy(out, t.coeff * parity_sign(e), evaluate_planar(t.tree, s, in));
        }
        return out;
    }

    namespace detail {
        inline Planar L(int i) { return Planar::tail(i); }
        inline Planar N(const char* op, Planar a, Planar b) { return Planar::node(op, std::move(a), std::move(b)); }
    }  // namespace detail

    /* Two associative products o and . with
     *   (a o b) o c = (-1)^{|b||c|} (a o c) o b,   a . (b o c) = (a . b) o c,
     *   a o (b . c) = (-1)^{|b|+1} (a . b) o c + (-1)^{|b|(|c|+1)} (a . c) o b.
     */
    inline std::vector<Relation> pre_lie2_dual_relations() {
        using detail::L;
        using detail::N;
        return {
            {"o associative", {{1, {}, N("circ", N("circ", L(1), L(2)), L(3))}, {-1, {}, N("circ", L(1), N("circ", L(2), L(3)))}}},
            {". associative", {{1, {}, N("bullet", N("bullet", L(1), L(2)), L(3))}, {-1, {}, N("bullet", L(1), N("bullet", L(2), L(3)))}}},
            {"right commutativity of o", {{1, {}, N("circ", N("circ", L(1), L(2)), L(3))}, {-1, {}, N("circ", N("circ", L(1), L(3)), L(2))}}},
            {". o mixed associativity", {{1, {}, N("bullet", L(1), N("circ", L(2), L(3)))}, {-1, {}, N("circ", N("bullet", L(1), L(2)), L(3))}}},
            // the Koszul sign of the last tree already supplies (-1)^{|b||c|}
            {"o . distributivity",
             {{1, {}, N("circ", L(1), N("bullet", L(2), L(3)))},
              {1, {2}, N("circ", N("bullet", L(1), L(2)), L(3))},
              {-1, {2}, N("circ", N("bullet", L(1), L(3)), L(2))}}},
        };
    }

    /* The dual relations plus the four families involving the third product *. */
    inline std::vector<Relation> nijenhuis_dual_relations() {
        using detail::L;
        using detail::N;
        auto r = pre_lie2_dual_relations();
        r.push_back({"(1*2)o3 = (1*3)o2", {{1, {}, N("circ", N("star", L(1), L(2)), L(3))}, {-1, {}, N("circ", N("star", L(1), L(3)), L(2))}}});
        r.push_back({"(1*3)o2 = -(1o3)*2", {{1, {}, N("circ", N("star", L(1), L(3)), L(2))}, {1, {}, N("star", N("circ", L(1), L(3)), L(2))}}});
        r.push_back({"1.(2*3) = 1o(2o3)", {{1, {}, N("bullet", L(1), N("star", L(2), L(3)))}, {-1, {}, N("circ", L(1), N("circ", L(2), L(3)))}}});
        r.push_back({"(1*3)o2 = 0", {{1, {}, N("circ", N("star", L(1), L(3)), L(2))}}});
        r.push_back({"(1.3)*2 = 1.(2*3) - 1.(3*2)",
                     {{1, {}, N("star", N("bullet", L(1), L(3)), L(2))},
                      {-1, {}, N("bullet", L(1), N("star", L(2), L(3)))},
                      {1, {}, N("bullet", L(1), N("star", L(3), L(2)))}}});
        return r;
    }
}  // namespace operad
}  // namespace nij

#endif  // NIJ_OPERAD_RELATIONS_HPP
