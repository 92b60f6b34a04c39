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
 // Decorated trees of mixed-symmetry corollas, their canonical form and grafting.


#ifndef NIJ_OPERAD_TREE_HPP
#define NIJ_OPERAD_TREE_HPP

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nij/core/formal_sum.hpp"
#include "nij/core/graded.hpp"


namespace nij {
namespace operad {
    struct MalformedTree : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    enum class Variant { pinf, ninf };

    inline std::string to_string(Variant v) { return v == Variant::pinf ? "pinf" : "ninf"; }

    /* A leaf carries its tail label (> 0). An internal vertex has leaf == 0 and two blocks of legs: the
     * symmetric (wavy) block and the antisymmetric (straight) block. Its degree is 1 - #anti.
     * The tensor order of decorations is the depth-first preorder, legs visited sym block first.
     */
    struct Tree {
        int leaf = 0;
        std::vector<Tree> sym, anti;
        int id = -1;  // scratch slot, ignored by comparisons

        static Tree tail(int label) {
            Tree t;
            t.leaf = label;
            return t;
        }
        static Tree corolla(std::vector<Tree> s, std::vector<Tree> a) {
            Tree t;
            t.sym = std::move(s);
            t.anti = std::move(a);
            return t;
        }
        static Tree corolla(int k, int p) {
            Tree t;
            for (int i = 1; i <= k; ++i) t.sym.push_back(tail(i));
            for (int i = k + 1; i <= k + p; ++i) t.anti.push_back(tail(i));
            return t;
        }

        bool is_leaf() const { return leaf != 0; }
        int vertex_degree() const { return 1 - static_cast<int>(anti.size()); }
        int arity() const { return static_cast<int>(sym.size() + anti.size()); }

        friend bool operator==(const Tree& x, const Tree& y) {
            return x.leaf == y.leaf && x.sym == y.sym && x.anti == y.anti;
        }
        friend bool operator<(const Tree& x, const Tree& y) {
            if (x.leaf != y.leaf) return x.leaf < y.leaf;
            if (x.sym != y.sym) return x.sym < y.sym;
            return x.anti < y.anti;
        }
    };

    using TreeSum = FormalSum<Tree>;

    inline int min_label(const Tree& t) {
        if (t.is_leaf()) return t.leaf;
        int m = INT_MAX;
        for (const auto& c : t.sym) m = std::min(m, min_label(c));
        for (const auto& c : t.anti) m = std::min(m, min_label(c));
        return m;
    }

    inline void collect_labels(const Tree& t, std::vector<int>& out) {
        if (t.is_leaf()) { out.push_back(t.leaf); return; }
        for (const auto& c : t.sym) collect_labels(c, out);
        for (const auto& c : t.anti) collect_labels(c, out);
    }

    inline int tail_count(const Tree& t) {
        std::vector<int> l;
        collect_labels(t, l);
        return static_cast<int>(l.size());
    }

    inline int tree_degree(const Tree& t) {
        if (t.is_leaf()) return 0;
        int d = t.vertex_degree();
        for (const auto& c : t.sym) d += tree_degree(c);
        for (const auto& c : t.anti) d += tree_degree(c);
        return d;
    }

    inline int vertex_count(const Tree& t) {
        if (t.is_leaf()) return 0;
        int n = 1;
        for (const auto& c : t.sym) n += vertex_count(c);
        for (const auto& c : t.anti) n += vertex_count(c);
        return n;
    }

    template <class F>
    void for_each_vertex(Tree& t, F&& f) {
        if (t.is_leaf()) return;
        f(t);
        for (auto& c : t.sym) for_each_vertex(c, f);
        for (auto& c : t.anti) for_each_vertex(c, f);
    }
    template <class F>
    void for_each_vertex(const Tree& t, F&& f) {
        if (t.is_leaf()) return;
        f(t);
        for (const auto& c : t.sym) for_each_vertex(c, f);
        for (const auto& c : t.anti) for_each_vertex(c, f);
    }

    inline void number_preorder(Tree& t) {
        int next = 0;
        for_each_vertex(t, [&](Tree& v) { v.id = next++; });
    }

    namespace detail {
        inline int sort_legs(std::vector<Tree>& legs, bool track_sign) {
            std::vector<std::size_t> idx(legs.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::vector<int> keys;
            for (const auto& l : legs) keys.push_back(min_label(l));
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
            std::vector<int> perm(idx.begin(), idx.end());
            int sign = track_sign ? permutation_sign(perm) : 1;
            std::vector<Tree> out;
            for (auto i : idx) out.push_back(std::move(legs[i]));
            legs = std::move(out);
            return sign;
        }

        inline int sort_recursive(Tree& t) {
            if (t.is_leaf()) return 1;
            int s = 1;
            for (auto& c : t.sym) s *= sort_recursive(c);
            for (auto& c : t.anti) s *= sort_recursive(c);
            sort_legs(t.sym, false);
            s *= sort_legs(t.anti, true);
            return s;
        }
    }  // namespace detail

    /* Brings a tree into canonical form. The ids on its vertices give the current tensor order of the decorations;
     * sorting legs costs the parity of each antisymmetric block, and restoring preorder costs the Koszul sign of
     * the vertex degrees. Ids are cleared on return.
     */
    inline int canonicalize(Tree& t) {
        std::vector<int> seen;
        collect_labels(t, seen);
        std::vector<int> sorted = seen;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
        int sign = detail::sort_recursive(t);
        std::vector<int> order, degrees;
        for_each_vertex(t, [&](const Tree& v) { order.push_back(v.id); });
        std::vector<int> rank(order.size());
        {
            std::vector<int> ids = order;
            std::sort(ids.begin(), ids.end());
            for (std::size_t i = 0; i < order.size(); ++i)
                rank[i] = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), order[i]) - ids.begin());
        }
        // rank[i] is the old tensor position of the i-th vertex in preorder
        std::vector<int> deg_by_old(order.size());
        {
            std::size_t i = 0;
            for_each_vertex(t, [&](const Tree& v) { deg_by_old[static_cast<std::size_t>(rank[i++])] = v.vertex_degree(); });
        }
        sign *= koszul_sign(deg_by_old, rank);
        for_each_vertex(t, [](Tree& v) { v.id = -1; });
        return sign;
    }

    /* Normalizes a raw corolla given by its two label blocks. Returns the sign, 0 for a repeated label. */
    inline std::pair<int, Tree> corolla_normalize(const std::vector<int>& sym, const std::vector<int>& anti) {
        std::vector<int> all = sym;
        all.insert(all.end(), anti.begin(), anti.end());
        std::vector<int> sorted = all;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> anti_sorted = anti;
        std::sort(anti_sorted.begin(), anti_sorted.end());
        if (std::adjacent_find(anti_sorted.begin(), anti_sorted.end()) != anti_sorted.end()) return {0, Tree{}};
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1) throw MalformedTree("corolla labels must be a bijection onto 1..n");
        std::vector<Tree> s, a;
        for (int l : sym) s.push_back(Tree::tail(l));
        for (int l : anti) a.push_back(Tree::tail(l));
        Tree t = Tree::corolla(std::move(s), std::move(a));
        number_preorder(t);
        int sign = canonicalize(t);
        return {sign, t};
    }

    inline TreeSum canonical_sum(Tree t, const Scalar& c = Scalar(1)) {
        int s = canonicalize(t);
        TreeSum out;
        if (s != 0) out.add(t, c * s);
        return out;
    }

    namespace detail {
        inline void relabel(Tree& t, int i, int shift_inner, int inner_arity, bool inner) {
            if (t.is_leaf()) {
                if (inner) t.leaf += shift_inner;
                else if (t.leaf > i) t.leaf += inner_arity - 1;
                return;
            }
            for (auto& c : t.sym) relabel(c, i, shift_inner, inner_arity, inner);
            for (auto& c : t.anti) relabel(c, i, shift_inner, inner_arity, inner);
        }
        inline bool replace_tail(Tree& t, int label, const Tree& with) {
            if (t.is_leaf()) {
                if (t.leaf == label) { t = with; return true; }
                return false;
            }
            for (auto& c : t.sym) if (replace_tail(c, label, with)) return true;
            for (auto& c : t.anti) if (replace_tail(c, label, with)) return true;
            return false;
        }
    }  // namespace detail

    /* Operadic composition outer o_i inner: the decorations are tensored as (outer) (x) (inner) and then brought
     * to canonical order. Tails of inner become i..i+m-1, later tails of outer shift up by m-1.
     */
    inline TreeSum graft(const TreeSum& outer, int i, const TreeSum& inner) {
        TreeSum out;
        for (const auto& [a, ca] : outer)
            for (const auto& [b, cb] : inner) {
                int n = tail_count(a), m = tail_count(b);
                if (i < 1 || i > n) throw std::out_of_range("graft index out of range");
                // shift labels first, then locate the tail that used to be i
                Tree o = a, in = b;
                number_preorder(o);
                int offset = vertex_count(o);
                for_each_vertex(in, [&, k = 0](Tree& v) mutable { v.id = offset + k++; });
                detail::relabel(in, i, i - 1, m, true);
                // mark tail i with a placeholder before shifting the others
                detail::replace_tail(o, i, Tree::tail(-1));
                detail::relabel(o, i, 0, m, false);
                detail::replace_tail(o, -1, in);
                out += canonical_sum(o, ca * cb);
            }
        return out;
    }

    inline std::string render(const Tree& t) {
        if (t.is_leaf()) return std::to_string(t.leaf);
        std::string s = "(";
        for (std::size_t i = 0; i < t.sym.size(); ++i) s += (i ? "," : "") + render(t.sym[i]);
        s += "|";
        for (std::size_t i = 0; i < t.anti.size(); ++i) s += (i ? "," : "") + render(t.anti[i]);
        return s + ")";
    }

    inline std::string render(const TreeSum& s) {
        return s.to_string([](const Tree& t) { return render(t); });
    }
}  // namespace operad
}  // namespace nij

#endif  // NIJ_OPERAD_TREE_HPP
