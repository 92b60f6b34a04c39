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
 // The dg Lie algebra V + Pi V attached to circ, bullet and star, N-algebra checks and SUSY transformations.


#ifndef NIJ_AXIOM_DGLA_HPP
#define NIJ_AXIOM_DGLA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/checks.hpp"
#include "nij/axiom/structure.hpp"


namespace nij {
namespace axiom {
    /* Basis index i < n is a_i, index n + i is Pi a_i, with |Pi a| = |a| + 1. */
    struct DgLieStructure {
        std::vector<GradedSymbol> basis;
        std::map<std::pair<int, int>, Vec> bracket_table;
        std::map<int, Vec> differential;

        int dim() const { return static_cast<int>(basis.size()); }
        int deg(int i) const { return basis.at(static_cast<std::size_t>(i)).degree; }

        Vec bracket(int x, int y) const {
            auto it = bracket_table.find({x, y});
            return it == bracket_table.end() ? Vec{} : it->second;
        }
        Vec bracket(const Vec& x, const Vec& y) const {
            Vec out;
            for (const auto& [a, ca] : x)
                for (const auto& [b, cb] : y) {
                    auto it = bracket_table.find({a, b});
                    if (it != bracket_table.end()) axpy(out, ca * cb, it->second);
                }
            return out;
        }
        Vec d(const Vec& x) const {
            Vec out;
            for (const auto& [a, c] : x) {
                auto it = differential.find(a);
                if (it != differential.end()) axpy(out, c, it->second);
            }
            return out;
        }
        std::string render(const Vec& v) const {
            AlgebraStructure tmp;
            tmp.basis = basis;
            return tmp.render(v);
        }
    };

    namespace detail {
        inline Vec shift_up(const Vec& v, int n) {
            Vec out;
            for (const auto& [i, c] : v) out[i + n] = c;
            return out;
        }

        /* Which families of the bracket to include; the Chevalley-Eilenberg bicomplex needs them separately. */
        struct BracketParts {
            bool circ = true, bullet = true, star = true;
        };

        inline Vec suspended_bracket(const AlgebraStructure& s, int x, int y, BracketParts parts) {
            int n = s.dim();
            bool px = x >= n, py = y >= n;
            int a = px ? x - n : x, b = py ? y - n : y;
            long long da = s.deg(a), db = s.deg(b);
            Vec ea = basis_vec(a), eb = basis_vec(b);
            if (!px && !py) {
                Vec out;
                if (parts.circ) {
                    out = s.mul("circ", ea, eb);
                    axpy(out, -sgn(da * db), s.mul("circ", eb, ea));
                }
                if (parts.star) axpy(out, sgn(da), shift_up(s.mul_or_zero("star", ea, eb), n));
                return out;
            }
            if (px && !py) {
                Vec out;
                if (parts.bullet) axpy(out, -sgn(da), s.mul("bullet", ea, eb));
                if (parts.circ) axpy(out, Scalar(1), shift_up(s.mul("circ", ea, eb), n));
                return out;
            }
            if (!px && py) {
                // graded antisymmetry: [x, y] = -(-1)^{|x||y|} [y, x]
                long long dx = da, dy = db + 1;
                return scaled(suspended_bracket(s, y, x, parts), -sgn(dx * dy));
            }
            Vec out;
            if (parts.bullet) out = shift_up(s.mul("bullet", ea, eb), n);
            return out;
        }
    }  // namespace detail

    inline DgLieStructure suspend_parts(const AlgebraStructure& s, detail::BracketParts parts) {
        validate(s);
        s.op("circ");
        s.op("bullet");
        int n = s.dim();
        DgLieStructure g;
        for (const auto& b : s.basis) g.basis.push_back(b);
        for (const auto& b : s.basis) g.basis.push_back({"P" + b.name, b.degree + 1});
        for (int x = 0; x < 2 * n; ++x)
            for (int y = 0; y < 2 * n; ++y) {
                Vec v = detail::suspended_bracket(s, x, y, parts);
                if (!v.empty()) g.bracket_table[{x, y}] = v;
            }
        for (int a = 0; a < n; ++a) g.differential[a] = basis_vec(a + n);
        return g;
    }

    /* V + V[-1] with d(a + Pi b) = Pi a and
     *   [a, b]     = a o b - (-1)^{|a||b|} b o a + (-1)^{|a|} Pi (a * b)
     *   [Pi a, b]  = -(-1)^{|a|} [a . b] + Pi (a o b)
     *   [Pi a, Pi b] = Pi [a . b]
     */
    inline DgLieStructure suspend_to_dgla(const AlgebraStructure& s) { return suspend_parts(s, {}); }

    inline ViolationReport check_dg_lie(const DgLieStructure& g, bool include_differential = true) {
        ViolationReport r;
        int m = g.dim();
        auto name = [&](int i) { return g.basis[static_cast<std::size_t>(i)].name; };
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                Vec lhs = g.bracket(x, y);
                Vec rhs = scaled(g.bracket(y, x), -detail::sgn(static_cast<long long>(g.deg(x)) * g.deg(y)));
                if (lhs != rhs) r.violations.push_back({"antisymmetry", {name(x), name(y)}, lhs, rhs});
            }
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z) {
                    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
                    Vec ex = basis_vec(x), ey = basis_vec(y), ez = basis_vec(z);
                    Vec lhs = g.bracket(ex, g.bracket(ey, ez));
                    Vec rhs = g.bracket(g.bracket(ex, ey), ez);
                    axpy(rhs, detail::sgn(static_cast<long long>(g.deg(x)) * g.deg(y)), g.bracket(ey, g.bracket(ex, ez)));
                    if (lhs != rhs) r.violations.push_back({"Jacobi", {name(x), name(y), name(z)}, lhs, rhs});
                }
        if (!include_differential) return r;
        for (int x = 0; x < m; ++x) {
            Vec dd = g.d(g.d(basis_vec(x)));
            if (!dd.empty()) r.violations.push_back({"d^2", {name(x)}, dd, {}});
            for (int y = 0; y < m; ++y) {
                Vec ex = basis_vec(x), ey = basis_vec(y);
                Vec lhs = g.d(g.bracket(ex, ey));
                Vec rhs = g.bracket(g.d(ex), ey);
                axpy(rhs, detail::sgn(g.deg(x)), g.bracket(ex, g.d(ey)));
                if (lhs != rhs) r.violations.push_back({"Leibniz", {name(x), name(y)}, lhs, rhs});
            }
        }
        return r;
    }

    /* The N-algebra identities are the Jacobi identities of the suspension, sorted by which arguments carry Pi.
     * A missing star is read as zero.
     */
    inline ViolationReport check_N_algebra(const AlgebraStructure& s) {
        DgLieStructure g = suspend_to_dgla(s);
        ViolationReport r = check_dg_lie(g);
        for (auto& v : r.violations) v.identity = "N-algebra/" + v.identity;
        return r;
    }

    /* Printed companion identities, kept for comparison with the derived set. Each entry says whether the
     * printed form holds on s. The first is taken literally, the second with (a o c) o b in its second term.
     */
    struct PrintedIdentityOutcome {
        std::string name;
        bool holds;
    };

    inline std::vector<PrintedIdentityOutcome> printed_N_identities(const AlgebraStructure& s) {
        using detail::sgn;
        auto star = [&](const Vec& x, const Vec& y) { return s.mul_or_zero("star", x, y); };
        auto circ = [&](const Vec& x, const Vec& y) { return s.mul("circ", x, y); };
        auto bul = [&](const Vec& x, const Vec& y) { return s.mul("bullet", x, y); };
        auto first = [&](bool literal) {
            for (int a = 0; a < s.dim(); ++a)
                for (int b = 0; b < s.dim(); ++b)
                    for (int c = 0; c < s.dim(); ++c) {
                        Vec ea = basis_vec(a), eb = basis_vec(b), ec = basis_vec(c);
                        long long db = s.deg(b), dc = s.deg(c);
                        Vec lhs = circ(circ(ea, eb), ec);
                        axpy(lhs, -sgn(db * dc), literal ? circ(circ(ea, eb), ec) : circ(circ(ea, ec), eb));
                        axpy(lhs, Scalar(-1), circ(ea, circ(eb, ec)));
                        axpy(lhs, sgn(db * dc), circ(ea, circ(ec, eb)));
                        Vec rhs = scaled(bul(ea, star(eb, ec)), sgn(db));
                        axpy(rhs, -sgn(db), star(bul(ea, eb), ec));
                        axpy(rhs, sgn(db * dc + dc), star(bul(ea, ec), eb));
                        if (lhs != rhs) return false;
                    }
            return true;
        };
        auto cyclic = [&]() {
            for (int a = 0; a < s.dim(); ++a)
                for (int b = 0; b < s.dim(); ++b)
                    for (int c = 0; c < s.dim(); ++c) {
                        Vec total;
                        int w[3] = {a, b, c};
                        long long sign_par = 0;
                        for (int rot = 0; rot < 3; ++rot) {
                            int x = w[rot % 3], y = w[(rot + 1) % 3], z = w[(rot + 2) % 3];
                            Vec ex = basis_vec(x), ey = basis_vec(y), ez = basis_vec(z);
                            long long dx = s.deg(x), dy = s.deg(y);
                            Vec term = star(circ(ex, ey), ez);
                            axpy(term, -sgn(dx * dy), star(circ(ey, ex), ez));
                            axpy(term, sgn(dy), circ(star(ex, ey), ez));
                            axpy(total, sgn(sign_par), term);
                            // Koszul sign of moving the leading letter to the back
                            sign_par += static_cast<long long>(s.deg(x)) * (s.deg(y) + s.deg(z));
                        }
                        if (!total.empty()) return false;
                    }
            return true;
        };
        return {{"printed first identity (literal)", first(true)},
                {"printed first identity (pre-Lie pattern)", first(false)},
                {"printed cyclic identity", cyclic()}};
    }

    /* Changes the splitting V -> V + Pi V from a to a + Pi f(a), where f has degree -1, and reads the three
     * operations off the new splitting. Bullet is untouched by construction.
     */
    inline AlgebraStructure susy_transform(const AlgebraStructure& s, const std::map<int, Vec>& f) {
        ViolationReport pre = check_N_algebra(s);
        if (!pre.ok()) throw PreconditionError("input is not an N-algebra: " + pre.violations.front().identity);
        int n = s.dim();
        for (const auto& [a, v] : f)
            for (const auto& kv : v)
                if (s.deg(kv.first) != s.deg(a) - 1) throw PreconditionError("f must have degree -1");
        DgLieStructure g = suspend_to_dgla(s);
        auto fmap = [&](const Vec& x) {
            Vec out;
            for (const auto& [a, c] : x) {
                auto it = f.find(a);
                if (it != f.end()) axpy(out, c, it->second);
            }
            return out;
        };
        auto phi = [&](int a) { return add(basis_vec(a), detail::shift_up(fmap(basis_vec(a)), n)); };
        // x = phi(u) + Pi v
        auto split = [&](const Vec& x) {
            Vec u, p;
            for (const auto& [i, c] : x) (i < n ? u : p)[i < n ? i : i - n] = c;
            Vec v = add(p, fmap(u), -1);
            return std::make_pair(u, v);
        };
        AlgebraStructure out;
        out.basis = s.basis;
        out.ops["bullet"] = s.op("bullet");
        BilinearOp circ{0, {}}, star{-1, {}};
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto [u1, v1] = split(g.bracket(basis_vec(a + n), phi(b)));
                if (!v1.empty()) circ.table[{a, b}] = v1;
                auto [u2, v2] = split(g.bracket(phi(a), phi(b)));
                if (!v2.empty()) star.table[{a, b}] = scaled(v2, detail::sgn(s.deg(a)));
            }
        out.ops["circ"] = circ;
        out.ops["star"] = star;
        return out;
    }

    /* The printed transformation formulas, read with f([a . b]) where the print drops a bracket. */
    inline AlgebraStructure susy_transform_printed(const AlgebraStructure& s, const std::map<int, Vec>& f) {
        using detail::sgn;
        int n = s.dim();
        auto fmap = [&](const Vec& x) {
            Vec out;
            for (const auto& [a, c] : x) {
                auto it = f.find(a);
                if (it != f.end()) axpy(out, c, it->second);
            }
            return out;
        };
        auto circ = [&](const Vec& x, const Vec& y) { return s.mul("circ", x, y); };
        auto bul = [&](const Vec& x, const Vec& y) { return s.mul("bullet", x, y); };
        AlgebraStructure out;
        out.basis = s.basis;
        out.ops["bullet"] = s.op("bullet");
        BilinearOp c2{0, {}}, st{-1, {}};
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Vec ea = basis_vec(a), eb = basis_vec(b);
                long long da = s.deg(a), db = s.deg(b);
                Vec co = circ(ea, eb);
                axpy(co, Scalar(1), bul(ea, fmap(eb)));
                axpy(co, sgn(da), fmap(bul(ea, eb)));
                if (!co.empty()) c2.table[{a, b}] = co;
                Vec so = s.mul_or_zero("star", ea, eb);
                axpy(so, sgn(da), add(circ(fmap(ea), eb), fmap(circ(ea, eb)), -1));
                axpy(so, -sgn((da + 1) * db), add(circ(fmap(eb), ea), fmap(circ(eb, ea)), -1));
                axpy(so, sgn(da), bul(fmap(ea), fmap(eb)));
                axpy(so, Scalar(-1), fmap(bul(fmap(ea), eb)));
                axpy(so, -sgn(da), fmap(bul(ea, fmap(eb))));
                if (!so.empty()) st.table[{a, b}] = so;
            }
        out.ops["circ"] = c2;
        out.ops["star"] = st;
        return out;
    }

    inline bool same_structure(const AlgebraStructure& x, const AlgebraStructure& y) {
        if (x.basis != y.basis) return false;
        for (const std::string name : {"circ", "bullet", "star"}) {
            bool hx = x.has(name) && !x.op(name).table.empty(), hy = y.has(name) && !y.op(name).table.empty();
            if (!hx && !hy) continue;
            if (hx != hy) return false;
            if (x.op(name).table != y.op(name).table) return false;
        }
        return true;
    }
}  // namespace axiom
}  // namespace nij

#endif  // NIJ_AXIOM_DGLA_HPP
