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
 // Finite graded algebras given by structure constants.


#ifndef NIJ_AXIOM_STRUCTURE_HPP
#define NIJ_AXIOM_STRUCTURE_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nij/core/graded.hpp"
#include "nij/core/linalg.hpp"
#include "nij/core/scalar.hpp"


namespace nij {
namespace axiom {
    using Vec = SparseVec;

    struct StructureError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };
    struct PreconditionError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    struct BilinearOp {
        int degree = 0;
        std::map<std::pair<int, int>, Vec> table;

        void add(int a, int b, int out, const Scalar& c) {
            if (c == 0) return;
            Vec& v = table[{a, b}];
            axpy(v, c, Vec{{out, Scalar(1)}});
            if (v.empty()) table.erase({a, b});
        }
    };

    inline Vec basis_vec(int i) { return Vec{{i, Scalar(1)}}; }

    inline Vec scaled(const Vec& v, const Scalar& s) {
        Vec out;
        axpy(out, s, v);
        return out;
    }

    inline Vec add(const Vec& a, const Vec& b, const Scalar& sb = Scalar(1)) {
        Vec out = a;
        axpy(out, sb, b);
        return out;
    }

    struct AlgebraStructure {
        std::vector<GradedSymbol> basis;
        std::map<std::string, BilinearOp> ops;
        // optional unary differential: column i is d(e_i)
        std::map<int, Vec> differential;
        bool has_differential = false;

        int dim() const { return static_cast<int>(basis.size()); }
        int deg(int i) const { return basis.at(static_cast<std::size_t>(i)).degree; }
        bool has(const std::string& op) const { return ops.count(op) != 0; }

        int index_of(const std::string& name) const {
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (basis[i].name == name) return static_cast<int>(i);
            throw StructureError("unknown basis element '" + name + "'");
        }

        const BilinearOp& op(const std::string& name) const {
            auto it = ops.find(name);
            if (it == ops.end()) throw StructureError("structure has no operation '" + name + "'");
            return it->second;
        }

        Vec mul(const std::string& name, int a, int b) const {
            const auto& o = op(name);
            auto it = o.table.find({a, b});
            return it == o.table.end() ? Vec{} : it->second;
        }

        Vec mul(const std::string& name, const Vec& x, const Vec& y) const {
            const auto& o = op(name);
            Vec out;
            for (const auto& [a, ca] : x)
                for (const auto& [b, cb] : y) {
                    auto it = o.table.find({a, b});
                    if (it != o.table.end()) axpy(out, ca * cb, it->second);
                }
            return out;
        }

        // missing optional operations behave as zero
        Vec mul_or_zero(const std::string& name, const Vec& x, const Vec& y) const {
            return has(name) ? mul(name, x, y) : Vec{};
        }

        Vec apply_d(const Vec& x) const {
            Vec out;
            for (const auto& [a, c] : x) {
                auto it = differential.find(a);
                if (it != differential.end()) axpy(out, c, it->second);
            }
            return out;
        }

        /* Degree of a homogeneous vector; throws on mixed degrees. Zero vectors report `fallback`. */
        int degree_of(const Vec& v, int fallback = 0) const {
            bool first = true;
            int d = fallback;
            for (const auto& kv : v) {
                int di = deg(kv.first);
                if (first) { d = di; first = false; }
                else if (d != di) throw StructureError("vector is not homogeneous");
            }
            return d;
        }

        std::string render(const Vec& v) const {
            if (v.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (const auto& [i, c] : v) {
                os << (first ? "" : " + ") << c.get_str() << "*" << basis.at(static_cast<std::size_t>(i)).name;
                first = false;
            }
            return os.str();
        }
    };

    /* Degree and symmetry validation of the named operations. Symmetries are those of the shifted maps
     * a (x) b -> (-1)^{|b|}[a . b] (graded symmetric) and a (x) b -> (-1)^{|b|} a * b (graded antisymmetric).
     */
    inline void validate(const AlgebraStructure& s) {
        for (const auto& [name, o] : s.ops) {
            for (const auto& [ab, v] : o.table) {
                auto [a, b] = ab;
                if (a < 0 || b < 0 || a >= s.dim() || b >= s.dim()) throw StructureError(name + ": input index out of range");
                for (const auto& [g, c] : v) {
                    if (g < 0 || g >= s.dim()) throw StructureError(name + ": output index out of range");
                    if (s.deg(g) != s.deg(a) + s.deg(b) + o.degree)
                        throw StructureError(name + "(" + s.basis[static_cast<std::size_t>(a)].name + ", " +
                                             s.basis[static_cast<std::size_t>(b)].name + ") has a component on " +
                                             s.basis[static_cast<std::size_t>(g)].name + " of the wrong degree");
                }
            }
        }
        auto check_sym = [&](const std::string& name, int expected_degree, bool antisym) {
            if (!s.has(name)) return;
            if (s.op(name).degree != expected_degree)
                throw StructureError(name + " must have degree " + std::to_string(expected_degree));
            for (int a = 0; a < s.dim(); ++a)
                for (int b = a; b < s.dim(); ++b) {
                    long long e = static_cast<long long>(s.deg(a)) * s.deg(b) + s.deg(a) + s.deg(b);
                    Scalar sign = parity_sign(e + (antisym ? 1 : 0));
                    Vec diff = add(s.mul(name, a, b), s.mul(name, b, a), -sign);
                    if (!diff.empty())
                        throw StructureError(name + " violates its graded symmetry on the pair (" +
                                             s.basis[static_cast<std::size_t>(a)].name + ", " +
                                             s.basis[static_cast<std::size_t>(b)].name + ")");
                }
        };
        check_sym("bullet", 1, false);
        check_sym("star", -1, true);
        if (s.has("circ") && s.op("circ").degree != 0) throw StructureError("circ must have degree 0");
        for (const auto& [a, v] : s.differential)
            for (const auto& kv : v)
                if (s.deg(kv.first) != s.deg(a) + 1) throw StructureError("differential component of the wrong degree");
    }

    /* A change of basis: new basis vector i is columns[i] in old coordinates. Structure constants are transported
     * exactly. Degrees of the new vectors are taken from the old ones and must be homogeneous.
     */
    inline AlgebraStructure change_basis(const AlgebraStructure& s, const std::vector<Vec>& columns) {
        Echelon e;
        for (const auto& c : columns) e.insert(c);
        if (static_cast<int>(e.rank()) != s.dim() || static_cast<int>(columns.size()) != s.dim())
            throw StructureError("basis change is not invertible");
        AlgebraStructure out;
        for (std::size_t i = 0; i < columns.size(); ++i)
            out.basis.push_back({s.basis[i].name + "'", s.degree_of(columns[i])});
        auto coords = [&](const Vec& v) {
            auto c = e.coordinates(v);
            return *c;
        };
        for (const auto& [name, o] : s.ops) {
            BilinearOp no{o.degree, {}};
            for (int a = 0; a < s.dim(); ++a)
                for (int b = 0; b < s.dim(); ++b) {
                    Vec r = coords(s.mul(name, columns[static_cast<std::size_t>(a)], columns[static_cast<std::size_t>(b)]));
                    if (!r.empty()) no.table[{a, b}] = r;
                }
            out.ops[name] = no;
        }
        out.has_differential = s.has_differential;
        for (int a = 0; a < s.dim(); ++a) {
            Vec r = coords(s.apply_d(columns[static_cast<std::size_t>(a)]));
            if (!r.empty()) out.differential[a] = r;
        }
        return out;
    }
}  // namespace axiom
}  // namespace nij

#endif  // NIJ_AXIOM_STRUCTURE_HPP
