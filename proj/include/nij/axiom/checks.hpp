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
 // Identity checkers for pre-Lie and pre-Lie^2 structures.


#ifndef NIJ_AXIOM_CHECKS_HPP
#define NIJ_AXIOM_CHECKS_HPP

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/structure.hpp"


namespace nij {
namespace axiom {
    struct Violation {
        std::string identity;
        std::vector<std::string> witness;
        Vec lhs, rhs;
    };

    struct ViolationReport {
        std::vector<Violation> violations;

        bool ok() const { return violations.empty(); }
        void merge(const ViolationReport& o) { violations.insert(violations.end(), o.violations.begin(), o.violations.end()); }

        std::string to_string(const AlgebraStructure& s, std::size_t limit = 5) const {
            if (ok()) return "no violations";
            std::ostringstream os;
            os << violations.size() << " violation(s)";
            for (std::size_t i = 0; i < violations.size() && i < limit; ++i) {
                const auto& v = violations[i];
                os << "\n  " << v.identity << " at (";
                for (std::size_t j = 0; j < v.witness.size(); ++j) os << (j ? ", " : "") << v.witness[j];
                os << "): lhs = " << s.render(v.lhs) << ", rhs = " << s.render(v.rhs);
            }
            return os.str();
        }
    };

    namespace detail {
        using Triple = std::function<std::pair<Vec, Vec>(int, int, int)>;

        inline void run_triples(const AlgebraStructure& s, const std::string& name, const Triple& identity,
                                ViolationReport& report) {
            for (int a = 0; a < s.dim(); ++a)
                for (int b = 0; b < s.dim(); ++b)
                    for (int c = 0; c < s.dim(); ++c) {
                        auto [lhs, rhs] = identity(a, b, c);
                        if (lhs != rhs)
                            report.violations.push_back({name,
                                                         {s.basis[static_cast<std::size_t>(a)].name,
                                                          s.basis[static_cast<std::size_t>(b)].name,
                                                          s.basis[static_cast<std::size_t>(c)].name},
                                                         lhs, rhs});
                    }
        }

        inline Scalar sgn(long long e) { return Scalar(parity_sign(e)); }
    }  // namespace detail

    /* (a o b) o c - a o (b o c) = (-1)^{|b||c|} ((a o c) o b - a o (c o b)) */
    inline ViolationReport check_prelie(const AlgebraStructure& s, const std::string& op = "circ") {
        s.op(op);
        ViolationReport r;
        detail::run_triples(s, "pre-Lie", [&](int a, int b, int c) {
            Vec ea = basis_vec(a), eb = basis_vec(b), ec = basis_vec(c);
            Vec lhs = add(s.mul(op, s.mul(op, ea, eb), ec), s.mul(op, ea, s.mul(op, eb, ec)), -1);
            Vec rhs = add(s.mul(op, s.mul(op, ea, ec), eb), s.mul(op, ea, s.mul(op, ec, eb)), -1);
            return std::make_pair(lhs, scaled(rhs, detail::sgn(static_cast<long long>(s.deg(b)) * s.deg(c))));
        }, r);
        return r;
    }

    /* [[a.b].c] = [a.[b.c]] + (-1)^{|a||b|+|a|+|b|} [b.[a.c]] */
    inline ViolationReport check_odd_jacobi(const AlgebraStructure& s) {
        s.op("bullet");
        ViolationReport r;
        detail::run_triples(s, "odd Jacobi", [&](int a, int b, int c) {
            Vec ea = basis_vec(a), eb = basis_vec(b), ec = basis_vec(c);
            long long da = s.deg(a), db = s.deg(b);
            Vec lhs = s.mul("bullet", s.mul("bullet", ea, eb), ec);
            Vec rhs = add(s.mul("bullet", ea, s.mul("bullet", eb, ec)), s.mul("bullet", eb, s.mul("bullet", ea, ec)),
                          detail::sgn(da * db + da + db));
            return std::make_pair(lhs, rhs);
        }, r);
        return r;
    }

    /* [a.b] o c + (-1)^{|b|} a o [b.c] + (-1)^{|a||b|+|b|} b o [a.c]
     *     = (-1)^{|b||c|+|c|} [(a o c).b] + (-1)^{(|a|+1)(|b|+|c|)+|a|} [(b o c).a]
     */
    inline ViolationReport check_compatibility(const AlgebraStructure& s) {
        s.op("bullet");
        s.op("circ");
        ViolationReport r;
        detail::run_triples(s, "compatibility", [&](int a, int b, int c) {
            Vec ea = basis_vec(a), eb = basis_vec(b), ec = basis_vec(c);
            long long da = s.deg(a), db = s.deg(b), dc = s.deg(c);
            Vec lhs = s.mul("circ", s.mul("bullet", ea, eb), ec);
            axpy(lhs, detail::sgn(db), s.mul("circ", ea, s.mul("bullet", eb, ec)));
            axpy(lhs, detail::sgn(da * db + db), s.mul("circ", eb, s.mul("bullet", ea, ec)));
            Vec rhs = scaled(s.mul("bullet", s.mul("circ", ea, ec), eb), detail::sgn(db * dc + dc));
            axpy(rhs, detail::sgn((da + 1) * (db + dc) + da), s.mul("bullet", s.mul("circ", eb, ec), ea));
            return std::make_pair(lhs, rhs);
        }, r);
        return r;
    }

    inline ViolationReport check_prelie2(const AlgebraStructure& s) {
        ViolationReport r = check_prelie(s);
        r.merge(check_odd_jacobi(s));
        r.merge(check_compatibility(s));
        return r;
    }
}  // namespace axiom
}  // namespace nij

#endif  // NIJ_AXIOM_CHECKS_HPP
