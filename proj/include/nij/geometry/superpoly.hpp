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
 // Polynomials in even and odd coordinates t, theta on the odd tangent lift of a formal graded space.


#ifndef NIJ_GEOMETRY_SUPERPOLY_HPP
#define NIJ_GEOMETRY_SUPERPOLY_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nij/core/formal_sum.hpp"
#include "nij/core/scalar.hpp"


namespace nij {
namespace geometry {
    struct ContextMismatch : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    /* Variable v < n is t^v with degree -|e_v|; variable n + v is theta^v with degree -|e_v| + 1. */
    class Coordinates {
    public:
        explicit Coordinates(std::vector<int> basis_degrees, int K = 3) : edeg_(std::move(basis_degrees)), K_(K) {
            if (K < 1) throw std::invalid_argument("truncation order must be at least 1");
            for (int e : edeg_) deg_.push_back(-e);
            for (int e : edeg_) deg_.push_back(-e + 1);
        }
        int n() const { return static_cast<int>(edeg_.size()); }
        int vars() const { return 2 * n(); }
        int K() const { return K_; }
        int basis_degree(int a) const { return edeg_.at(static_cast<std::size_t>(a)); }
        const std::vector<int>& basis_degrees() const { return edeg_; }
        int deg(int v) const { return deg_.at(static_cast<std::size_t>(v)); }
        bool odd(int v) const { return (deg(v) & 1) != 0; }
        int t(int a) const { return a; }
        int theta(int a) const { return n() + a; }
        std::string var_name(int v) const {
            return v < n() ? "t" + std::to_string(v) : "th" + std::to_string(v - n());
        }
        bool operator==(const Coordinates& o) const { return edeg_ == o.edeg_ && K_ == o.K_; }

    private:
        std::vector<int> edeg_, deg_;
        int K_;
    };

    using Monomial = std::vector<int>;  // exponents, canonical order t^0 .. t^{n-1} theta^0 .. theta^{n-1}
    using Poly = FormalSum<Monomial>;

    inline Monomial unit_monomial(const Coordinates& c) { return Monomial(static_cast<std::size_t>(c.vars()), 0); }

    inline Poly one(const Coordinates& c) { return Poly(unit_monomial(c)); }

    inline Poly var(const Coordinates& c, int v) {
        Monomial m = unit_monomial(c);
        m[static_cast<std::size_t>(v)] = 1;
        return Poly(m);
    }

    inline int monomial_degree(const Coordinates& c, const Monomial& m) {
        int d = 0;
        for (int v = 0; v < c.vars(); ++v) d += m[static_cast<std::size_t>(v)] * c.deg(v);
        return d;
    }
    inline int t_degree(const Coordinates& c, const Monomial& m) {
        int d = 0;
        for (int v = 0; v < c.n(); ++v) d += m[static_cast<std::size_t>(v)];
        return d;
    }
    inline int theta_degree(const Coordinates& c, const Monomial& m) {
        int d = 0;
        for (int v = c.n(); v < c.vars(); ++v) d += m[static_cast<std::size_t>(v)];
        return d;
    }

    /* Product of canonical monomials; returns 0 when an odd variable would square. */
    inline int monomial_mul(const Coordinates& c, const Monomial& a, const Monomial& b, Monomial& out) {
        out.assign(a.size(), 0);
        for (std::size_t v = 0; v < a.size(); ++v) {
            out[v] = a[v] + b[v];
            if (c.odd(static_cast<int>(v)) && out[v] > 1) return 0;
        }
        // each odd variable of b moves left past the odd variables of a that sit after it
        long long parity = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j] || !c.odd(static_cast<int>(j))) continue;
            for (std::size_t i = j + 1; i < a.size(); ++i)
                if (a[i] && c.odd(static_cast<int>(i))) parity += static_cast<long long>(a[i]) * b[j];
        }
        return parity_sign(parity);
    }

    inline Poly mul(const Coordinates& c, const Poly& f, const Poly& g) {
        Poly out;
        Monomial m;
        for (const auto& [a, ca] : f)
            for (const auto& [b, cb] : g) {
                int s = monomial_mul(c, a, b, m);
                if (s) out.add(m, ca * cb * s);
            }
        return out;
    }

    /* Left partial derivative in variable v. */
    inline Poly partial(const Coordinates& c, int v, const Poly& f) {
        Poly out;
        for (const auto& [m, cm] : f) {
            int e = m[static_cast<std::size_t>(v)];
            if (!e) continue;
            long long before = 0;
            if (c.odd(v))
                for (int i = 0; i < v; ++i)
                    if (c.odd(i)) before += m[static_cast<std::size_t>(i)];
            Monomial nm = m;
            --nm[static_cast<std::size_t>(v)];
            out.add(nm, cm * e * parity_sign(before));
        }
        return out;
    }

    /* Drops monomials of t-degree above K; reports whether anything was dropped. */
    inline Poly truncate(const Coordinates& c, const Poly& f, int K, bool* dropped = nullptr) {
        Poly out;
        for (const auto& [m, cm] : f) {
            if (t_degree(c, m) > K) {
                if (dropped) *dropped = true;
                continue;
            }
            out.add(m, cm);
        }
        return out;
    }

    inline std::string render_monomial(const Coordinates& c, const Monomial& m) {
        std::string s;
        for (int v = 0; v < c.vars(); ++v) {
            int e = m[static_cast<std::size_t>(v)];
            if (!e) continue;
            if (!s.empty()) s += "*";
            s += c.var_name(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

    inline std::string render(const Coordinates& c, const Poly& f) {
        return f.to_string([&](const Monomial& m) { return render_monomial(c, m); });
    }
}  // namespace geometry
}  // namespace nij

#endif  // NIJ_GEOMETRY_SUPERPOLY_HPP
