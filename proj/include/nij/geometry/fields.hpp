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
 // Vector fields on the odd tangent lift, their supercommutator, the de Rham field and vertical splittings.


#ifndef NIJ_GEOMETRY_FIELDS_HPP
#define NIJ_GEOMETRY_FIELDS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "nij/geometry/superpoly.hpp"


namespace nij {
namespace geometry {
    /* X = sum_v X^v d/dx^v with coefficients on the left. */
    struct VectorField {
        std::map<int, Poly> comp;

        const Poly& at(int v) const {
            static const Poly zero;
            auto it = comp.find(v);
            return it == comp.end() ? zero : it->second;
        }
        void add(int v, const Poly& p, const Scalar& s = Scalar(1)) {
            Poly& slot = comp[v];
            slot.add(p, s);
            if (slot.empty()) comp.erase(v);
        }
        bool is_zero() const { return comp.empty(); }
        bool operator==(const VectorField& o) const { return comp == o.comp; }
    };

    inline VectorField operator+(VectorField a, const VectorField& b) {
        for (const auto& [v, p] : b.comp) a.add(v, p);
        return a;
    }
    inline VectorField operator-(VectorField a, const VectorField& b) {
        for (const auto& [v, p] : b.comp) a.add(v, p, Scalar(-1));
        return a;
    }
    inline VectorField operator*(const Scalar& s, const VectorField& a) {
        VectorField out;
        for (const auto& [v, p] : a.comp) out.add(v, p, s);
        return out;
    }

    /* Tangent-vector-valued forms: components on d/dt^gamma with coefficients in t and theta. */
    struct TVForm {
        std::map<int, Poly> comp;

        const Poly& at(int g) const {
            static const Poly zero;
            auto it = comp.find(g);
            return it == comp.end() ? zero : it->second;
        }
        void add(int g, const Poly& p, const Scalar& s = Scalar(1)) {
            Poly& slot = comp[g];
            slot.add(p, s);
            if (slot.empty()) comp.erase(g);
        }
        bool is_zero() const { return comp.empty(); }
        bool operator==(const TVForm& o) const { return comp == o.comp; }
    };

    inline TVForm operator+(TVForm a, const TVForm& b) {
        for (const auto& [v, p] : b.comp) a.add(v, p);
        return a;
    }
    inline TVForm operator-(TVForm a, const TVForm& b) {
        for (const auto& [v, p] : b.comp) a.add(v, p, Scalar(-1));
        return a;
    }
    inline TVForm operator*(const Scalar& s, const TVForm& a) {
        TVForm out;
        for (const auto& [v, p] : a.comp) out.add(v, p, s);
        return out;
    }

    inline Poly apply(const Coordinates& c, const VectorField& X, const Poly& f) {
        Poly out;
        for (const auto& [v, p] : X.comp) out += mul(c, p, partial(c, v, f));
        return out;
    }

    /* Homogeneous pieces keyed by degree; a term p d/dx^v has degree |p| - |x^v|. */
    inline std::map<int, VectorField> homogeneous_parts(const Coordinates& c, const VectorField& X) {
        std::map<int, VectorField> out;
        for (const auto& [v, p] : X.comp)
            for (const auto& [m, cm] : p) out[monomial_degree(c, m) - c.deg(v)].add(v, Poly(m, cm));
        return out;
    }

    inline std::map<int, TVForm> homogeneous_parts(const Coordinates& c, const TVForm& A) {
        std::map<int, TVForm> out;
        for (const auto& [g, p] : A.comp)
            for (const auto& [m, cm] : p) out[monomial_degree(c, m) - c.deg(g)].add(g, Poly(m, cm));
        return out;
    }

    /* [X, Y] = XY - (-1)^{|X||Y|} YX, split into homogeneous parts first. */
    inline VectorField vf_commutator(const Coordinates& c, const VectorField& X, const VectorField& Y) {
        VectorField out;
        auto xs = homogeneous_parts(c, X), ys = homogeneous_parts(c, Y);
        for (const auto& [dx, Xd] : xs)
            for (const auto& [dy, Yd] : ys) {
                Scalar s = parity_sign(static_cast<long long>(dx) * dy);
                std::set<int> keys;
                for (const auto& kv : Xd.comp) keys.insert(kv.first);
                for (const auto& kv : Yd.comp) keys.insert(kv.first);
                for (int w : keys) {
                    Poly p = apply(c, Xd, Yd.at(w));
                    p.add(apply(c, Yd, Xd.at(w)), -s);
                    out.add(w, p);
                }
            }
        return out;
    }

    /* d = sum theta^a d/dt^a */
    inline VectorField de_rham(const Coordinates& c) {
        VectorField d;
        for (int a = 0; a < c.n(); ++a) d.add(c.t(a), var(c, c.theta(a)));
        return d;
    }

    /* A = sum A^g d/dt^g  |->  sum A^g d/dtheta^g */
    inline VectorField iota(const Coordinates& c, const TVForm& A) {
        VectorField out;
        for (const auto& [g, p] : A.comp) out.add(c.theta(g), p);
        return out;
    }

    inline VectorField as_field(const Coordinates& c, const TVForm& A) {
        VectorField out;
        for (const auto& [g, p] : A.comp) out.add(c.t(g), p);
        return out;
    }

    inline TVForm t_part(const Coordinates& c, const VectorField& X) {
        TVForm out;
        for (const auto& [v, p] : X.comp)
            if (v < c.n()) out.add(v, p);
        return out;
    }

    inline bool is_vertical(const Coordinates& c, const VectorField& X) {
        for (const auto& kv : X.comp)
            if (kv.first < c.n()) return false;
        return true;
    }

    inline VectorField psi(const Coordinates& c, const TVForm& A) { return vf_commutator(c, de_rham(c), iota(c, A)); }

    /* X = i(X1) + [d, i(X2)] with X2^b = (-1)^{|X|} X(t^b) on each homogeneous part. */
    inline std::pair<TVForm, TVForm> split_vertical(const Coordinates& c, const VectorField& X) {
        TVForm x1, x2;
        for (const auto& [deg, Xd] : homogeneous_parts(c, X)) {
            TVForm part;
            for (int b = 0; b < c.n(); ++b) part.add(b, Xd.at(c.t(b)), Scalar(parity_sign(deg)));
            x2 = x2 + part;
        }
        VectorField rest = X - psi(c, x2);
        if (!is_vertical(c, rest)) throw std::logic_error("vertical remainder has a horizontal component");
        for (const auto& [v, p] : rest.comp) x1.add(v - c.n(), p);
        return {x1, x2};
    }

    inline bool truncate_field(const Coordinates& c, VectorField& X, int K) {
        bool dropped = false;
        VectorField out;
        for (const auto& [v, p] : X.comp) out.add(v, truncate(c, p, K, &dropped));
        X = out;
        return dropped;
    }

    inline std::string render(const Coordinates& c, const VectorField& X) {
        if (X.is_zero()) return "0";
        std::string s;
        for (const auto& [v, p] : X.comp) s += (s.empty() ? "" : " + ") + ("(" + render(c, p) + ")*d/d" + c.var_name(v));
        return s;
    }

    inline std::string render(const Coordinates& c, const TVForm& A) {
        if (A.is_zero()) return "0";
        std::string s;
        for (const auto& [g, p] : A.comp) s += (s.empty() ? "" : " + ") + ("(" + render(c, p) + ")*d/d" + c.var_name(g));
        return s;
    }
}  // namespace geometry
}  // namespace nij

#endif  // NIJ_GEOMETRY_FIELDS_HPP
