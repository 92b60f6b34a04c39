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
 // Seeded families of mu collections and endomorphism fields, some satisfying the equations and some not.


#ifndef NIJ_INFINITY_SAMPLES_HPP
#define NIJ_INFINITY_SAMPLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nij/infinity/dictionary.hpp"
#include "nij/infinity/mu.hpp"


namespace nij {
namespace infinity {
    using Rng = std::mt19937_64;

    inline int draw(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    /* A polynomial in one variable t^a with integer coefficients, t-degree in [lo, hi]. */
    inline Poly random_univariate(const Coordinates& c, Rng& rng, int a, int lo, int hi) {
        Poly f;
        for (int e = lo; e <= hi; ++e) {
            Poly term = geometry::one(c);
            for (int i = 0; i < e; ++i) term = geometry::mul(c, term, geometry::var(c, c.t(a)));
            f.add(term, Scalar(draw(rng, -2, 2)));
        }
        return f;
    }

    /* f(t) Id: always Nijenhuis. */
    inline TVForm scalar_identity_J(const Coordinates& c, const Poly& f) {
        TVForm J;
        for (int g = 0; g < c.n(); ++g) J.add(g, geometry::mul(c, f, geometry::var(c, c.theta(g))));
        return J;
    }

    /* A diag(f_0(t^0), ..., f_{n-1}(t^{n-1})) A^{-1} in the coordinates s = A^{-1} t, A unimodular upper triangular.
     * Nijenhuis because it is diagonal with each eigenvalue a function of its own coordinate.
     */
    inline TVForm conjugated_diagonal_J(const Coordinates& c, Rng& rng, int lo, int hi) {
        int n = c.n();
        std::vector<std::vector<Scalar>> A(n, std::vector<Scalar>(n)), Ainv(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i) {
            A[i][i] = 1;
            for (int j = i + 1; j < n; ++j) A[i][j] = draw(rng, -1, 1);
        }
        // inverse of a unit upper triangular matrix by back substitution
        for (int j = 0; j < n; ++j)
            for (int i = n - 1; i >= 0; --i) {
                Scalar x = (i == j) ? 1 : 0;
                for (int k = i + 1; k < n; ++k) x -= A[i][k] * Ainv[k][j];
                Ainv[i][j] = x;
            }
        // t^i = sum_j A_ij s^j, with s the actual coordinates
        std::vector<Poly> t_of_s(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t_of_s[i].add(geometry::var(c, c.t(j)), A[i][j]);
        std::vector<Poly> f(n);
        for (int i = 0; i < n; ++i) {
            Poly acc;
            Poly pw = geometry::one(c);
            for (int e = 0; e <= hi; ++e) {
                if (e >= lo) acc.add(pw, Scalar(draw(rng, -2, 2)));
                pw = geometry::mul(c, pw, t_of_s[i]);
            }
            f[i] = acc;
        }
        // J^g_b = sum_i Ainv_{g i} f_i A_{i b}
        TVForm J;
        for (int g = 0; g < n; ++g)
            for (int b = 0; b < n; ++b)
                for (int i = 0; i < n; ++i) {
                    Scalar w = Ainv[g][i] * A[i][b];
                    if (w != 0) J.add(g, geometry::mul(c, f[i], geometry::var(c, c.theta(b))), w);
                }
        return J;
    }

    /* Linear J from a commutative associative algebra k[x]/(x^2 - a x - b) in a random unimodular basis; associative
     * products are pre-Lie, so these are Nijenhuis.
     */
    inline TVForm prelie_linear_J(const Coordinates& c, Rng& rng) {
        axiom::AlgebraStructure s;
        s.basis = {{"e0", 0}, {"e1", 0}};
        axiom::BilinearOp circ{0, {}};
        int a = draw(rng, -2, 2), b = draw(rng, -2, 2);
        circ.add(0, 0, 0, 1);
        circ.add(0, 1, 1, 1);
        circ.add(1, 0, 1, 1);
        circ.add(1, 1, 1, a);
        circ.add(1, 1, 0, b);
        s.ops["circ"] = circ;
        int u = draw(rng, -2, 2);
        // new basis f0 = e0 + u e1, f1 = e1
        std::vector<axiom::Vec> nb{{{0, Scalar(1)}, {1, Scalar(u)}}, {{1, Scalar(1)}}};
        if (u == 0) nb[0] = {{0, Scalar(1)}};
        return linear_J_from_prelie(c, axiom::change_basis(s, nb));
    }

    inline TVForm random_linear_J(const Coordinates& c, Rng& rng) {
        TVForm J;
        for (int g = 0; g < c.n(); ++g)
            for (int a = 0; a < c.n(); ++a)
                for (int b = 0; b < c.n(); ++b)
                    J.add(g, geometry::mul(c, geometry::var(c, c.t(a)), geometry::var(c, c.theta(b))), Scalar(draw(rng, -1, 1)));
        return J;
    }

    /* Random entries: each allowed (A; B) -> e_g with matching degree is switched on with probability density. */
    inline MuCollection random_mu(const std::vector<int>& degrees, Variant v, int K, int P, Rng& rng, double density) {
        MuCollection mu(degrees, v);
        int n = static_cast<int>(degrees.size());
        std::bernoulli_distribution on(density);
        for (int k = (v == Variant::pinf ? 1 : 0); k <= K; ++k)
            for (int p = 0; p <= P; ++p) {
                if (k + p == 0) continue;
                std::vector<int> A, B;
                std::function<void(int)> ra, rb;
                rb = [&](int lo) {
                    if (static_cast<int>(B.size()) == p) {
                        std::vector<int> a = A, b = B;
                        if (mu.canonical(a, b) == 0) return;
                        for (int g = 0; g < n; ++g)
                            if (mu.output_degree(A, B) == degrees[static_cast<std::size_t>(g)] && on(rng)) {
                                int x = draw(rng, -2, 2);
                                if (x) mu.define(A, B, g, Scalar(x));
                            }
                        return;
                    }
                    for (int b = lo; b < n; ++b) { B.push_back(b); rb(b); B.pop_back(); }
                };
                ra = [&](int lo) {
                    if (static_cast<int>(A.size()) == k) { rb(0); return; }
                    for (int a = lo; a < n; ++a) { A.push_back(a); ra(a); A.pop_back(); }
                };
                ra(0);
            }
        return mu;
    }

    /* Degrees (0, d1): every entry eats e0 only and lands on e1, so no composition survives. */
    inline MuCollection triangular_mu(int d1, Variant v, int K, Rng& rng) {
        MuCollection mu({0, d1}, v);
        int p = 1 - d1;
        if (p < 0 || p > 1) return mu;
        for (int k = (v == Variant::pinf || p == 0 ? 1 : 0); k <= K; ++k) {
            int x = draw(rng, -2, 2);
            if (x) mu.define(std::vector<int>(static_cast<std::size_t>(k), 0), std::vector<int>(static_cast<std::size_t>(p), 0), 1, Scalar(x));
        }
        return mu;
    }

    /* A Nijenhuis endomorphism read as mu_{k,1} on a degree-0 space. */
    inline MuCollection mu_from_J(const Coordinates& c, const TVForm& J, Variant v) { return disassemble(c, J, v); }

    struct MuSample {
        std::string family;
        MuCollection mu;
    };

    /* The seeded mix behind the equivalence runs: dimension at most 2, both variants, K and P as given. */
    inline MuSample mu_sample(std::uint64_t seed, int K, int P) {
        Rng rng(seed);
        Variant v = (seed % 2) ? Variant::ninf : Variant::pinf;
        int lo = v == Variant::pinf ? 1 : 0;
        Coordinates c0({0, 0}, K);
        switch (seed % 10) {
            case 0: return {"zero", MuCollection({0, draw(rng, -1, 1)}, v)};
            case 1: return {"f(t) Id", mu_from_J(c0, scalar_identity_J(c0, random_univariate(c0, rng, draw(rng, 0, 1), lo, K - 1)), v)};
            case 2: return {"conjugated diagonal", mu_from_J(c0, conjugated_diagonal_J(c0, rng, lo, K - 1), v)};
            case 3: return {"pre-Lie linear", mu_from_J(c0, prelie_linear_J(c0, rng), v)};
            case 4: return {"triangular", triangular_mu(draw(rng, 0, 1), v, K, rng)};
            case 5: {
                MuSample s{"perturbed diagonal", mu_from_J(c0, conjugated_diagonal_J(c0, rng, lo, K - 1), v)};
                MuCollection extra = random_mu({0, 0}, v, 1, 1, rng, 0.3);
                for (const auto& [key, val] : extra.entries()) {
                    Vec cur = s.mu(key.first, key.second);
                    for (const auto& [g, x] : val) cur[g] += x;
                    axiom::Vec clean;
                    for (const auto& [g, x] : cur)
                        if (x != 0) clean[g] = x;
                    s.mu.set_canonical(key.first, key.second, clean);
                }
                return s;
            }
            default: {
                std::vector<int> degs{draw(rng, -1, 1), draw(rng, -1, 1)};
                if (draw(rng, 0, 2) == 0) degs.pop_back();
                return {"random", random_mu(degs, v, K, P, rng, 0.5)};
            }
        }
    }
}  // namespace infinity
}  // namespace nij

#endif  // NIJ_INFINITY_SAMPLES_HPP
