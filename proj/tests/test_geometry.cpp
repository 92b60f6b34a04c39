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
 // Graded polynomial fields, the odd tangent lift, Frolicher-Nijenhuis and Nijenhuis-Richardson products.


#include <gtest/gtest.h>

#include <random>

#include "nij/axiom/checks.hpp"
#include "nij/geometry/forms.hpp"

using namespace nij;
using namespace nij::geometry;

namespace {
    using Rng = std::mt19937;

    Monomial random_monomial(const Coordinates& c, Rng& rng, int max_total) {
        Monomial m = unit_monomial(c);
        int total = static_cast<int>(rng() % static_cast<unsigned>(max_total + 1));
        for (int i = 0; i < total; ++i) {
            int v = static_cast<int>(rng() % static_cast<unsigned>(c.vars()));
            if (c.odd(v) && m[static_cast<std::size_t>(v)]) continue;
            ++m[static_cast<std::size_t>(v)];
        }
        return m;
    }

    TVForm random_form(const Coordinates& c, Rng& rng, int terms, int max_total) {
        TVForm A;
        for (int i = 0; i < terms; ++i)
            A.add(static_cast<int>(rng() % static_cast<unsigned>(c.n())), Poly(random_monomial(c, rng, max_total)),
                  Scalar(static_cast<int>(rng() % 5) - 2));
        return A;
    }

    // one homogeneous piece of a random form, with its degree
    std::pair<int, TVForm> random_homogeneous(const Coordinates& c, Rng& rng, int max_total = 2) {
        for (;;) {
            auto parts = homogeneous_parts(c, random_form(c, rng, 6, max_total));
            if (parts.empty()) continue;
            auto it = parts.begin();
            std::advance(it, static_cast<long>(rng() % parts.size()));
            return *it;
        }
    }

    VectorField random_field(const Coordinates& c, Rng& rng) {
        VectorField X;
        for (int i = 0; i < 6; ++i)
            X.add(static_cast<int>(rng() % static_cast<unsigned>(c.vars())), Poly(random_monomial(c, rng, 2)),
                  Scalar(static_cast<int>(rng() % 5) - 2));
        return X;
    }

    TVForm identity_form(const Coordinates& c) {
        TVForm id;
        for (int a = 0; a < c.n(); ++a) id.add(a, var(c, c.theta(a)));
        return id;
    }

    TVForm times(const Coordinates& c, const Poly& f, const TVForm& A) {
        TVForm out;
        for (const auto& [g, p] : A.comp) out.add(g, mul(c, f, p));
        return out;
    }

    Scalar sgn(long long e) { return Scalar(parity_sign(e)); }

    const std::vector<std::vector<int>> kBases = {{0}, {0, 0}, {0, 1}, {1, -1}, {0, 0, 0}};
}  // namespace

TEST(Fields, DeRhamIsOdd) {
    for (const auto& b : kBases) {
        Coordinates c(b);
        EXPECT_TRUE(vf_commutator(c, de_rham(c), de_rham(c)).is_zero());
    }
}

TEST(Fields, CommutatorIsGradedJacobi) {
    Rng rng(3);
    Coordinates c({0, 1});
    for (int trial = 0; trial < 20; ++trial) {
        auto hx = homogeneous_parts(c, random_field(c, rng)), hy = homogeneous_parts(c, random_field(c, rng)),
             hz = homogeneous_parts(c, random_field(c, rng));
        const auto& [x, X] = *hx.begin();
        const auto& [y, Y] = *hy.begin();
        const auto& [z, Z] = *hz.begin();
        // [X,[Y,Z]] = [[X,Y],Z] + (-1)^{xy} [Y,[X,Z]]
        VectorField lhs = vf_commutator(c, X, vf_commutator(c, Y, Z));
        VectorField rhs = vf_commutator(c, vf_commutator(c, X, Y), Z) +
                          sgn(static_cast<long long>(x) * y) * vf_commutator(c, Y, vf_commutator(c, X, Z));
        EXPECT_EQ(lhs, rhs) << trial;
        (void)z;
    }
}

TEST(Fields, SplitVerticalReconstructs) {
    Rng rng(11);
    for (const auto& b : kBases) {
        Coordinates c(b);
        for (int trial = 0; trial < 15; ++trial) {
            VectorField X = random_field(c, rng);
            auto [x1, x2] = split_vertical(c, X);
            EXPECT_EQ(iota(c, x1) + psi(c, x2), X);
            // the lift of a form has no vertical remainder
            auto [y1, y2] = split_vertical(c, psi(c, x2));
            EXPECT_TRUE(y1.is_zero());
            EXPECT_EQ(y2, x2);
        }
    }
}

TEST(Forms, IdentityIsAnIdempotentWithZeroSquare) {
    for (const auto& b : kBases) {
        Coordinates c(b);
        TVForm id = identity_form(c);
        EXPECT_EQ(nr_product(c, id, id), id);
        EXPECT_TRUE(fn_bracket(c, id, id).is_zero());
    }
}

TEST(Forms, BracketIsGradedAntisymmetricAndJacobi) {
    Rng rng(5);
    for (const auto& b : kBases) {
        Coordinates c(b);
        for (int trial = 0; trial < 8; ++trial) {
            auto [da, A] = random_homogeneous(c, rng);
            auto [db, B] = random_homogeneous(c, rng);
            auto [dc, C] = random_homogeneous(c, rng, 1);
            EXPECT_EQ(fn_bracket(c, A, B), sgn(static_cast<long long>(da) * db + 1) * fn_bracket(c, B, A));
            TVForm lhs = fn_bracket(c, A, fn_bracket(c, B, C));
            TVForm rhs = fn_bracket(c, fn_bracket(c, A, B), C) +
                         sgn(static_cast<long long>(da) * db) * fn_bracket(c, B, fn_bracket(c, A, C));
            EXPECT_EQ(lhs, rhs);
            (void)dc;
        }
    }
}

TEST(Forms, BracketOfVectorFieldsIsTheCommutator) {
    Rng rng(8);
    for (const auto& b : kBases) {
        Coordinates c(b);
        for (int trial = 0; trial < 10; ++trial) {
            // 0-forms: drop every theta
            auto strip = [&](TVForm A) {
                TVForm out;
                for (const auto& [g, p] : A.comp)
                    for (const auto& [m, cm] : p)
                        if (theta_degree(c, m) == 0) out.add(g, Poly(m, cm));
                return out;
            };
            auto hx = homogeneous_parts(c, strip(random_form(c, rng, 4, 2)));
            auto hy = homogeneous_parts(c, strip(random_form(c, rng, 4, 2)));
            if (hx.empty() || hy.empty()) continue;
            const TVForm& X = hx.begin()->second;
            const TVForm& Y = hy.begin()->second;
            TVForm expect = t_part(c, vf_commutator(c, as_field(c, X), as_field(c, Y)));
            EXPECT_EQ(fn_bracket(c, X, Y), expect);
            EXPECT_EQ(lie_derivative(c, X, Y), expect);
        }
    }
    Coordinates c({0});
    EXPECT_THROW(lie_derivative(c, identity_form(c), identity_form(c)), ArityError);
}

TEST(Forms, SuspensionCircIsReversedComposition) {
    Rng rng(13);
    for (const auto& b : kBases) {
        Coordinates c(b);
        for (int trial = 0; trial < 10; ++trial) {
            auto [da, A] = random_homogeneous(c, rng);
            auto [db, B] = random_homogeneous(c, rng);
            long long a = da - 1, bb = db - 1;
            EXPECT_EQ(suspension_circ(c, A, B), sgn(a * bb + 1) * nr_product(c, B, A));
        }
    }
}

TEST(Forms, EulerFieldCommutesWithIdentity) {
    Coordinates c({0, 0, 0});
    TVForm euler;
    for (int a = 0; a < c.n(); ++a) euler.add(a, var(c, c.t(a)));
    EXPECT_TRUE(lie_derivative(c, euler, identity_form(c)).is_zero());
    EXPECT_EQ(form_arity(c, identity_form(c)), 1);
    EXPECT_THROW(form_arity(c, euler + identity_form(c)), ArityError);
}

TEST(Nijenhuis, ScalarMultiplesOfIdentity) {
    Rng rng(21);
    Coordinates c({0, 0});
    for (int trial = 0; trial < 5; ++trial) {
        Poly f;
        for (int i = 0; i < 3; ++i) {
            Monomial m = unit_monomial(c);
            m[0] = static_cast<int>(rng() % 3);
            m[1] = static_cast<int>(rng() % 3);
            f.add(m, Scalar(static_cast<int>(rng() % 5) - 2));
        }
        TVForm J = times(c, f, identity_form(c));
        EXPECT_TRUE(fn_bracket(c, J, J).is_zero());
        EXPECT_TRUE(nijenhuis_classical(c, J, coordinate_field(c, 0), coordinate_field(c, 1)).is_zero());
    }
}

TEST(Nijenhuis, TorsionIsTensorial) {
    Rng rng(34);
    Coordinates c({0, 0});
    Poly f = var(c, c.t(0));
    f.add(mul(c, var(c, c.t(1)), var(c, c.t(1))), Scalar(3));
    for (int trial = 0; trial < 10; ++trial) {
        TVForm J;
        for (int g = 0; g < 2; ++g)
            for (int b = 0; b < 2; ++b) {
                Poly e;
                e.add(unit_monomial(c), Scalar(static_cast<int>(rng() % 5) - 2));
                e.add(var(c, c.t(static_cast<int>(rng() % 2))), Scalar(static_cast<int>(rng() % 3) - 1));
                J.add(g, mul(c, e, var(c, c.theta(b))));
            }
        VectorField X = coordinate_field(c, 0), Y = coordinate_field(c, 1);
        VectorField fX;
        fX.add(c.t(0), f);
        VectorField lhs = nijenhuis_classical(c, J, fX, Y);
        VectorField rhs;
        for (const auto& [v, p] : nijenhuis_classical(c, J, X, Y).comp) rhs.add(v, mul(c, f, p));
        EXPECT_EQ(lhs, rhs);
        // and antisymmetric
        EXPECT_EQ(nijenhuis_classical(c, J, X, Y), Scalar(-1) * nijenhuis_classical(c, J, Y, X));
    }
}

TEST(Nijenhuis, SquareIsTwiceTheTorsion) {
    Rng rng(55);
    int determined = 0;
    for (int n : {2, 3}) {
        Coordinates c(std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int trial = 0; trial < 10; ++trial) {
            TVForm J;
            for (int g = 0; g < n; ++g)
                for (int b = 0; b < n; ++b) {
                    Poly e;
                    e.add(unit_monomial(c), Scalar(static_cast<int>(rng() % 3) - 1));
                    e.add(var(c, c.t(static_cast<int>(rng() % static_cast<unsigned>(n)))),
                          Scalar(static_cast<int>(rng() % 3) - 1));
                    J.add(g, mul(c, e, var(c, c.theta(b))));
                }
            auto r = fn_square_vs_classical(c, J);
            EXPECT_TRUE(r.consistent);
            if (r.c) {
                ++determined;
                EXPECT_EQ(*r.c, Scalar(2));
            }
        }
    }
    EXPECT_GT(determined, 5);
    EXPECT_THROW(fn_square_vs_classical(Coordinates({0, 1}), TVForm{}), ArityError);
}

TEST(FormAlgebra, TruncationsArePreLie2) {
    for (auto [b, W] : std::vector<std::pair<std::vector<int>, int>>{{{0}, 2}, {{1}, 2}, {{-1}, 2}, {{0, 0}, 1}, {{0, 1}, 1}}) {
        auto fa = form_algebra(Coordinates(b), W);
        EXPECT_GT(fa.structure.dim(), 0);
        auto r = axiom::check_prelie2(fa.structure);
        EXPECT_TRUE(r.ok()) << r.to_string(fa.structure, 2);
    }
}
