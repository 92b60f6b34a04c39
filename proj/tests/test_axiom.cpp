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
 // Structure-constant algebras: validation, identity checkers, the suspension dg Lie algebra, splitting changes,
 // the Chevalley-Eilenberg bicomplex, homology and dual algebras of dgcas.


#include <gtest/gtest.h>

#include <random>

#include "nij/axiom/ce.hpp"
#include "nij/axiom/checks.hpp"
#include "nij/axiom/dgla.hpp"
#include "nij/axiom/dual.hpp"
#include "nij/freelie/example.hpp"

using namespace nij;
using namespace nij::axiom;

namespace {
    AlgebraStructure broken_pair() {
        AlgebraStructure s;
        s.basis = {{"e0", 0}, {"e1", 1}};
        BilinearOp circ{0, {}}, bullet{1, {}};
        circ.add(0, 0, 0, 1);
        bullet.add(0, 0, 1, 1);
        s.ops["circ"] = circ;
        s.ops["bullet"] = bullet;
        return s;
    }

    /* Random circ and bullet on a small graded basis; sparse so that a fair share satisfies the identities. */
    AlgebraStructure random_structure(std::mt19937& rng, double density) {
        AlgebraStructure s;
        int n = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < n; ++i) s.basis.push_back({"e" + std::to_string(i), static_cast<int>(rng() % 3) - 1});
        std::uniform_real_distribution<double> u(0, 1);
        BilinearOp circ{0, {}}, bullet{1, {}};
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int g = 0; g < n; ++g) {
                    if (s.deg(g) == s.deg(a) + s.deg(b) && u(rng) < density) circ.add(a, b, g, static_cast<int>(rng() % 3) - 1);
                    if (b < a || s.deg(g) != s.deg(a) + s.deg(b) + 1 || u(rng) >= density) continue;
                    long long e = static_cast<long long>(s.deg(a)) * s.deg(b) + s.deg(a) + s.deg(b);
                    if (a == b && (e & 1)) continue;
                    int c = static_cast<int>(rng() % 3) - 1;
                    bullet.add(a, b, g, c);
                    if (a != b) bullet.add(b, a, g, c * parity_sign(e));
                }
        s.ops["circ"] = circ;
        s.ops["bullet"] = bullet;
        return s;
    }

    DgcaStructure one_variable_dgca() {
        AlgebraStructure a;
        a.basis = {{"1", 0}, {"x", 0}, {"dx", 1}};
        BilinearOp dot{0, {}};
        for (int i = 0; i < 3; ++i) {
            dot.add(0, i, i, 1);
            if (i) dot.add(i, 0, i, 1);
        }
        a.ops["dot"] = dot;
        a.differential[1][2] = 1;
        a.has_differential = true;
        return {a};
    }

    // Lambda(x, dx)/(x^3, x^2 dx): basis 1, x, x^2, dx, x dx
    DgcaStructure cubic_dgca() {
        AlgebraStructure a;
        a.basis = {{"1", 0}, {"x", 0}, {"x2", 0}, {"dx", 1}, {"xdx", 1}};
        BilinearOp dot{0, {}};
        for (int i = 0; i < 5; ++i) {
            dot.add(0, i, i, 1);
            if (i) dot.add(i, 0, i, 1);
        }
        dot.add(1, 1, 2, 1);
        dot.add(1, 3, 4, 1);
        dot.add(3, 1, 4, 1);
        a.ops["dot"] = dot;
        a.differential[1][3] = 1;
        a.differential[2][4] = 2;
        a.has_differential = true;
        return {a};
    }

    std::map<int, Vec> random_f(const AlgebraStructure& s, std::mt19937& rng) {
        std::map<int, Vec> f;
        for (int a = 0; a < s.dim(); ++a)
            for (int b = 0; b < s.dim(); ++b)
                if (s.deg(b) == s.deg(a) - 1 && rng() % 3 == 0) {
                    int x = static_cast<int>(rng() % 5) - 2;
                    if (x) f[a][b] = x;
                }
        return f;
    }
}  // namespace

TEST(Validate, RejectsWrongDegreesAndSymmetry) {
    AlgebraStructure s;
    s.basis = {{"a", 0}, {"b", 0}, {"c", 1}};
    s.ops["bullet"] = BilinearOp{1, {}};
    s.ops["bullet"].add(0, 1, 2, 1);
    EXPECT_THROW(validate(s), StructureError);  // the (b, a) half is missing
    s.ops["bullet"].add(1, 0, 2, 1);
    EXPECT_NO_THROW(validate(s));
    s.ops["circ"] = BilinearOp{0, {}};
    s.ops["circ"].add(0, 0, 2, 1);
    EXPECT_THROW(validate(s), StructureError);  // wrong output degree
    AlgebraStructure t;
    t.basis = {{"a", 1}, {"b", 1}, {"c", 1}};
    t.ops["star"] = BilinearOp{-1, {}};
    t.ops["star"].add(0, 1, 2, 1);
    t.ops["star"].add(1, 0, 2, 1);
    // degree 1 + 1 - 1 = 1 and odd inputs: star must satisfy ab = -(-1)^{1+1+1} ba = ba, so this passes
    EXPECT_NO_THROW(validate(t));
    t.ops["star"].add(1, 0, 2, -2);
    EXPECT_THROW(validate(t), StructureError);
}

TEST(PreLie2, ImageOfQPassesAndPerturbationFails) {
    auto iq = freelie::image_of_Q({{"w", 0}, {"v", 1}}, 3);
    AlgebraStructure s = iq.structure;
    EXPECT_TRUE(check_prelie2(s).ok());
    auto& t = s.ops["circ"].table;
    t.begin()->second.begin()->second += 1;
    auto r = check_prelie2(s);
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.to_string(s, 1).find("at ("), std::string::npos);
}

TEST(PreLie2, AgreesWithJacobiOfTheSuspension) {
    std::mt19937 rng(2024);
    int passing = 0;
    for (int trial = 0; trial < 600; ++trial) {
        AlgebraStructure s = random_structure(rng, trial % 3 == 0 ? 0.15 : 0.35);
        bool a = check_prelie2(s).ok();
        bool b = check_dg_lie(suspend_to_dgla(s)).ok();
        ASSERT_EQ(a, b) << "trial " << trial;
        passing += a;
    }
    EXPECT_GT(passing, 20);
    EXPECT_LT(passing, 580);
}

TEST(Suspension, IsADgLieAlgebraForNAlgebras) {
    auto s = freelie::image_of_Q({{"w", 1}, {"v", 0}}, 3).structure;
    auto g = suspend_to_dgla(s);
    EXPECT_EQ(g.dim(), 2 * s.dim());
    EXPECT_TRUE(check_dg_lie(g).ok());
    EXPECT_FALSE(check_dg_lie(suspend_to_dgla(broken_pair())).ok());
}

TEST(Splitting, ChangePreservesTheIdentitiesAndComposes) {
    auto s = freelie::image_of_Q({{"w", 0}, {"v", 1}}, 3).structure;
    std::mt19937 rng(9);
    for (int trial = 0; trial < 3; ++trial) {
        auto f = random_f(s, rng), g = random_f(s, rng);
        AlgebraStructure t = susy_transform(s, f);
        EXPECT_TRUE(check_N_algebra(t).ok());
        EXPECT_EQ(t.op("bullet").table, s.op("bullet").table);
        std::map<int, Vec> fg = f;
        for (const auto& [a, v] : g)
            for (const auto& [b, c] : v) {
                fg[a][b] += c;
                if (fg[a][b] == 0) fg[a].erase(b);
            }
        EXPECT_TRUE(same_structure(susy_transform(t, g), susy_transform(s, fg)));
    }
    EXPECT_TRUE(same_structure(susy_transform(s, {}), s));
    EXPECT_THROW(susy_transform(broken_pair(), {}), PreconditionError);
}

TEST(CeBicomplex, ResidueVanishesOnImageOfQ) {
    for (auto bases : std::vector<std::vector<std::pair<std::string, int>>>{{{"w", 0}}, {{"w", 0}, {"v", 1}}}) {
        auto rep = ce_bicomplex(freelie::image_of_Q(bases, 3).structure, 3);
        EXPECT_TRUE(rep.ok());
        EXPECT_EQ(rep.residue_terms, 0u);
    }
}

TEST(CeBicomplex, BrokenCompatibilityLeavesAResidue) {
    auto rep = ce_bicomplex(broken_pair(), 3);
    EXPECT_TRUE(rep.circ_squares_to_zero);
    EXPECT_TRUE(rep.bullet_squares_to_zero);
    EXPECT_FALSE(rep.anticommute);
    EXPECT_EQ(rep.residue_terms, 1u);
}

TEST(Homology, FirstGroupCountsGenerators) {
    for (int W : {2, 3}) {
        auto one = operadic_homology(freelie::image_of_Q({{"w", 0}}, W).structure, 3);
        EXPECT_TRUE(one.ok());
        EXPECT_EQ(one.homology.at(0), 0);
        EXPECT_EQ(one.homology.at(1), 1);
    }
    auto two = operadic_homology(freelie::image_of_Q({{"w", 0}, {"v", 1}}, 2).structure, 2);
    EXPECT_EQ(two.homology.at(1), 2);
}

TEST(Dgca, CheckerCatchesBrokenLeibniz) {
    auto g = one_variable_dgca();
    EXPECT_TRUE(check_dgca(g).ok());
    g.a.differential[1][2] = 1;
    g.a.ops["dot"].add(1, 1, 1, 1);  // x x = x is incompatible with d x = dx
    EXPECT_FALSE(check_dgca(g).ok());
    EXPECT_THROW(dual_from_dgca(g), PreconditionError);
}

TEST(Dual, OneVariableDgcasSatisfyBothRelationSets) {
    for (const auto& g : {one_variable_dgca(), cubic_dgca()}) {
        ASSERT_TRUE(check_dgca(g).ok());
        AlgebraStructure s = dual_from_dgca(g);
        EXPECT_EQ(s.dim(), g.a.dim());
        for (int i = 0; i < s.dim(); ++i) EXPECT_EQ(s.deg(i), g.a.deg(i) + 1);
        EXPECT_TRUE(check_dual_algebra(s, DualVariant::pre_lie2_dual).ok());
        EXPECT_TRUE(check_dual_algebra(s, DualVariant::nijenhuis_dual).ok());
    }
}

TEST(Dual, RelationsDetectAPerturbedProduct) {
    AlgebraStructure s = dual_from_dgca(cubic_dgca());
    s.ops["circ"].add(1, 1, 2, 1);
    EXPECT_FALSE(check_dual_algebra(s, DualVariant::pre_lie2_dual).ok());
}
