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
 // Infinity structures as forms: assembly, the three Maurer-Cartan readings and the linear dictionary.


#include <gtest/gtest.h>

#include "nij/axiom/checks.hpp"
#include "nij/infinity/dictionary.hpp"
#include "nij/infinity/maurer_cartan.hpp"
#include "nij/infinity/samples.hpp"

using namespace nij;
using namespace nij::infinity;
using geometry::Coordinates;
using geometry::TVForm;

namespace {
    // the p = 0 exponent written as a double sum: sum_i d_i + sum_{j <= i} d_i d_j
    long long epsilon_k_oracle(const std::vector<int>& d, const std::vector<int>& A) {
        long long e = 0;
        for (std::size_t i = 0; i < A.size(); ++i) {
            e += d[static_cast<std::size_t>(A[i])];
            for (std::size_t j = 0; j <= i; ++j) e += static_cast<long long>(d[static_cast<std::size_t>(A[i])]) * d[static_cast<std::size_t>(A[j])];
        }
        return e;
    }
}  // namespace

TEST(Mu, EpsilonParities) {
    std::vector<int> d{0, 1, -1, 2};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::vector<int> A{a, b};
            EXPECT_EQ(epsilon(d, A, {}) & 1, epsilon_k_oracle(d, A) & 1);
        }
    // everything even: no sign at all
    EXPECT_EQ(epsilon({0, 0}, {0, 1}, {1}) & 1, 0);
    // an even beta followed by an odd one costs (0 + 1) * 1
    EXPECT_EQ(epsilon({1, 0}, {}, {1, 0}) & 1, 1);
    EXPECT_EQ(epsilon({1, 0}, {}, {0, 1}) & 1, 0);
    EXPECT_EQ(epsilon({0, 0}, {}, {1, 0}) & 1, 0);
}

TEST(Mu, SingleEntryOnALine) {
    MuCollection mu({0}, Variant::pinf);
    mu.define({0}, {0}, 0, 1);
    auto pr = assemble(mu);
    EXPECT_TRUE(pr.field.is_zero());
    geometry::Monomial m = geometry::unit_monomial(pr.coords);
    m[static_cast<std::size_t>(pr.coords.t(0))] = 1;
    m[static_cast<std::size_t>(pr.coords.theta(0))] = 1;
    EXPECT_EQ(pr.gamma.at(0).coeff(m), Scalar(1));
    EXPECT_EQ(pr.gamma.at(0).size(), 1u);
}

TEST(Mu, SlotSymmetryAndDegreeAreEnforced) {
    // degrees chosen so that every entry below has a target of the right degree
    MuCollection mu({0, 1, 3, -1, 2}, Variant::pinf);
    EXPECT_THROW(mu.define({}, {0}, 0, 1), DegreeError);          // no k = 0 here
    EXPECT_THROW(mu.define({0}, {}, 0, 1), DegreeError);          // wrong output degree
    EXPECT_THROW(mu.define({1, 1}, {}, 2, 1), SymmetryError);     // repeated odd symmetric input
    EXPECT_THROW(mu.define({0}, {0, 0}, 3, 1), SymmetryError);    // repeated even antisymmetric input
    EXPECT_THROW(mu.define({0}, {}, 9, 1), std::out_of_range);
    mu.define({0, 1}, {}, 4, 3);
    EXPECT_NO_THROW(mu.define({1, 0}, {}, 4, 3));                 // graded symmetric partner
    EXPECT_THROW(mu.define({1, 0}, {}, 4, 4), SymmetryError);
    EXPECT_EQ(mu({1, 0}, {}).at(4), Scalar(3));
    MuCollection ninf({0}, Variant::ninf);
    EXPECT_THROW(ninf.define({}, {}, 0, 1), DegreeError);
    EXPECT_NO_THROW(ninf.define({}, {0}, 0, 1));
}

TEST(Mu, DegreeZeroLeavesOnlyTheOneFormBlock) {
    MuCollection mu({0, 0}, Variant::ninf);
    EXPECT_THROW(mu.define({0}, {}, 1, 1), DegreeError);
    EXPECT_THROW(mu.define({0}, {0, 1}, 1, 1), DegreeError);
    EXPECT_NO_THROW(mu.define({0, 1}, {1}, 0, 1));
}

TEST(Mu, AssembleDisassembleRoundtrip) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto s = mu_sample(seed, 2, 2);
        auto pr = assemble(s.mu);
        MuCollection back = disassemble(pr.coords, pr.total(), s.mu.variant());
        EXPECT_EQ(back.entries(), s.mu.entries()) << seed << " " << s.family;
    }
}

TEST(MaurerCartan, ZeroPairPasses) {
    MuCollection mu({0, 1}, Variant::ninf);
    auto pr = assemble(mu, 2, 2);
    EXPECT_TRUE(check_maurer_cartan(pr).ok);
    EXPECT_TRUE(quadratic_relations_check(mu, 2, 2).ok);
    EXPECT_TRUE(check_theorem_521(pr).ok);
    EXPECT_TRUE(is_minimal(pr));
    EXPECT_FALSE(is_linear_contractible(pr));
    EXPECT_TRUE(is_linear_contractible(pr.coords, ambient_total(pr)));
}

TEST(MaurerCartan, ThreeReadingsAgreeOnSamples) {
    int passing = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto s = mu_sample(seed, 2, 1);
        auto pr = assemble(s.mu);
        bool a = check_maurer_cartan(pr).ok;
        bool b = quadratic_relations_check(s.mu, pr.K, pr.P).ok;
        bool c = check_theorem_521(pr).ok;
        EXPECT_EQ(a, b) << seed << " " << s.family;
        EXPECT_EQ(a, c) << seed << " " << s.family;
        passing += a;
    }
    EXPECT_GT(passing, 5);
    EXPECT_LT(passing, 40);
}

TEST(MaurerCartan, BrokenEntryIsCaught) {
    // mu_{1,1} = Id plus mu_{0,2}: the composite e0 o (e0 . e0) survives
    MuCollection mu({0}, Variant::ninf);
    mu.define({0}, {0}, 0, 1);
    MuCollection v({0, 1}, Variant::pinf);
    v.define({0, 0}, {}, 1, 1);
    v.define({0}, {1}, 1, 1);
    auto pr = assemble(v);
    auto r = check_maurer_cartan(pr);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(quadratic_relations_check(v, pr.K, pr.P).ok);
    EXPECT_FALSE(check_theorem_521(pr).ok);
    EXPECT_NE(r.to_string().find("FAIL"), std::string::npos);
}

TEST(MaurerCartan, LoneOneFormIsMcExactlyWhenNijenhuis) {
    Rng rng(404);
    int nij = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Coordinates c({0, 0}, 3);
        TVForm J = trial % 3 == 0 ? prelie_linear_J(c, rng) : random_linear_J(c, rng);
        bool nijenhuis = geometry::fn_bracket(c, J, J).is_zero();
        auto mu = mu_from_J(c, J, Variant::pinf);
        bool mc = check_maurer_cartan(assemble(mu)).ok;
        EXPECT_EQ(mc, nijenhuis) << trial;
        nij += nijenhuis;
    }
    EXPECT_GE(nij, 10);
}

TEST(Dictionary, LinearJIsNijenhuisIffPreLie) {
    Rng rng(7);
    int prelie = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Coordinates c({0, 0});
        TVForm J = trial % 2 ? prelie_linear_J(c, rng) : random_linear_J(c, rng);
        auto s = prelie_from_linear_J(c, J);
        bool a = axiom::check_prelie(s).ok();
        bool b = geometry::fn_bracket(c, J, J).is_zero();
        EXPECT_EQ(a, b) << trial;
        EXPECT_EQ(linear_J_from_prelie(c, s), J);
        prelie += a;
    }
    EXPECT_GE(prelie, 30);
}

TEST(Dictionary, DomainIsChecked) {
    Coordinates odd({0, 1});
    EXPECT_THROW(prelie_from_linear_J(odd, TVForm{}), DomainError);
    Coordinates c({0});
    TVForm quad;
    quad.add(0, geometry::mul(c, geometry::var(c, c.t(0)), geometry::var(c, c.t(0))));
    EXPECT_THROW(prelie_from_linear_J(c, quad), DomainError);
}

TEST(Minimality, LinearPartsAreDetected) {
    MuCollection mu({0}, Variant::ninf);
    mu.define({}, {0}, 0, 1);  // a constant 1-form: the lift is linear
    auto pr = assemble(mu);
    EXPECT_FALSE(is_minimal(pr));
    MuCollection q({0}, Variant::pinf);
    q.define({0, 0}, {0}, 0, 1);
    EXPECT_TRUE(is_minimal(assemble(q)));
}
