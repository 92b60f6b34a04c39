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
 // The free Lie superalgebra on W + W[-1], its derivations d and Q, and the induced products on Im Q.


#include <gtest/gtest.h>

#include "nij/axiom/checks.hpp"
#include "nij/freelie/example.hpp"
#include "nij/freelie/free_lie.hpp"

using namespace nij;
using namespace nij::freelie;

namespace {
    std::shared_ptr<const Context> three(int d1, int d2, int d3, int W = 3) {
        return std::make_shared<const Context>(std::vector<std::pair<std::string, int>>{{"w1", d1}, {"w2", d2}, {"w3", d3}}, W);
    }
}

class Coefficients : public ::testing::TestWithParam<int> {};

TEST_P(Coefficients, DisplayedValuesHoldForEveryParity) {
    int mask = GetParam();
    int d1 = mask & 1, d2 = (mask >> 1) & 1, d3 = (mask >> 2) & 1;
    auto ctx = three(d1, d2, d3);
    auto g = [&](int l) { return Element::generator(ctx, l); };
    Element w1 = g(0), w2 = g(2), w3 = g(4), P1 = g(1), P2 = g(3);
    EXPECT_EQ(induced_circ(w1, w2), Scalar(1, 2) * bracket(w1, w2));
    EXPECT_EQ(induced_bullet(w1, w2), Scalar(1, 2) * bracket(w1, P2) - Scalar(parity_sign(d1), 2) * bracket(P1, w2));
    EXPECT_EQ(induced_circ(w1, induced_circ(w2, w3)), Scalar(1, 6) * bracket(w1, bracket(w2, w3)));
    EXPECT_EQ(induced_circ(induced_circ(w1, w2), w3), Scalar(1, 3) * bracket(bracket(w1, w2), w3));
}

INSTANTIATE_TEST_SUITE_P(Parities, Coefficients, ::testing::Range(0, 8));

TEST(Bracket, GradedAntisymmetryAndJacobiOnGenerators) {
    auto ctx = three(0, 1, 1, 3);
    std::vector<Element> g;
    for (int l = 0; l < ctx->letter_count(); ++l) g.push_back(Element::generator(ctx, l));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int da = ctx->degree(a), db = ctx->degree(b);
            ASSERT_EQ(bracket(g[a], g[b]), Scalar(-parity_sign(da * db)) * bracket(g[b], g[a]));
            for (int c = 0; c < 6; ++c) {
                Element lhs = bracket(g[a], bracket(g[b], g[c]));
                Element rhs = bracket(bracket(g[a], g[b]), g[c]) + Scalar(parity_sign(da * db)) * bracket(g[b], bracket(g[a], g[c]));
                ASSERT_EQ(lhs, rhs);
            }
        }
}

TEST(Bracket, TruncationIsFlagged) {
    auto ctx = three(0, 0, 0, 2);
    Element x = bracket(Element::generator(ctx, 0), Element::generator(ctx, 2));
    EXPECT_FALSE(x.truncated());
    Element y = bracket(x, Element::generator(ctx, 4));
    EXPECT_TRUE(y.truncated());
    EXPECT_TRUE(y.is_zero());
}

TEST(Homotopy, DQPlusQDIsIdentityOnTheLieBasis) {
    auto ctx = std::make_shared<const Context>(std::vector<std::pair<std::string, int>>{{"a", 0}, {"b", 1}}, 4);
    for (int w = 1; w <= 4; ++w)
        for (const auto& lw : lie_basis(ctx, w)) {
            Element x = expand(ctx, lw);
            ASSERT_EQ(apply_d(apply_Q(x)) + apply_Q(apply_d(x)), x);
            ASSERT_TRUE(apply_d(apply_d(x)).is_zero());
            ASSERT_TRUE(apply_Q(apply_Q(x)).is_zero());
        }
}

// independent oracle: the span of all left-normed brackets of letters
static std::size_t spanned_dimension(const std::shared_ptr<const Context>& ctx, int w) {
    LyndonCoordinates lc(ctx, w);
    Echelon e;
    std::vector<int> word(static_cast<std::size_t>(w), 0);
    int L = ctx->letter_count();
    while (true) {
        Element x = Element::generator(ctx, word[0]);
        for (int i = 1; i < w; ++i) x = bracket(Element::generator(ctx, word[static_cast<std::size_t>(i)]), x);
        e.insert(lc.to_sparse(x));
        int i = w - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == L - 1) word[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    return e.rank();
}

TEST(LyndonBasis, IndependentAndSpanning) {
    for (auto bases : std::vector<std::vector<std::pair<std::string, int>>>{{{"a", 0}}, {{"a", 1}}, {{"a", 0}, {"b", 1}}}) {
        auto ctx = std::make_shared<const Context>(bases, 4);
        for (int w = 1; w <= 4; ++w) {
            LyndonCoordinates lc(ctx, w);
            EXPECT_EQ(lc.rank(), lc.basis().size()) << "weight " << w;
            EXPECT_EQ(lc.rank(), spanned_dimension(ctx, w)) << "weight " << w;
        }
    }
}

TEST(LyndonBasis, LyndonWordCountsFollowNecklaceFormula) {
    // (1/n) sum_{d | n} mobius(d) k^{n/d}
    EXPECT_EQ(lyndon_words(2, 1).size(), 2u);
    EXPECT_EQ(lyndon_words(2, 4).size(), 3u);
    EXPECT_EQ(lyndon_words(3, 3).size(), 8u);
    EXPECT_EQ(lyndon_words(4, 4).size(), 60u);
    EXPECT_TRUE(is_lyndon({0, 0, 1}));
    EXPECT_FALSE(is_lyndon({0, 1, 0}));
}

TEST(ImageOfQ, DimensionsAndCertification) {
    EXPECT_EQ(image_of_Q({{"w", 0}}, 3).structure.dim(), 3);
    EXPECT_EQ(image_of_Q({{"w", 0}, {"v", 1}}, 3).structure.dim(), 16);
    EXPECT_EQ(image_of_Q({{"w", 0}, {"v", 1}}, 2).structure.dim(), 6);
    for (auto bases : std::vector<std::vector<std::pair<std::string, int>>>{{{"w", 0}, {"v", 1}}, {{"w", 1}, {"v", 1}}}) {
        auto iq = image_of_Q(bases, 3);
        axiom::validate(iq.structure);
        EXPECT_TRUE(axiom::check_prelie2(iq.structure).ok());
        for (const auto& b : iq.basis) EXPECT_TRUE(in_image_of_Q(b));
    }
}

TEST(ImageOfQ, ProjectorGuardsTheProducts) {
    auto ctx = three(0, 0, 0);
    Element P1 = Element::generator(ctx, 1);
    Element w1 = Element::generator(ctx, 0);
    EXPECT_THROW(induced_circ(P1, w1), DomainError);
    EXPECT_THROW(induced_bullet(w1, P1), DomainError);
}

TEST(Context, MixingContextsIsAnError) {
    auto a = three(0, 0, 0), b = three(0, 0, 0);
    EXPECT_THROW(bracket(Element::generator(a, 0), Element::generator(b, 0)), ContextError);
    EXPECT_THROW(Context({{"w", 0}}, 0), DomainError);
}
