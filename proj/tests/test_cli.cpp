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
 // Input loading, error locations, suite dispatch and report determinism.


#include <gtest/gtest.h>

#include "nij/cli/input.hpp"
#include "nij/cli/report.hpp"
#include "nij/cli/suites.hpp"

using namespace nij;
using namespace nij::cli;

namespace {
    std::string sample(const std::string& name) { return std::string(NIJ_SAMPLES_DIR) + "/" + name; }

    SuiteConfig config(const std::string& suite) {
        SuiteConfig cfg;
        cfg.suite = suite;
        return cfg;
    }
}  // namespace

TEST(Input, ParseErrorCarriesLineAndColumn) {
    try {
        parse_input_text("{\n  \"basis\": [\n    {\"name\": \"a\" \"degree\": 0}\n  ]\n}\n");
        FAIL() << "no exception";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 3);
        // somewhere inside the unexpected "degree" token (columns 18 to 25)
        EXPECT_GE(e.column, 18);
        EXPECT_LE(e.column, 26);
    }
    EXPECT_THROW(parse_input_text("[1, 2]"), ParseError);
    EXPECT_THROW(parse_input(sample("malformed.json")), ParseError);
    EXPECT_THROW(parse_input(sample("no_such_file.json")), IoError);
}

TEST(Input, ValidationErrorsPointAtTheKey) {
    try {
        parse_input(sample("bullet_not_symmetric.json"));
        FAIL() << "no exception";
    } catch (const ValidationError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("line 3,", 0), 0u) << e.what();
    }
    EXPECT_THROW(parse_input_text(R"({"basis": [{"name": "a", "degree": 0}, {"name": "a", "degree": 1}]})"), ValidationError);
    EXPECT_THROW(parse_input_text(R"({"basis": [{"name": "a", "degree": 0}], "variant": "xinf"})"), ValidationError);
    EXPECT_THROW(parse_input_text(R"({"basis": [{"name": "a", "degree": 0}],
        "ops": {"circ": [{"inputs": ["a", "b"], "output": "a"}]}})"), ValidationError);
    EXPECT_THROW(parse_input_text(R"({"basis": [{"name": "a", "degree": 0}],
        "mu": {"1,1": [{"inputs": ["a"], "output": "a"}]}})"), ValidationError);
    // degree-0 line: mu_{1,0} would land in degree 1
    EXPECT_THROW(parse_input_text(R"({"basis": [{"name": "a", "degree": 0}],
        "mu": {"1,0": [{"inputs": ["a"], "output": "a"}]}})"), ValidationError);
}

TEST(Input, SamplesLoad) {
    auto a = parse_input(sample("prelie2_imq_one_generator.json"));
    EXPECT_GT(a.algebra.dim(), 0);
    EXPECT_TRUE(axiom::check_prelie2(a.algebra).ok());
    auto m = parse_input(sample("mu_nijenhuis_linear.json"));
    ASSERT_TRUE(m.mu.has_value());
    EXPECT_FALSE(m.mu->empty());
    auto j = parse_input(sample("J_linear.json"));
    ASSERT_TRUE(j.J.has_value());
    auto d = parse_input(sample("dgca_one_variable.json"));
    EXPECT_TRUE(axiom::check_dgca(as_dgca(d)).ok());
}

TEST(Input, RationalCoefficients) {
    auto in = parse_input_text(R"({"basis": [{"name": "a", "degree": 0}],
        "ops": {"circ": [{"inputs": ["a", "a"], "output": "a", "coeff": "-3/6"}]}})");
    EXPECT_EQ(in.algebra.mul("circ", 0, 0).at(0), Scalar(-1, 2));
}

class Suites : public ::testing::TestWithParam<std::string> {};

TEST_P(Suites, DefaultsPassAndAreDeterministic) {
    SuiteConfig cfg = config(GetParam());
    RunReport a = run_suite(cfg), b = run_suite(cfg);
    EXPECT_TRUE(a.ok()) << a.to_text();
    EXPECT_FALSE(a.checks.empty());
    EXPECT_EQ(a.to_json(), b.to_json());
    EXPECT_NE(a.to_text().find(GetParam()), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(All, Suites, ::testing::ValuesIn(suite_names()), [](const auto& info) {
    std::string s = info.param;
    for (char& ch : s)
        if (ch == '-') ch = '_';
    return s;
});

TEST(Suites, InputsDriveTheVerdict) {
    SuiteConfig bad = config("prelie2-axioms");
    bad.input = sample("compatibility_broken.json");
    EXPECT_FALSE(run_suite(bad).ok());
    SuiteConfig good = config("prelie2-axioms");
    good.input = sample("prelie2_imq_one_generator.json");
    EXPECT_TRUE(run_suite(good).ok());
    SuiteConfig mu = config("theorem-521");
    mu.input = sample("mu_broken.json");
    EXPECT_FALSE(run_suite(mu).ok());
}

TEST(Suites, UsageAndCeiling) {
    EXPECT_THROW(run_suite(config("no-such-suite")), UsageError);
    SuiteConfig zero = config("cobar-d2");
    zero.arity = 0;
    EXPECT_THROW(run_suite(zero), UsageError);
    SuiteConfig big = config("freelie-coefficients");
    big.weight = 40;
    EXPECT_THROW(run_suite(big), ResourceCeiling);
}

TEST(Report, JsonIsSortedAndOmitsTiming) {
    RunReport r;
    r.suite = "x";
    r.params["b"] = "2";
    r.params["a"] = "1";
    r.add("first", true, {"v = 1"});
    r.seconds = 3.5;
    std::string j = r.to_json();
    EXPECT_EQ(j.find("3.5"), std::string::npos);
    EXPECT_LT(j.find("\"a\""), j.find("\"b\""));
    auto parsed = nlohmann::json::parse(j);
    EXPECT_EQ(parsed["suite"], "x");
    r.seconds = 9;
    EXPECT_EQ(r.to_json(), j);
    EXPECT_TRUE(r.ok());
    r.add("second", false);
    EXPECT_FALSE(r.ok());
}
