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
 // nij: run a named verification suite and report.


#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nij/cli/suites.hpp"

namespace {
    enum Exit { ok = 0, check_failed = 1, parse_error = 2, validation_error = 3, resource_ceiling = 4, usage = 5 };
}

int main(int argc, char** argv) {
    CLI::App app{"Run verification suites for pre-Lie^2 and Nijenhuis structures"};
    nij::cli::SuiteConfig cfg;
    std::string input, variant, out, format = "text";
    int K = 0, weight = 0, arity = 0;
    app.add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(nij::cli::suite_names()));
    app.add_option("--input", input, "structure file (JSON syntax)");
    app.add_option("--trunc-K", K, "largest k of the mu samples");
    app.add_option("--weight", weight, "truncation weight");
    app.add_option("--arity", arity, "arity or word length bound");
    app.add_option("--variant", variant, "pinf or ninf")->check(CLI::IsMember({"pinf", "ninf"}));
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--out", out, "write the structured report here");
    app.add_option("--format", format, "format of standard output")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--max-terms", cfg.max_terms, "work ceiling");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Exit::ok : Exit::usage;
    }
    if (!input.empty()) cfg.input = input;
    if (app.count("--trunc-K")) cfg.trunc_K = K;
    if (app.count("--weight")) cfg.weight = weight;
    if (app.count("--arity")) cfg.arity = arity;
    if (!variant.empty()) cfg.variant = variant == "pinf" ? nij::operad::Variant::pinf : nij::operad::Variant::ninf;

    nij::cli::RunReport report;
    try {
        report = nij::cli::run_suite(cfg);
    } catch (const nij::cli::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::parse_error;
    } catch (const nij::cli::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::parse_error;
    } catch (const nij::cli::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return Exit::validation_error;
    } catch (const nij::cli::ResourceCeiling& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return Exit::resource_ceiling;
    } catch (const nij::cli::UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::invalid_argument& e) {
        // structures that load but break a precondition of the suite
        std::cerr << "validation error: " << e.what() << "\n";
        return Exit::validation_error;
    }

    if (format == "structured") std::cout << report.to_json();
    else std::cout << report.to_text();
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return Exit::usage;
        }
        f << report.to_json();
    }
    return report.ok() ? Exit::ok : Exit::check_failed;
}
