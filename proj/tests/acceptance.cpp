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
 // Acceptance run: one PASS/FAIL line per criterion with its time limit.


#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nij/axiom/ce.hpp"
#include "nij/axiom/checks.hpp"
#include "nij/cli/suites.hpp"
#include "nij/freelie/example.hpp"
#include "nij/freelie/free_lie.hpp"
#include "nij/operad/cobar.hpp"

using namespace nij;

namespace {
    struct Outcome {
        bool ok;
        std::string detail;
    };

    int failures = 0;

    void criterion(int n, double limit_s, const std::function<Outcome()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.ok && s < limit_s;
        if (!pass) ++failures;
        std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s)\n", n, pass ? "PASS" : "FAIL", o.detail.c_str(), s, limit_s);
        std::fflush(stdout);
    }

    cli::RunReport suite(const std::string& name) {
        cli::SuiteConfig cfg;
        cfg.suite = name;
        cfg.seed = 1;
        return cli::run_suite(cfg);
    }

    std::string first_check(const cli::RunReport& r) { return r.checks.empty() ? "" : r.checks.front().name; }
}  // namespace

int main() {
    using namespace freelie;

    criterion(1, 1, [] {
        int good = 0, total = 0;
        for (int mask = 0; mask < 8; ++mask) {
            int d1 = mask & 1, d2 = (mask >> 1) & 1, d3 = (mask >> 2) & 1;
            auto ctx = std::make_shared<const Context>(
                std::vector<std::pair<std::string, int>>{{"w1", d1}, {"w2", d2}, {"w3", d3}}, 3);
            auto g = [&](int l) { return Element::generator(ctx, l); };
            Element w1 = g(0), w2 = g(2), w3 = g(4), P1 = g(1), P2 = g(3);
            bool ids[4] = {
                induced_circ(w1, w2) == Scalar(1, 2) * bracket(w1, w2),
                induced_bullet(w1, w2) == Scalar(1, 2) * bracket(w1, P2) - Scalar(parity_sign(d1), 2) * bracket(P1, w2),
                induced_circ(w1, induced_circ(w2, w3)) == Scalar(1, 6) * bracket(w1, bracket(w2, w3)),
                induced_circ(induced_circ(w1, w2), w3) == Scalar(1, 3) * bracket(bracket(w1, w2), w3)};
            for (bool b : ids) good += b, ++total;
        }
        return Outcome{good == total, std::to_string(good) + "/" + std::to_string(total) + " identities over 8 parity patterns"};
    });

    criterion(2, 10, [] {
        auto ctx = std::make_shared<const Context>(std::vector<std::pair<std::string, int>>{{"a", 0}, {"b", 1}}, 4);
        int count = 0, bad = 0;
        for (int w = 1; w <= 4; ++w)
            for (const auto& lw : lie_basis(ctx, w)) {
                Element x = expand(ctx, lw);
                ++count;
                bool ok = apply_d(apply_Q(x)) + apply_Q(apply_d(x)) == x && apply_d(apply_d(x)).is_zero() &&
                          apply_Q(apply_Q(x)).is_zero();
                bad += !ok;
            }
        return Outcome{bad == 0 && count > 0, std::to_string(count) + " basis elements, " + std::to_string(bad) + " failures"};
    });

    criterion(3, 30, [] {
        auto s = image_of_Q({{"w", 0}, {"v", 1}}, 3).structure;
        auto r = axiom::check_prelie2(s);
        auto t = s;
        auto& row = t.ops["circ"].table.begin()->second;
        row.begin()->second += 1;
        auto q = axiom::check_prelie2(t);
        std::string witness = q.ok() ? "" : q.to_string(t, 1);
        auto nl = witness.find('\n', witness.find('\n') + 1);
        witness = witness.substr(0, nl);
        for (char& ch : witness)
            if (ch == '\n') ch = ' ';
        return Outcome{r.ok() && !q.ok() && !witness.empty(),
                       "dim " + std::to_string(s.dim()) + ", " + std::to_string(r.violations.size()) + " violations; perturbed: " +
                           std::to_string(q.violations.size()) + " violations, witness \"" + witness + "\""};
    });

    criterion(4, 60, [] {
        int checked = 0;
        std::size_t residue = 0;
        for (auto v : {operad::Variant::pinf, operad::Variant::ninf})
            for (bool unary : {false, true}) {
                auto r = operad::d_squared_check(4, operad::CobarOptions{v, unary});
                checked += r.generators_checked;
                residue += r.residue_terms;
            }
        return Outcome{residue == 0, std::to_string(checked) + " generator corollas, residue " + std::to_string(residue)};
    });

    criterion(5, 1, [] {
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            long long sum = 0, b = 1;
            for (int p = 0; p <= n; ++p) {
                if (p < n) sum += b;
                b = b * (n - p) / (p + 1);
            }
            ok = ok && sum == (1LL << n) - 1;
            ok = ok && operad::smodule_dim(n, operad::Variant::pinf) == sum;
            ok = ok && operad::smodule_dim(n, operad::Variant::ninf) == (1LL << n);
            ok = ok && operad::enumerate_corollas(n, operad::Variant::pinf) == sum;
            ok = ok && operad::enumerate_corollas(n, operad::Variant::ninf) == (1LL << n);
        }
        return Outcome{ok, "n = 1..8, 2^n - 1 and 2^n"};
    });

    criterion(6, 30, [] {
        auto r = suite("nijenhuis-dictionary");
        return Outcome{r.ok(), first_check(r)};
    });

    criterion(7, 300, [] {
        auto r = suite("maurer-cartan");
        return Outcome{r.ok(), first_check(r) + " (K = " + r.params["K"] + ")"};
    });

    criterion(8, 300, [] {
        auto r = suite("theorem-521");
        return Outcome{r.ok(), first_check(r) + " (K = " + r.params["K"] + ")"};
    });

    criterion(9, 60, [] {
        auto good = axiom::ce_bicomplex(image_of_Q({{"w", 0}, {"v", 1}}, 3).structure, 3);
        auto bad = axiom::ce_bicomplex(cli::suites::ce_counterexample(), 3);
        return Outcome{good.ok() && good.residue_terms == 0 && !bad.anticommute && bad.residue_terms > 0,
                       "residue " + std::to_string(good.residue_terms) + " on the example, " + std::to_string(bad.residue_terms) +
                           " on the broken structure"};
    });

    criterion(10, 120, [] {
        auto r = suite("fn-constant");
        std::string c = r.checks.empty() || r.checks.front().details.empty() ? "" : r.checks.front().details.front();
        return Outcome{r.ok(), c + "; " + (r.checks.size() > 1 ? r.checks[1].name : "")};
    });

    criterion(11, 10, [] {
        auto r = suite("dual-axioms");
        int n = 0;
        for (const auto& c : r.checks) n += c.ok;
        return Outcome{r.ok(), std::to_string(n) + "/" + std::to_string(r.checks.size()) + " relation checks"};
    });

    criterion(12, 900, [] {
        int same = 0, total = 0;
        std::string diff;
        for (const auto& name : cli::suite_names()) {
            ++total;
            if (suite(name).to_json() == suite(name).to_json()) ++same;
            else diff += " " + name;
        }
        return Outcome{same == total, std::to_string(same) + "/" + std::to_string(total) + " suites byte-identical" + diff};
    });

    return failures == 0 ? 0 : 1;
}
