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
 // Reads structure files: a graded basis, bilinear operations, an optional mu collection and an optional J.


#ifndef NIJ_CLI_INPUT_HPP
#define NIJ_CLI_INPUT_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nij/axiom/dual.hpp"
#include "nij/axiom/structure.hpp"
#include "nij/geometry/fields.hpp"
#include "nij/infinity/mu.hpp"


namespace nij {
namespace cli {
    using json = nlohmann::json;

    struct ParseError : std::runtime_error {
        int line, column;
        ParseError(int l, int c, const std::string& what)
            : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what), line(l), column(c) {}
    };
    struct ValidationError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct LoadedInput {
        axiom::AlgebraStructure algebra;
        operad::Variant variant = operad::Variant::pinf;
        std::optional<infinity::MuCollection> mu;
        std::optional<geometry::TVForm> J;
    };

    namespace detail {
        inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
            int line = 1, col = 1;
            for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
                if (text[i] == '\n') { ++line; col = 1; }
                else ++col;
            }
            return {line, col};
        }

        // the parser keeps no positions, so semantic errors point at the first occurrence of the offending key
        struct Locator {
            const std::string& text;
            std::pair<int, int> at(const std::string& needle) const {
                auto pos = text.find(needle);
                if (pos == std::string::npos) return {1, 1};
                return line_col(text, pos + 1);
            }
        };

        inline Scalar coeff_of(const json& j, const std::string& where) {
            if (j.is_number_integer()) return Scalar(j.get<long>());
            if (!j.is_string()) throw ValidationError(where + ": coeff must be a \"p/q\" string or an integer");
            try {
                return parse_scalar(j.get<std::string>());
            } catch (const std::exception& e) {
                throw ValidationError(where + ": " + e.what());
            }
        }

        inline int index_of(const std::map<std::string, int>& names, const json& j, const std::string& where) {
            if (!j.is_string()) throw ValidationError(where + ": basis names must be strings");
            auto it = names.find(j.get<std::string>());
            if (it == names.end()) throw ValidationError(where + ": unknown basis element \"" + j.get<std::string>() + "\"");
            return it->second;
        }

        inline std::vector<int> indices(const std::map<std::string, int>& names, const json& arr, const std::string& where) {
            if (!arr.is_array()) throw ValidationError(where + ": expected a list of basis names");
            std::vector<int> out;
            for (const auto& x : arr) out.push_back(index_of(names, x, where));
            return out;
        }

        inline int op_degree(const std::string& name) {
            if (name == "bullet") return 1;
            if (name == "star") return -1;
            return 0;
        }
    }  // namespace detail

    /* Throws ParseError for malformed JSON and ValidationError for well-formed files describing invalid data. */
    inline LoadedInput parse_input_text(const std::string& text) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            auto [l, c] = detail::line_col(text, e.byte);
            std::string msg = e.what();
            auto cut = msg.find("syntax error");
            throw ParseError(l, c, cut == std::string::npos ? msg : msg.substr(cut));
        }
        detail::Locator loc{text};
        auto fail_at = [&](const std::string& key, const std::string& what) -> ValidationError {
            auto [l, c] = loc.at("\"" + key + "\"");
            return ValidationError("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what);
        };
        if (!doc.is_object()) throw ParseError(1, 1, "top level must be an object");
        LoadedInput in;
        std::map<std::string, int> names;
        if (!doc.contains("basis") || !doc["basis"].is_array()) throw fail_at("basis", "missing \"basis\" list");
        for (const auto& b : doc["basis"]) {
            if (!b.is_object() || !b.contains("name") || !b.contains("degree") || !b["name"].is_string() ||
                !b["degree"].is_number_integer())
                throw fail_at("basis", "each basis entry needs a string name and an integer degree");
            std::string nm = b["name"].get<std::string>();
            if (names.count(nm)) throw fail_at(nm, "duplicate basis name \"" + nm + "\"");
            names[nm] = static_cast<int>(in.algebra.basis.size());
            in.algebra.basis.push_back({nm, b["degree"].get<int>()});
        }
        if (doc.contains("variant")) {
            std::string v = doc["variant"].is_string() ? doc["variant"].get<std::string>() : "";
            if (v == "pinf") in.variant = operad::Variant::pinf;
            else if (v == "ninf") in.variant = operad::Variant::ninf;
            else throw fail_at("variant", "variant must be \"pinf\" or \"ninf\"");
        }
        if (doc.contains("ops")) {
            if (!doc["ops"].is_object()) throw fail_at("ops", "\"ops\" must be an object");
            for (const auto& [op, entries] : doc["ops"].items()) {
                if (!entries.is_array()) throw fail_at(op, op + ": expected a list of entries");
                axiom::BilinearOp bop{detail::op_degree(op), {}};
                for (const auto& e : entries) {
                    if (!e.is_object() || !e.contains("inputs") || !e.contains("output"))
                        throw fail_at(op, op + ": each entry needs inputs and output");
                    auto ins = detail::indices(names, e["inputs"], op);
                    int out = detail::index_of(names, e["output"], op);
                    Scalar c = e.contains("coeff") ? detail::coeff_of(e["coeff"], op) : Scalar(1);
                    if (op == "d") {
                        if (ins.size() != 1) throw fail_at(op, "the differential takes one input");
                        in.algebra.differential[ins[0]][out] += c;
                        in.algebra.has_differential = true;
                        continue;
                    }
                    if (ins.size() != 2) throw fail_at(op, op + ": binary operations take two inputs");
                    bop.add(ins[0], ins[1], out, c);
                }
                if (op != "d") in.algebra.ops[op] = bop;
            }
            try {
                axiom::validate(in.algebra);
            } catch (const axiom::StructureError& e) {
                throw fail_at("ops", e.what());
            }
        }
        if (doc.contains("mu")) {
            if (!doc["mu"].is_object()) throw fail_at("mu", "\"mu\" must be an object keyed by \"k,p\"");
            std::vector<int> degs;
            for (const auto& b : in.algebra.basis) degs.push_back(b.degree);
            infinity::MuCollection mu(degs, in.variant);
            for (const auto& [key, entries] : doc["mu"].items()) {
                int k = -1, p = -1;
                char comma = 0;
                std::istringstream ks(key);
                if (!(ks >> k >> comma >> p) || comma != ',' || k < 0 || p < 0 || !entries.is_array())
                    throw fail_at(key, "mu block keys look like \"k,p\" and hold a list");
                for (const auto& e : entries) {
                    if (!e.is_object() || !e.contains("inputs") || !e.contains("output"))
                        throw fail_at(key, "mu entry needs inputs and output");
                    auto ins = detail::indices(names, e["inputs"], key);
                    if (static_cast<int>(ins.size()) != k + p) throw fail_at(key, "mu " + key + " entry has the wrong number of inputs");
                    Scalar c = e.contains("coeff") ? detail::coeff_of(e["coeff"], key) : Scalar(1);
                    std::vector<int> A(ins.begin(), ins.begin() + k), B(ins.begin() + k, ins.end());
                    try {
                        mu.define(A, B, detail::index_of(names, e["output"], key), c);
                    } catch (const std::invalid_argument& x) {
                        throw fail_at(key, x.what());
                    }
                }
            }
            in.mu = mu;
        }
        if (doc.contains("J")) {
            if (!doc["J"].is_array()) throw fail_at("J", "\"J\" must be a list of terms");
            std::vector<int> degs;
            for (const auto& b : in.algebra.basis) degs.push_back(b.degree);
            geometry::Coordinates c(degs);
            geometry::TVForm J;
            for (const auto& e : doc["J"]) {
                if (!e.is_object() || !e.contains("output")) throw fail_at("J", "J term needs an output");
                geometry::Poly m = geometry::one(c);
                if (e.contains("t"))
                    for (int a : detail::indices(names, e["t"], "J")) m = geometry::mul(c, m, geometry::var(c, c.t(a)));
                if (e.contains("theta"))
                    for (int a : detail::indices(names, e["theta"], "J")) m = geometry::mul(c, m, geometry::var(c, c.theta(a)));
                Scalar x = e.contains("coeff") ? detail::coeff_of(e["coeff"], "J") : Scalar(1);
                J.add(detail::index_of(names, e["output"], "J"), m, x);
            }
            in.J = J;
        }
        return in;
    }

    struct IoError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    inline LoadedInput parse_input(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw IoError("cannot open " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return parse_input_text(ss.str());
    }

    inline axiom::DgcaStructure as_dgca(const LoadedInput& in) {
        if (!in.algebra.has("dot")) throw ValidationError("a dgca file needs a \"dot\" operation");
        axiom::DgcaStructure g{in.algebra};
        auto r = axiom::check_dgca(g);
        if (!r.ok()) throw ValidationError("not a dgca: " + r.to_string(g.a, 1));
        return g;
    }
}  // namespace cli
}  // namespace nij

#endif  // NIJ_CLI_INPUT_HPP
