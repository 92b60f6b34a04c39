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
 // Run reports: one entry per check, rendered as text or as a JSON document without timing.


#ifndef NIJ_CLI_REPORT_HPP
#define NIJ_CLI_REPORT_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>


namespace nij {
namespace cli {
    struct CheckResult {
        std::string name;
        bool ok = true;
        std::vector<std::string> details;  // values and witnesses, already rendered
    };

    struct RunReport {
        std::string suite;
        std::uint64_t seed = 0;
        std::map<std::string, std::string> params;
        std::vector<CheckResult> checks;
        std::vector<std::string> notes;  // truncation and convention remarks
        double seconds = 0;

        bool ok() const {
            for (const auto& c : checks)
                if (!c.ok) return false;
            return true;
        }

        CheckResult& add(std::string name, bool ok, std::vector<std::string> details = {}) {
            checks.push_back({std::move(name), ok, std::move(details)});
            return checks.back();
        }

        std::string to_text(std::size_t witness_limit = 6) const {
            std::ostringstream os;
            os << "suite " << suite << " (seed " << seed << ")\n";
            for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
            for (const auto& c : checks) {
                os << (c.ok ? "  pass  " : "  FAIL  ") << c.name << "\n";
                for (std::size_t i = 0; i < c.details.size() && i < witness_limit; ++i) os << "        " << c.details[i] << "\n";
                if (c.details.size() > witness_limit) os << "        ... " << c.details.size() - witness_limit << " more\n";
            }
            for (const auto& n : notes) os << "  note: " << n << "\n";
            os << (ok() ? "all checks passed" : "some checks failed");
            os << " in " << seconds << " s\n";
            return os.str();
        }

        // keys come out sorted, and nothing here depends on the clock
        std::string to_json() const {
            nlohmann::json j;
            j["suite"] = suite;
            j["seed"] = seed;
            j["params"] = params;
            j["ok"] = ok();
            j["checks"] = nlohmann::json::array();
            for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"details", c.details}});
            j["notes"] = notes;
            return j.dump(2) + "\n";
        }
    };
}  // namespace cli
}  // namespace nij

#endif  // NIJ_CLI_REPORT_HPP
