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
 // Finite exact linear combinations of basis keys.


#ifndef NIJ_CORE_FORMAL_SUM_HPP
#define NIJ_CORE_FORMAL_SUM_HPP

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nij/core/scalar.hpp"


namespace nij {
    /* A formal sum stores only nonzero coefficients, keyed in the canonical order of Key. Every mutating operation
     * keeps that invariant, so equality of sums is equality of maps.
     */
    template <class Key, class Compare = std::less<Key>>
    class FormalSum {
    public:
        using map_type = std::map<Key, Scalar, Compare>;
        using const_iterator = typename map_type::const_iterator;

        FormalSum() = default;
        explicit FormalSum(const Key& key, const Scalar& coeff = Scalar(1)) { add(key, coeff); }

        void add(const Key& key, const Scalar& coeff) {
            if (coeff == 0) return;
            auto [it, inserted] = terms_.try_emplace(key, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) terms_.erase(it);
            }
        }

        void add(const FormalSum& other, const Scalar& factor = Scalar(1)) {
            if (factor == 0) return;
            for (const auto& [k, c] : other.terms_) add(k, c * factor);
        }

        Scalar coeff(const Key& key) const {
            auto it = terms_.find(key);
            return it == terms_.end() ? Scalar(0) : it->second;
        }

        bool empty() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }
        const_iterator begin() const { return terms_.begin(); }
        const_iterator end() const { return terms_.end(); }
        const map_type& terms() const { return terms_; }
        void clear() { terms_.clear(); }

        FormalSum& operator+=(const FormalSum& o) { add(o); return *this; }
        FormalSum& operator-=(const FormalSum& o) { add(o, Scalar(-1)); return *this; }
        FormalSum& operator*=(const Scalar& s) {
            if (s == 0) { terms_.clear(); return *this; }
            for (auto& kv : terms_) kv.second *= s;
            return *this;
        }
        friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
        friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
        friend FormalSum operator*(const Scalar& s, FormalSum a) { return a *= s; }
        friend FormalSum operator*(FormalSum a, const Scalar& s) { return a *= s; }
        friend FormalSum operator-(FormalSum a) { return a *= Scalar(-1); }
        bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

        /* Linear map applied termwise. */
        template <class F>
        auto map_terms(F&& f) const -> decltype(f(std::declval<const Key&>())) {
            decltype(f(std::declval<const Key&>())) out;
            for (const auto& [k, c] : terms_) out.add(f(k), c);
            return out;
        }

        template <class Render>
        std::string to_string(Render&& render) const {
            if (terms_.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (const auto& [k, c] : terms_) {
                if (!first) os << " + ";
                first = false;
                os << c.get_str() << "*" << render(k);
            }
            return os.str();
        }

    private:
        map_type terms_;
    };

    /* Combines coefficients of equal keys, drops zeros and returns the canonically ordered sum. */
    template <class Key, class Compare = std::less<Key>>
    FormalSum<Key, Compare> normalize(const std::vector<std::pair<Key, Scalar>>& raw) {
        FormalSum<Key, Compare> out;
        for (const auto& [k, c] : raw) out.add(k, c);
        return out;
    }
}  // namespace nij

#endif  // NIJ_CORE_FORMAL_SUM_HPP
