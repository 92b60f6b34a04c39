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
 // Sparse exact linear algebra: incremental row echelon form, rank and coordinates.


#ifndef NIJ_CORE_LINALG_HPP
#define NIJ_CORE_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nij/core/scalar.hpp"


namespace nij {
    using SparseVec = std::map<int, Scalar>;

    inline void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
        if (a == 0) return;
        for (const auto& [i, v] : x) {
            auto [it, ins] = y.try_emplace(i, a * v);
            if (!ins) {
                it->second += a * v;
                if (it->second == 0) y.erase(it);
            }
        }
    }

    /* Keeps a reduced echelon basis of the span of inserted vectors. Each stored row remembers which combination
     * of inserted vectors produced it, so coordinates of a vector in the span come out exactly.
     */
    class Echelon {
    public:
        /* Returns true if v was independent of the rows already present. */
        bool insert(const SparseVec& v) {
            SparseVec combo{{count_, Scalar(1)}};
            SparseVec r = v;
            reduce_in_place(r, combo);
            ++count_;
            if (r.empty()) return false;
            int pivot = r.begin()->first;
            Scalar inv = 1 / r.begin()->second;
            for (auto& kv : r) kv.second *= inv;
            for (auto& kv : combo) kv.second *= inv;
            // keep rows fully reduced on their pivot column
            for (auto& [p, row] : rows_) {
                auto it = row.first.find(pivot);
                if (it != row.first.end()) {
                    Scalar f = -it->second;
                    axpy(row.first, f, r);
                    axpy(row.second, f, combo);
                }
            }
            rows_.emplace(pivot, std::make_pair(std::move(r), std::move(combo)));
            return true;
        }

        std::size_t rank() const { return rows_.size(); }
        std::size_t inserted() const { return static_cast<std::size_t>(count_); }

        SparseVec reduce(const SparseVec& v) const {
            SparseVec r = v, combo;
            reduce_in_place(r, combo);
            return r;
        }

        bool contains(const SparseVec& v) const { return reduce(v).empty(); }

        /* Coefficients c_i with v = sum c_i * (i-th inserted vector), or nothing if v is outside the span. */
        std::optional<SparseVec> coordinates(const SparseVec& v) const {
            SparseVec r = v, combo;
            reduce_in_place(r, combo);
            if (!r.empty()) return std::nullopt;
            SparseVec out;
            axpy(out, Scalar(-1), combo);
            return out;
        }

    private:
        void reduce_in_place(SparseVec& r, SparseVec& combo) const {
            for (const auto& [pivot, row] : rows_) {
                auto it = r.find(pivot);
                if (it == r.end()) continue;
                Scalar f = -it->second;
                axpy(r, f, row.first);
                axpy(combo, f, row.second);
            }
        }

        std::map<int, std::pair<SparseVec, SparseVec>> rows_;
        int count_ = 0;
    };

    inline std::size_t rank_of(const std::vector<SparseVec>& vectors) {
        Echelon e;
        for (const auto& v : vectors) e.insert(v);
        return e.rank();
    }
}  // namespace nij

#endif  // NIJ_CORE_LINALG_HPP
