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
 // Graded symbols and the Koszul sign rule.


#ifndef NIJ_CORE_GRADED_HPP
#define NIJ_CORE_GRADED_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nij/core/scalar.hpp"


namespace nij {
    struct GradedSymbol {
        std::string name;
        int degree = 0;

        auto operator<=>(const GradedSymbol&) const = default;
    };

    struct MalformedPartition : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    namespace detail {
        inline void require_bijection(const std::vector<int>& perm) {
            std::vector<char> seen(perm.size(), 0);
            for (int p : perm) {
                if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[p])
                    throw std::invalid_argument("permutation is not a bijection");
                seen[p] = 1;
            }
        }
    }  // namespace detail

    /* Sign of the plain permutation: parity of its inversion count. */
    inline int permutation_sign(const std::vector<int>& seq) {
        long long inv = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                if (seq[i] > seq[j]) ++inv;
        return parity_sign(inv);
    }

    /* Koszul sign of rearranging a word of homogeneous symbols.
     *
     * perm[i] is the position in the original word of the symbol that ends up at position i. Every pair of symbols
     * whose relative order is reversed contributes (-1)^{|x||y|}.
     */
    inline int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm) {
        if (degrees.size() != perm.size()) throw std::invalid_argument("permutation length differs from word length");
        detail::require_bijection(perm);
        long long parity = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) parity += static_cast<long long>(degrees[perm[i]] & 1) * (degrees[perm[j]] & 1);
        return parity_sign(parity);
    }

    inline int koszul_sign(const std::vector<GradedSymbol>& word, const std::vector<int>& perm) {
        std::vector<int> degrees;
        degrees.reserve(word.size());
        for (const auto& s : word) degrees.push_back(s.degree);
        return koszul_sign(degrees, perm);
    }

    /* Parity sign of the permutation taking `ordered` to the concatenation of `blocks`.
     * Blocks must be disjoint, internally ascending with respect to `ordered`, and cover it.
     */
    inline int block_shuffle_parity(const std::vector<int>& ordered, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> position;
        std::vector<int> used(ordered.size(), 0);
        for (const auto& block : blocks) {
            int last = -1;
            for (int label : block) {
                auto it = std::find(ordered.begin(), ordered.end(), label);
                if (it == ordered.end()) throw MalformedPartition("label not in ordered set");
                int pos = static_cast<int>(it - ordered.begin());
                if (used[pos]) throw MalformedPartition("blocks overlap");
                if (pos < last) throw MalformedPartition("block not ascending");
                used[pos] = 1;
                last = pos;
                position.push_back(pos);
            }
        }
        if (position.size() != ordered.size()) throw MalformedPartition("blocks do not cover the ordered set");
        return permutation_sign(position);
    }
}  // namespace nij

#endif  // NIJ_CORE_GRADED_HPP
