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
 // The free graded Lie algebra on W + W[-1], realised inside its tensor algebra, with the derivations d and Q.


#ifndef NIJ_FREELIE_FREE_LIE_HPP
#define NIJ_FREELIE_FREE_LIE_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nij/core/formal_sum.hpp"
#include "nij/core/graded.hpp"
#include "nij/core/linalg.hpp"
#include "nij/core/scalar.hpp"


namespace nij {
namespace freelie {
    struct Generator {
        std::string base_name;
        bool shifted = false;
        int degree = 0;
    };

    struct ContextError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };
    struct DomainError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    using Word = std::vector<int>;
    using TensorSum = FormalSum<Word>;

    /* Letters are numbered so that letter 2i is w_i and letter 2i+1 is Pi w_i. The alphabet order is the numbering.
     * Elements are stored in the tensor algebra, where the bracket is the graded commutator; that embedding is
     * injective, so equality there is equality in the free Lie algebra.
     */
    class Context {
    public:
        Context(const std::vector<std::pair<std::string, int>>& bases, int max_weight) : max_weight_(max_weight) {
            if (max_weight < 1) throw DomainError("truncation weight must be at least 1");
            for (const auto& [name, deg] : bases) {
                letters_.push_back({name, false, deg});
                letters_.push_back({name, true, deg + 1});
            }
        }

        int max_weight() const { return max_weight_; }
        int letter_count() const { return static_cast<int>(letters_.size()); }
        const Generator& letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }
        int degree(int letter) const { return letters_.at(static_cast<std::size_t>(letter)).degree; }
        int word_degree(const Word& w) const {
            int d = 0;
            for (int l : w) d += degree(l);
            return d;
        }
        std::string letter_name(int l) const {
            const auto& g = letter(l);
            return g.shifted ? "P" + g.base_name : g.base_name;
        }
        std::string render(const Word& w) const {
            std::string s;
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + letter_name(w[i]);
            return s;
        }

    private:
        std::vector<Generator> letters_;
        int max_weight_;
    };

    class Element {
    public:
        Element() = default;
        explicit Element(std::shared_ptr<const Context> ctx) : ctx_(std::move(ctx)) {}
        Element(std::shared_ptr<const Context> ctx, TensorSum t, bool truncated = false)
            : ctx_(std::move(ctx)), terms_(std::move(t)), truncated_(truncated) {}

        static Element generator(std::shared_ptr<const Context> ctx, int letter) {
            if (letter < 0 || letter >= ctx->letter_count()) throw ContextError("letter out of range");
            return Element(ctx, TensorSum(Word{letter}));
        }

        const Context& context() const { return *ctx_; }
        const std::shared_ptr<const Context>& context_ptr() const { return ctx_; }
        const TensorSum& terms() const { return terms_; }
        bool truncated() const { return truncated_; }
        bool is_zero() const { return terms_.empty(); }

        Element& operator+=(const Element& o) { check(o); terms_ += o.terms_; truncated_ |= o.truncated_; return *this; }
        Element& operator-=(const Element& o) { check(o); terms_ -= o.terms_; truncated_ |= o.truncated_; return *this; }
        Element& operator*=(const Scalar& s) { terms_ *= s; return *this; }
        friend Element operator+(Element a, const Element& b) { return a += b; }
        friend Element operator-(Element a, const Element& b) { return a -= b; }
        friend Element operator*(const Scalar& s, Element a) { return a *= s; }
        bool operator==(const Element& o) const { return terms_ == o.terms_; }

        void check(const Element& o) const {
            if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw ContextError("elements from different generator contexts");
        }
        void adopt(const Element& o) { if (!ctx_) ctx_ = o.ctx_; }

        /* Splits into weight-homogeneous parts: index = weight. */
        std::vector<Element> by_weight() const {
            std::vector<Element> out(static_cast<std::size_t>(ctx_->max_weight() + 1), Element(ctx_));
            for (const auto& [w, c] : terms_) out[w.size()].terms_.add(w, c);
            return out;
        }

        std::string to_string() const {
            return terms_.to_string([this](const Word& w) { return ctx_->render(w); });
        }

    private:
        std::shared_ptr<const Context> ctx_;
        TensorSum terms_;
        bool truncated_ = false;
    };

    /* Graded commutator xy - (-1)^{|x||y|} yx, applied to homogeneous words and extended bilinearly.
     * Words longer than the truncation weight are dropped and the result is flagged.
     */
    inline Element bracket(const Element& x, const Element& y) {
        x.check(y);
        const auto& ctx = x.context_ptr() ? x.context_ptr() : y.context_ptr();
        if (!ctx) return Element();
        TensorSum out;
        bool truncated = x.truncated() || y.truncated();
        for (const auto& [u, cu] : x.terms()) {
            int du = ctx->word_degree(u);
            for (const auto& [v, cv] : y.terms()) {
                if (static_cast<int>(u.size() + v.size()) > ctx->max_weight()) { truncated = true; continue; }
                int dv = ctx->word_degree(v);
                Word uv = u, vu = v;
                uv.insert(uv.end(), v.begin(), v.end());
                vu.insert(vu.end(), u.begin(), u.end());
                Scalar c = cu * cv;
                out.add(uv, c);
                out.add(vu, -c * parity_sign(static_cast<long long>(du & 1) * (dv & 1)));
            }
        }
        return Element(ctx, std::move(out), truncated);
    }

    /* Extends a letter map of the given degree to a derivation of the tensor algebra (and hence of the bracket):
     * D(x_1...x_n) = sum_i (-1)^{|D|(|x_1|+...+|x_{i-1}|)} x_1...D(x_i)...x_n.
     */
    template <class LetterMap>
    Element apply_derivation(const Element& x, int deg, LetterMap&& on_letter) {
        const auto& ctx = x.context_ptr();
        TensorSum out;
        for (const auto& [w, c] : x.terms()) {
            int before = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (const auto& [img, ci] : on_letter(w[i])) {
                    Word nw(w.begin(), w.begin() + static_cast<long>(i));
                    nw.insert(nw.end(), img.begin(), img.end());
                    nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
                    out.add(nw, c * ci * parity_sign(static_cast<long long>(deg & 1) * (before & 1)));
                }
                before += ctx->degree(w[i]);
            }
        }
        return Element(ctx, std::move(out), x.truncated());
    }

    // d(a + Pi b) = Pi a
    inline Element apply_d(const Element& x) {
        return apply_derivation(x, 1, [](int l) {
            TensorSum img;
            if (l % 2 == 0) img.add(Word{l + 1}, Scalar(1));
            return img;
        });
    }

    // q(a + Pi b) = b
    inline Element apply_q(const Element& x) {
        return apply_derivation(x, -1, [](int l) {
            TensorSum img;
            if (l % 2 == 1) img.add(Word{l - 1}, Scalar(1));
            return img;
        });
    }

    // Q = q / weight on each weight-homogeneous part
    inline Element apply_Q(const Element& x) {
        Element qx = apply_q(x);
        TensorSum out;
        for (const auto& [w, c] : qx.terms()) out.add(w, c / static_cast<long>(w.size()));
        return Element(x.context_ptr(), std::move(out), x.truncated());
    }

    inline bool in_image_of_Q(const Element& a) { return apply_Q(apply_d(a)) == a; }

    inline Element induced_circ(const Element& a, const Element& b) {
        if (!in_image_of_Q(a)) throw DomainError("left argument fails the projector check Q d a = a");
        if (!in_image_of_Q(b)) throw DomainError("right argument fails the projector check Q d b = b");
        return apply_Q(bracket(apply_d(a), b));
    }

    inline Element induced_bullet(const Element& a, const Element& b) {
        if (!in_image_of_Q(a)) throw DomainError("left argument fails the projector check Q d a = a");
        if (!in_image_of_Q(b)) throw DomainError("right argument fails the projector check Q d b = b");
        return apply_Q(bracket(apply_d(a), apply_d(b)));
    }

    /* A basis element of the free Lie superalgebra: the standard bracketing of a Lyndon word, or [P(u), P(u)]
     * for an odd Lyndon word u (doubled = true, word = uu).
     */
    struct LieWord {
        Word word;
        bool doubled = false;
        int weight() const { return static_cast<int>(word.size()); }
        auto operator<=>(const LieWord&) const = default;
    };

    inline bool is_lyndon(const Word& w) {
        if (w.empty()) return false;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i), w.end())) return false;
        return true;
    }

    inline std::vector<Word> lyndon_words(int letters, int length) {
        std::vector<Word> out;
        Word w(static_cast<std::size_t>(length), 0);
        // odometer over all words; the counts here are tiny
        while (true) {
            if (is_lyndon(w)) out.push_back(w);
            int i = length - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == letters - 1) w[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
        return out;
    }

    // standard bracketing: w = uv with v the longest proper Lyndon suffix
    inline Element standard_bracketing(const std::shared_ptr<const Context>& ctx, const Word& w) {
        if (w.size() == 1) return Element::generator(ctx, w[0]);
        for (std::size_t i = 1; i < w.size(); ++i) {
            Word v(w.begin() + static_cast<long>(i), w.end());
            if (is_lyndon(v)) {
                Word u(w.begin(), w.begin() + static_cast<long>(i));
                return bracket(standard_bracketing(ctx, u), standard_bracketing(ctx, v));
            }
        }
        throw DomainError("word is not Lyndon");
    }

    inline Element expand(const std::shared_ptr<const Context>& ctx, const LieWord& lw) {
        if (!lw.doubled) return standard_bracketing(ctx, lw.word);
        Word u(lw.word.begin(), lw.word.begin() + static_cast<long>(lw.word.size() / 2));
        Element pu = standard_bracketing(ctx, u);
        return bracket(pu, pu);
    }

    inline std::vector<LieWord> lie_basis(const std::shared_ptr<const Context>& ctx, int weight) {
        if (weight < 1) throw DomainError("weight must be at least 1");
        std::vector<LieWord> out;
        for (auto& w : lyndon_words(ctx->letter_count(), weight)) out.push_back({w, false});
        if (weight % 2 == 0) {
            for (auto& u : lyndon_words(ctx->letter_count(), weight / 2)) {
                if (ctx->word_degree(u) % 2 == 0) continue;
                Word uu = u;
                uu.insert(uu.end(), u.begin(), u.end());
                out.push_back({uu, true});
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /* Coordinates of weight-homogeneous elements in the Lyndon basis, by exact elimination. */
    class LyndonCoordinates {
    public:
        LyndonCoordinates(std::shared_ptr<const Context> ctx, int weight) : ctx_(std::move(ctx)) {
            basis_ = lie_basis(ctx_, weight);
            for (const auto& lw : basis_) echelon_.insert(to_sparse(expand(ctx_, lw)));
        }
        const std::vector<LieWord>& basis() const { return basis_; }
        std::size_t rank() const { return echelon_.rank(); }
        std::optional<SparseVec> coordinates(const Element& x) const { return echelon_.coordinates(to_sparse(x)); }

        SparseVec to_sparse(const Element& x) const {
            SparseVec v;
            for (const auto& [w, c] : x.terms()) v[index(w)] = c;
            return v;
        }

    private:
        int index(const Word& w) const {
            int k = 0;
            for (int l : w) k = k * ctx_->letter_count() + l;
            return k;
        }
        std::shared_ptr<const Context> ctx_;
        std::vector<LieWord> basis_;
        Echelon echelon_;
    };
}  // namespace freelie
}  // namespace nij

#endif  // NIJ_FREELIE_FREE_LIE_HPP
