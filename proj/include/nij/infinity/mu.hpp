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
 // Structure constants mu_{k,p} and their assembly into a homological vector field plus a form.


#ifndef NIJ_INFINITY_MU_HPP
#define NIJ_INFINITY_MU_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nij/axiom/structure.hpp"
#include "nij/core/graded.hpp"
#include "nij/geometry/fields.hpp"
#include "nij/operad/tree.hpp"


namespace nij {
namespace infinity {
    using axiom::Vec;
    using geometry::Coordinates;
    using geometry::Poly;
    using geometry::TVForm;
    using operad::Variant;

    struct SymmetryError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };
    struct DegreeError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    /* mu_{k,p}: graded symmetric in the k alpha-slots, graded antisymmetric in the p beta-slots, landing in
     * degree sum + 1 - p. Stored on ascending index tuples only.
     */
    class MuCollection {
    public:
        using Key = std::pair<std::vector<int>, std::vector<int>>;

        MuCollection(std::vector<int> degrees, Variant v) : deg_(std::move(degrees)), variant_(v) {}

        int dim() const { return static_cast<int>(deg_.size()); }
        const std::vector<int>& degrees() const { return deg_; }
        Variant variant() const { return variant_; }
        const std::map<Key, Vec>& entries() const { return data_; }

        /* Sign and ascending form of (A, B); sign 0 when the slot symmetry kills the entry. */
        int canonical(std::vector<int>& A, std::vector<int>& B) const {
            int s = sort_block(A, false) * sort_block(B, true);
            for (std::size_t i = 1; i < A.size(); ++i)
                if (A[i] == A[i - 1] && odd(A[i])) return 0;
            for (std::size_t i = 1; i < B.size(); ++i)
                if (B[i] == B[i - 1] && !odd(B[i])) return 0;
            return s;
        }

        int output_degree(const std::vector<int>& A, const std::vector<int>& B) const {
            int d = 1 - static_cast<int>(B.size());
            for (int a : A) d += deg_.at(static_cast<std::size_t>(a));
            for (int b : B) d += deg_.at(static_cast<std::size_t>(b));
            return d;
        }

        /* Records mu(A; B) += c e_out. Inputs may be in any order; a second value for the same entry that
         * disagrees with the first (after the symmetry sign) is a symmetry violation.
         */
        void define(std::vector<int> A, std::vector<int> B, int out, const Scalar& c) {
            check_index(out);
            for (int a : A) check_index(a);
            for (int b : B) check_index(b);
            if (A.empty() && B.empty()) throw DegreeError("mu_{0,0} is not part of the data");
            if (A.empty() && variant_ == Variant::pinf) throw DegreeError("mu_{0,p} is excluded in the pre-Lie^2_inf variant");
            if (c == 0) return;
            if (output_degree(A, B) != deg_[static_cast<std::size_t>(out)])
                throw DegreeError("mu" + describe(A, B) + " -> e" + std::to_string(out) + " has the wrong degree");
            std::vector<int> a = A, b = B;
            int s = canonical(a, b);
            if (s == 0) throw SymmetryError("mu" + describe(A, B) + " must vanish by graded symmetry");
            Key k{a, b};
            Scalar v = c * s;
            auto seen = seen_.find({k, out});
            if (seen != seen_.end()) {
                if (seen->second != v) throw SymmetryError("inconsistent values for mu" + describe(A, B));
                return;
            }
            seen_[{k, out}] = v;
            data_[k][out] += v;
        }

        void set_canonical(const std::vector<int>& A, const std::vector<int>& B, const Vec& v) {
            if (v.empty()) data_.erase({A, B});
            else data_[{A, B}] = v;
        }

        /* mu evaluated on basis tuples in any order. */
        Vec operator()(std::vector<int> A, std::vector<int> B) const {
            int s = canonical(A, B);
            if (s == 0) return {};
            auto it = data_.find({A, B});
            if (it == data_.end()) return {};
            return axiom::scaled(it->second, Scalar(s));
        }

        int max_k() const {
            int m = 0;
            for (const auto& [k, v] : data_) m = std::max(m, static_cast<int>(k.first.size()));
            return m;
        }
        int max_p() const {
            int m = 0;
            for (const auto& [k, v] : data_) m = std::max(m, static_cast<int>(k.second.size()));
            return m;
        }
        bool empty() const { return data_.empty(); }

    private:
        bool odd(int a) const { return (deg_[static_cast<std::size_t>(a)] & 1) != 0; }
        void check_index(int a) const {
            if (a < 0 || a >= dim()) throw std::out_of_range("basis index " + std::to_string(a) + " out of range");
        }
        // alpha block: Koszul sign; beta block: Koszul sign times the permutation parity
        int sort_block(std::vector<int>& X, bool anti) const {
            std::vector<int> order(X.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return X[static_cast<std::size_t>(i)] < X[static_cast<std::size_t>(j)]; });
            std::vector<int> degs;
            for (int x : X) degs.push_back(deg_[static_cast<std::size_t>(x)]);
            int s = koszul_sign(degs, order);
            if (anti) s *= permutation_sign(order);
            std::vector<int> sorted;
            for (int i : order) sorted.push_back(X[static_cast<std::size_t>(i)]);
            X = sorted;
            return s;
        }
        static std::string describe(const std::vector<int>& A, const std::vector<int>& B) {
            std::string s = "(";
            for (std::size_t i = 0; i < A.size(); ++i) s += (i ? "," : "") + std::to_string(A[i]);
            s += ";";
            for (std::size_t i = 0; i < B.size(); ++i) s += (i ? "," : "") + std::to_string(B[i]);
            return s + ")";
        }

        std::vector<int> deg_;
        Variant variant_;
        std::map<Key, Vec> data_;
        std::map<std::pair<Key, int>, Scalar> seen_;
    };

    /* Sign exponents of the assembly. The p >= 1 one runs its second sum over the beta block. */
    inline long long epsilon(const std::vector<int>& edeg, const std::vector<int>& A, const std::vector<int>& B) {
        auto d = [&](int x) { return static_cast<long long>(edeg.at(static_cast<std::size_t>(x))); };
        long long p = static_cast<long long>(B.size()), e = 0, run = 0;
        if (p == 0) {
            for (int a : A) { run += d(a); e += d(a) * (1 + run); }
            return e;
        }
        for (int a : A) { run += d(a); e += d(a) * (2 - p + run); }
        for (std::size_t i = 0; i < B.size(); ++i) {
            long long tail = 0;
            for (std::size_t j = i + 1; j < B.size(); ++j) tail += d(B[j]);
            e += (d(B[i]) + 1) * tail;
        }
        return e;
    }

    /* The homological vector field (a 0-form) and the form part, on the coordinates of the same space. */
    struct DgManifoldPair {
        Coordinates coords;
        Variant variant = Variant::pinf;
        int K = 1;  // largest k in the relation range
        int P = 0;  // largest p in the relation range
        TVForm field;  // from mu_{k,0}
        TVForm gamma;  // from mu_{k,p}, p >= 1
        TVForm total() const { return field + gamma; }
    };

    namespace detail {
        inline Scalar factorial(int n) {
            Scalar f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        }

        inline void tuples(int n, int len, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
            if (static_cast<int>(cur.size()) == len) { f(cur); return; }
            for (int i = 0; i < n; ++i) {
                cur.push_back(i);
                tuples(n, len, cur, f);
                cur.pop_back();
            }
        }

        /* Adds the contribution of mu on every ordered (A, B) with |A| = k, |B| = p. */
        inline void assemble_block(const Coordinates& c, const MuCollection& mu, int k, int p, TVForm& out) {
            const auto& edeg = mu.degrees();
            Scalar norm = factorial(k) * factorial(p);
            std::vector<int> A;
            tuples(mu.dim(), k, A, [&](const std::vector<int>& a) {
                std::vector<int> B;
                tuples(mu.dim(), p, B, [&](const std::vector<int>& b) {
                    Vec val = mu(a, b);
                    if (val.empty()) return;
                    Poly mono = geometry::one(c);
                    for (int x : a) mono = geometry::mul(c, mono, geometry::var(c, c.t(x)));
                    for (int x : b) mono = geometry::mul(c, mono, geometry::var(c, c.theta(x)));
                    if (mono.empty()) return;
                    long long thdeg = 0;
                    for (int x : b) thdeg += 1 - edeg[static_cast<std::size_t>(x)];
                    Scalar coef = Scalar(parity_sign(epsilon(edeg, a, b))) / norm;
                    for (const auto& [g, v] : val) {
                        Scalar s = coef * v * parity_sign(thdeg * edeg[static_cast<std::size_t>(g)]);
                        Poly term = mono;
                        term *= s;
                        out.add(g, term);
                    }
                });
            });
        }
    }  // namespace detail

    /* Every relation a composite of two entries can produce lies in this window. */
    inline std::pair<int, int> complete_window(const MuCollection& mu) {
        int K = 2 * mu.max_k() + (mu.variant() == Variant::ninf ? 1 : 0), P = 2 * mu.max_p();
        return {std::max(1, K), P};
    }

    /* K and P bound the relation range checked later; by default the complete window. */
    inline DgManifoldPair assemble(const MuCollection& mu, int K = -1, int P = -1) {
        auto [k0, p0] = complete_window(mu);
        if (K < 0) K = k0;
        if (P < 0) P = p0;
        DgManifoldPair pr{Coordinates(mu.degrees(), K), mu.variant(), K, P, {}, {}};
        std::set<std::pair<int, int>> blocks;
        for (const auto& [key, v] : mu.entries())
            blocks.insert({static_cast<int>(key.first.size()), static_cast<int>(key.second.size())});
        for (auto [k, p] : blocks) detail::assemble_block(pr.coords, mu, k, p, p == 0 ? pr.field : pr.gamma);
        return pr;
    }

    /* Reads mu back off an assembled form: each ascending (A, B) owns one monomial, whose coefficient is a known
     * nonzero multiple of the entry.
     */
    inline MuCollection disassemble(const Coordinates& c, const TVForm& X, Variant v) {
        MuCollection mu(c.basis_degrees(), v);
        std::map<MuCollection::Key, Vec> acc;
        for (const auto& [g, poly] : X.comp)
            for (const auto& [m, coeff] : poly) {
                std::vector<int> A, B;
                for (int a = 0; a < c.n(); ++a)
                    for (int e = 0; e < m[static_cast<std::size_t>(c.t(a))]; ++e) A.push_back(a);
                for (int b = 0; b < c.n(); ++b)
                    if (m[static_cast<std::size_t>(c.theta(b))]) for (int e = 0; e < m[static_cast<std::size_t>(c.theta(b))]; ++e) B.push_back(b);
                if (A.empty() && B.empty()) throw DegreeError("constant term has no mu counterpart");
                MuCollection unit(c.basis_degrees(), Variant::ninf);
                Vec e;
                e[g] = 1;
                unit.set_canonical(A, B, e);
                TVForm probe;
                detail::assemble_block(c, unit, static_cast<int>(A.size()), static_cast<int>(B.size()), probe);
                Scalar lambda = probe.at(g).coeff(m);
                if (lambda == 0) throw SymmetryError("monomial " + geometry::render_monomial(c, m) + " has no mu counterpart");
                acc[{A, B}][g] += coeff / lambda;
            }
        for (const auto& [k, val] : acc)
            for (const auto& [g, x] : val) mu.define(k.first, k.second, g, x);
        return mu;
    }
}  // namespace infinity
}  // namespace nij

#endif  // NIJ_INFINITY_MU_HPP
