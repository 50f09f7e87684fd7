/*
   Copyright 2026 The zktheta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zktheta/codes.hpp"
#include "zktheta/errors.hpp"
#include "zktheta/integer.hpp"

namespace zktheta {

inline constexpr std::size_t kDefaultTupleCap = 1'000'000;
inline constexpr std::size_t kMaxEnumeratorVars = 4096;  // cap on k^g

/// Exponent vector of one monomial: dense, one slot per variable.
using ExpVec = std::vector<std::uint8_t>;

/// Complete weight enumerator in genus g: a homogeneous degree-n polynomial
/// in k^g variables z_a, a in Z_k^g.  Variables are indexed row-major with
/// the last coordinate of a fastest: index(a) = ((a_1*k + a_2)*k + ...)*k + a_g.
struct WeightEnumerator {
    unsigned k = 2;
    unsigned g = 1;
    unsigned n = 0;
    std::map<ExpVec, Integer> terms;

    std::size_t var_count() const {
        std::size_t v = 1;
        for (unsigned t = 0; t < g; ++t) v *= k;
        return v;
    }

    bool operator==(const WeightEnumerator& o) const {
        return k == o.k && g == o.g && n == o.n && terms == o.terms;
    }
};

/// Symmetrized weight enumerator: X_j and X_{k-j} identified, variables
/// 0 .. floor(k/2).
struct SymWeightEnumerator {
    unsigned k = 2;
    unsigned n = 0;
    std::map<ExpVec, Integer> terms;

    std::size_t var_count() const { return k / 2 + 1; }

    bool operator==(const SymWeightEnumerator& o) const {
        return k == o.k && n == o.n && terms == o.terms;
    }
};

/// Complete weight enumerator (genus 1): sum over codewords of
/// prod_j X_j^{w_j(c)}.
inline WeightEnumerator cwe(const Code& c) {
    if (!c.materialized)
        throw resource_error("cwe: code span is not materialized");
    WeightEnumerator w;
    w.k = c.k;
    w.g = 1;
    w.n = c.n;
    ExpVec exp(c.k);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::fill(exp.begin(), exp.end(), 0);
        for (std::uint16_t v : c.word(i)) ++exp[v];
        w.terms[exp] += 1;
    }
    return w;
}

/// Genus-g complete weight enumerator: sum over ordered g-tuples of
/// codewords of prod_{a} z_a^{w_a}, where w_a counts the columns equal to a.
inline WeightEnumerator genus_cwe(const Code& c, unsigned g,
                                  std::size_t tuple_cap = kDefaultTupleCap) {
    if (g < 1) throw input_error("genus_cwe: g must be >= 1");
    if (!c.materialized)
        throw resource_error("genus_cwe: code span is not materialized");
    WeightEnumerator w;
    w.k = c.k;
    w.g = g;
    w.n = c.n;
    if (w.var_count() > kMaxEnumeratorVars)
        throw resource_error("genus_cwe: k^g exceeds the variable cap");
    Integer tuples = ipow(c.cardinality, g);
    if (tuples > Integer(static_cast<unsigned long>(tuple_cap)))
        throw resource_error("genus_cwe: |C|^g exceeds the tuple cap");
    const std::size_t size = c.size();
    const std::size_t vars = w.var_count();
    std::vector<std::size_t> idx(g, 0);
    ExpVec exp(vars);
    for (;;) {
        std::fill(exp.begin(), exp.end(), 0);
        for (unsigned col = 0; col < c.n; ++col) {
            std::size_t a = 0;
            for (unsigned t = 0; t < g; ++t) a = a * c.k + c.word(idx[t])[col];
            ++exp[a];
        }
        w.terms[exp] += 1;
        unsigned t = g;
        bool done = true;
        while (t > 0) {
            --t;
            if (++idx[t] < size) {
                done = false;
                break;
            }
            idx[t] = 0;
        }
        if (done) break;
    }
    return w;
}

/// Identify X_j with X_{k-j} in a genus-1 enumerator.
inline SymWeightEnumerator symmetrize(const WeightEnumerator& w) {
    if (w.g != 1) throw input_error("symmetrize: defined for genus 1 only");
    SymWeightEnumerator s;
    s.k = w.k;
    s.n = w.n;
    const unsigned half = w.k / 2;
    for (const auto& [exp, coeff] : w.terms) {
        ExpVec folded(half + 1, 0);
        for (unsigned j = 0; j < w.k; ++j)
            folded[j <= half ? j : w.k - j] += exp[j];
        s.terms[folded] += coeff;
    }
    return s;
}

inline Integer coefficient_sum(const WeightEnumerator& w) {
    Integer s(0);
    for (const auto& [exp, coeff] : w.terms) s += coeff;
    return s;
}

inline bool is_homogeneous(const WeightEnumerator& w) {
    for (const auto& [exp, coeff] : w.terms) {
        unsigned deg = 0;
        for (std::uint8_t e : exp) deg += e;
        if (deg != w.n) return false;
    }
    return true;
}

}  // namespace zktheta
