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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "zktheta/errors.hpp"
#include "zktheta/integer.hpp"

namespace zktheta {

/// One k-ary word; entries are canonical representatives in [0, k).
using Codeword = std::vector<std::uint16_t>;

inline constexpr std::size_t kDefaultSpanCap = 10'000'000;

namespace detail {
struct CodewordHash {
    std::size_t operator()(const Codeword& w) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint16_t v : w) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};
}  // namespace detail

/// A linear code over Z_k: an additive subgroup of Z_k^n.
///
/// The codeword set is materialized (flat, lexicographically sorted) whenever
/// it fits the span cap.  Codes built from standard-form generators may carry
/// a known cardinality without materialization; operations that need the
/// explicit word list throw resource_error on such codes.
struct Code {
    unsigned k = 2;
    unsigned n = 1;
    std::vector<Codeword> generators;
    bool materialized = false;
    std::vector<std::uint16_t> words;  // |C| * n entries, rows sorted lex
    Integer cardinality = 1;

    std::size_t size() const { return materialized ? words.size() / n : 0; }

    std::span<const std::uint16_t> word(std::size_t i) const {
        return {words.data() + i * n, n};
    }

    bool contains(std::span<const std::uint16_t> w) const {
        if (!materialized || w.size() != n) return false;
        std::size_t lo = 0, hi = size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            auto row = word(mid);
            int cmp = 0;
            for (unsigned j = 0; j < n; ++j) {
                if (row[j] != w[j]) {
                    cmp = row[j] < w[j] ? -1 : 1;
                    break;
                }
            }
            if (cmp == 0) return true;
            if (cmp < 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return false;
    }
};

struct CodeReport {
    bool self_orthogonal = false;
    bool self_dual = false;
    std::optional<bool> doubly_even;  // defined only for even k
    Integer cardinality = 1;
};

/// Sum of entrywise products mod k.
inline unsigned inner_product(const Codeword& a, const Codeword& b, unsigned k) {
    if (a.size() != b.size()) throw input_error("inner_product: length mismatch");
    if (k < 2) throw input_error("inner_product: k must be >= 2");
    unsigned long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = (acc + static_cast<unsigned long long>(a[i]) * b[i]) % k;
    return static_cast<unsigned>(acc);
}

/// Integer dot product of canonical representatives, no reduction.
inline long long dot_over_z(const Codeword& a, const Codeword& b) {
    if (a.size() != b.size()) throw input_error("dot_over_z: length mismatch");
    long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += static_cast<long long>(a[i]) * b[i];
    return acc;
}

struct WordWeights {
    std::size_t hamming = 0;
    unsigned long long euclidean = 0;  // sum of squares of representatives
    std::vector<std::size_t> profile;  // profile[j] = #{i : c_i == j}
};

inline WordWeights weights(const Codeword& c, unsigned k) {
    if (k < 2) throw input_error("weights: k must be >= 2");
    WordWeights w;
    w.profile.assign(k, 0);
    for (std::uint16_t v : c) {
        if (v >= k) throw input_error("weights: entry out of range");
        ++w.profile[v];
        if (v != 0) {
            ++w.hamming;
            w.euclidean += static_cast<unsigned long long>(v) * v;
        }
    }
    return w;
}

namespace detail {

inline Codeword reduce_entries(unsigned k, const std::vector<long long>& row) {
    Codeword out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        long long r = row[i] % static_cast<long long>(k);
        if (r < 0) r += k;
        out[i] = static_cast<std::uint16_t>(r);
    }
    return out;
}

inline void add_mod(Codeword& dst, const Codeword& g, unsigned k) {
    for (std::size_t i = 0; i < dst.size(); ++i) {
        unsigned s = dst[i] + g[i];
        dst[i] = static_cast<std::uint16_t>(s >= k ? s - k : s);
    }
}

/// Grows the subgroup `set` to the subgroup generated by `set` and g.
/// The union of cosets set + j*g over the additive order of g.
inline void close_under(std::unordered_set<Codeword, CodewordHash>& set,
                        const Codeword& g, unsigned k, std::size_t cap) {
    std::vector<Codeword> base(set.begin(), set.end());
    Codeword shift(g.size(), 0);
    for (;;) {
        add_mod(shift, g, k);
        bool zero = std::all_of(shift.begin(), shift.end(),
                                [](std::uint16_t v) { return v == 0; });
        if (zero) break;
        for (const Codeword& b : base) {
            Codeword w = b;
            add_mod(w, shift, k);
            set.insert(std::move(w));
            if (set.size() > cap)
                throw resource_error("span cap exceeded; raise --span-cap or reduce n");
        }
    }
}

inline void sort_words_flat(std::vector<std::uint16_t>& flat, unsigned n) {
    const std::size_t rows = flat.size() / n;
    std::vector<std::size_t> idx(rows);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(
            flat.begin() + a * n, flat.begin() + (a + 1) * n,
            flat.begin() + b * n, flat.begin() + (b + 1) * n);
    });
    std::vector<std::uint16_t> sorted(flat.size());
    for (std::size_t r = 0; r < rows; ++r)
        std::copy(flat.begin() + idx[r] * n, flat.begin() + (idx[r] + 1) * n,
                  sorted.begin() + r * n);
    flat.swap(sorted);
}

}  // namespace detail

/// Smallest additive subgroup of Z_k^n containing the given rows.
/// Row entries are reduced mod k.  The span is computed by subgroup closure
/// (row reduction is invalid over Z_k), capped at span_cap elements.
inline Code code_from_generators(unsigned k, unsigned n,
                                 const std::vector<std::vector<long long>>& rows,
                                 std::size_t span_cap = kDefaultSpanCap) {
    if (k < 2) throw input_error("code_from_generators: k must be >= 2");
    if (n < 1) throw input_error("code_from_generators: n must be >= 1");
    Code c;
    c.k = k;
    c.n = n;
    std::unordered_set<Codeword, detail::CodewordHash> set;
    set.insert(Codeword(n, 0));
    for (const auto& raw : rows) {
        if (raw.size() != n)
            throw input_error("code_from_generators: row length != n");
        Codeword g = detail::reduce_entries(k, raw);
        c.generators.push_back(g);
        detail::close_under(set, g, k, span_cap);
    }
    c.words.reserve(set.size() * n);
    for (const Codeword& w : set) c.words.insert(c.words.end(), w.begin(), w.end());
    detail::sort_words_flat(c.words, n);
    c.materialized = true;
    c.cardinality = Integer(static_cast<unsigned long>(set.size()));
    return c;
}

/// All of Z_k^n.
inline Code whole_space(unsigned k, unsigned n,
                        std::size_t span_cap = kDefaultSpanCap) {
    std::vector<std::vector<long long>> rows;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return code_from_generators(k, n, rows, span_cap);
}

/// Irredundant (non-canonical) generating set: greedy over the sorted word
/// list, then pruned so no listed generator lies in the span of the others.
inline std::vector<Codeword> minimal_generators(const Code& c,
                                                std::size_t span_cap = kDefaultSpanCap) {
    if (!c.materialized) return c.generators;
    std::vector<Codeword> gens;
    {
        std::unordered_set<Codeword, detail::CodewordHash> span;
        span.insert(Codeword(c.n, 0));
        for (std::size_t i = 0; i < c.size() && span.size() < c.size(); ++i) {
            auto row = c.word(i);
            Codeword w(row.begin(), row.end());
            if (span.count(w)) continue;
            gens.push_back(w);
            detail::close_under(span, w, c.k, span_cap);
        }
    }
    for (std::size_t drop = gens.size(); drop-- > 0;) {
        std::unordered_set<Codeword, detail::CodewordHash> span;
        span.insert(Codeword(c.n, 0));
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != drop) detail::close_under(span, gens[i], c.k, span_cap);
        if (span.size() == c.size()) gens.erase(gens.begin() + drop);
    }
    return gens;
}

/// { c' : c . c' = 0 for every generator c of C }, by exhaustive scan over
/// Z_k^n.  Checks |C| * |dual| == k^n afterwards.
inline Code dual_code(const Code& c, std::size_t span_cap = kDefaultSpanCap) {
    Integer total = ipow(static_cast<unsigned long>(c.k),
                         static_cast<unsigned long>(c.n));
    if (total > Integer(static_cast<unsigned long>(span_cap)))
        throw resource_error("dual_code: k^n exceeds the scan cap; reduce n");
    Code d;
    d.k = c.k;
    d.n = c.n;
    Codeword v(c.n, 0);
    bool done = false;
    while (!done) {
        bool ok = true;
        for (const Codeword& g : c.generators)
            if (inner_product(v, g, c.k) != 0) {
                ok = false;
                break;
            }
        if (ok) d.words.insert(d.words.end(), v.begin(), v.end());
        // odometer, rightmost digit fastest: emits vectors in lex order
        unsigned i = c.n;
        while (i > 0) {
            --i;
            if (++v[i] < c.k) break;
            v[i] = 0;
            if (i == 0) done = true;
        }
    }
    d.materialized = true;
    d.cardinality = Integer(static_cast<unsigned long>(d.words.size() / d.n));
    if (c.cardinality * d.cardinality != total)
        throw invariant_error("|C| * |dual C| != k^n");
    d.generators = minimal_generators(d, span_cap);
    return d;
}

/// Classification per generators; cardinality-based self-duality.
///
/// self_dual is decided as self-orthogonality plus |C|^2 == k^n (the counting
/// argument), so it works for codes whose span was never materialized.
/// doubly_even for even k uses the generator criterion: e_i.e_i = 0 (mod 2k)
/// over Z and e_i.e_j = 0 (mod k), which is equivalent to the per-codeword
/// definition.
inline CodeReport classify(const Code& c) {
    CodeReport r;
    r.cardinality = c.cardinality;
    r.self_orthogonal = true;
    for (std::size_t i = 0; i < c.generators.size() && r.self_orthogonal; ++i)
        for (std::size_t j = i; j < c.generators.size(); ++j)
            if (inner_product(c.generators[i], c.generators[j], c.k) != 0) {
                r.self_orthogonal = false;
                break;
            }
    Integer total = ipow(static_cast<unsigned long>(c.k),
                         static_cast<unsigned long>(c.n));
    r.self_dual = r.self_orthogonal && (c.cardinality * c.cardinality == total);
    if (c.k % 2 == 0) {
        bool de = true;
        const long long k2 = 2LL * c.k;
        for (std::size_t i = 0; i < c.generators.size() && de; ++i) {
            if (dot_over_z(c.generators[i], c.generators[i]) % k2 != 0) de = false;
            for (std::size_t j = i + 1; j < c.generators.size() && de; ++j)
                if (dot_over_z(c.generators[i], c.generators[j]) % c.k != 0)
                    de = false;
        }
        r.doubly_even = de;
    }
    return r;
}

/// Lexicographically smallest (a,b,c,d) with 1 + a^2+b^2+c^2+d^2 = 2k,
/// entries in [0, k).  Exists for every even k by Lagrange's four-square
/// theorem applied to 2k - 1.
inline std::array<unsigned, 4> four_squares(unsigned k) {
    if (k < 2 || k % 2 != 0) throw input_error("four_squares: k must be even, >= 2");
    const long long target = 2LL * k - 1;
    for (unsigned a = 0; a < k && static_cast<long long>(a) * a <= target; ++a) {
        long long ra = target - static_cast<long long>(a) * a;
        for (unsigned b = 0; b < k && static_cast<long long>(b) * b <= ra; ++b) {
            long long rb = ra - static_cast<long long>(b) * b;
            for (unsigned c = 0; c < k && static_cast<long long>(c) * c <= rb; ++c) {
                long long rc = rb - static_cast<long long>(c) * c;
                auto d = static_cast<unsigned>(std::llround(std::sqrt(
                    static_cast<double>(rc))));
                while (static_cast<long long>(d) * d > rc) --d;
                while (static_cast<long long>(d + 1) * (d + 1) <= rc) ++d;
                if (static_cast<long long>(d) * d == rc && d < k)
                    return {a, b, c, d};
            }
        }
    }
    throw invariant_error("four_squares: no solution found");  // unreachable
}

namespace detail {

inline void enumerate_standard_form(const Code& c, std::vector<std::uint16_t>& flat,
                                    Codeword& word, unsigned row) {
    if (row == c.generators.size()) {
        flat.insert(flat.end(), word.begin(), word.end());
        return;
    }
    Codeword saved = word;
    for (unsigned t = 0; t < c.k; ++t) {
        enumerate_standard_form(c, flat, word, row + 1);
        add_mod(word, c.generators[row], c.k);
    }
    word = saved;
}

}  // namespace detail

/// Example-1 construction: the code of length 8m over even Z_k generated by
/// (I_{4m} | M_{4m}), M built from the four-squares solution.  Always type II.
/// If k^{4m} exceeds the span cap the code is returned unmaterialized with
/// its cardinality k^{4m} known from the standard form (the identity block
/// makes distinct coefficient tuples distinct codewords).
inline Code type2_code(unsigned k, unsigned m,
                       std::size_t span_cap = kDefaultSpanCap) {
    if (k < 2 || k % 2 != 0) throw input_error("type2_code: k must be even, >= 2");
    if (m < 1) throw input_error("type2_code: m must be >= 1");
    auto [a, b, c, d] = four_squares(k);
    const long long M[4][4] = {{a, b, c, d},
                               {b, -(long long)a, -(long long)d, c},
                               {c, d, -(long long)a, -(long long)b},
                               {d, -(long long)c, b, -(long long)a}};
    Code code;
    code.k = k;
    code.n = 8 * m;
    for (unsigned blk = 0; blk < m; ++blk)
        for (unsigned r = 0; r < 4; ++r) {
            std::vector<long long> row(code.n, 0);
            row[4 * blk + r] = 1;
            for (unsigned col = 0; col < 4; ++col)
                row[4 * m + 4 * blk + col] = M[r][col];
            code.generators.push_back(detail::reduce_entries(k, row));
        }
    code.cardinality = ipow(static_cast<unsigned long>(k), 4UL * m);
    if (code.cardinality <= Integer(static_cast<unsigned long>(span_cap))) {
        // rows are in standard form (I | M): enumerate coefficient tuples
        // directly; lexicographic tuple order gives lexicographic word order
        code.words.reserve(
            static_cast<std::size_t>(code.cardinality.get_ui()) * code.n);
        Codeword word(code.n, 0);
        detail::enumerate_standard_form(code, code.words, word, 0);
        code.materialized = true;
        if (code.words.size() / code.n !=
            static_cast<std::size_t>(code.cardinality.get_ui()))
            throw invariant_error("type2_code: standard-form span size mismatch");
    }
    return code;
}

/// Coordinate-wise concatenation C1 (+) C2 of codes with equal k.
inline Code direct_sum(const Code& a, const Code& b) {
    if (a.k != b.k) throw input_error("direct_sum: modulus mismatch");
    if (!a.materialized || !b.materialized)
        throw resource_error("direct_sum: both codes must be materialized");
    Code c;
    c.k = a.k;
    c.n = a.n + b.n;
    for (const Codeword& g : a.generators) {
        Codeword w = g;
        w.resize(c.n, 0);
        c.generators.push_back(std::move(w));
    }
    for (const Codeword& g : b.generators) {
        Codeword w(a.n, 0);
        w.insert(w.end(), g.begin(), g.end());
        c.generators.push_back(std::move(w));
    }
    c.words.reserve(a.size() * b.size() * c.n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto wa = a.word(i);
            auto wb = b.word(j);
            c.words.insert(c.words.end(), wa.begin(), wa.end());
            c.words.insert(c.words.end(), wb.begin(), wb.end());
        }
    detail::sort_words_flat(c.words, c.n);
    c.materialized = true;
    c.cardinality = a.cardinality * b.cardinality;
    return c;
}

}  // namespace zktheta
