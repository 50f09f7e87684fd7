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

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zktheta/cyclotomic.hpp"
#include "zktheta/enumerator.hpp"

namespace zktheta {

// The MacWilliams substitution z_a -> sum_b eta^(a.b) z_b is expanded exactly
// in Z[eta_k], term by term, by repeated sparse-polynomial multiplication by
// the k^g-term linear forms; the accumulated polynomial is then divided by
// |C|^g, and every coefficient must come out a nonnegative rational integer.
//
// Two expansion engines produce identical results: a packed-key int64 engine
// used when an a-priori l1 bound proves no intermediate coefficient can
// overflow, and a GMP engine for everything else.

namespace detail {

/// expT[a*V + b] = (a . b) mod k for variable indices a, b (row-major digits,
/// last coordinate fastest).
inline std::vector<std::uint8_t> dot_table(unsigned k, unsigned g, std::size_t V) {
    std::vector<std::vector<unsigned>> digits(V, std::vector<unsigned>(g));
    for (std::size_t v = 0; v < V; ++v) {
        std::size_t rem = v;
        for (unsigned t = g; t-- > 0;) {
            digits[v][t] = static_cast<unsigned>(rem % k);
            rem /= k;
        }
    }
    std::vector<std::uint8_t> expT(V * V);
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b) {
            unsigned long long dot = 0;
            for (unsigned t = 0; t < g; ++t)
                dot += static_cast<unsigned long long>(digits[a][t]) * digits[b][t];
            expT[a * V + b] = static_cast<std::uint8_t>(dot % k);
        }
    return expT;
}

// ---- packed-key engine -----------------------------------------------------
//
// A monomial of degree <= 9 in <= 63 variables is one uint64: the sorted
// variable ids in 6-bit fields from bit 0, padded with the sentinel 63.

inline constexpr std::uint64_t kEmptyKey = (std::uint64_t(1) << 60) - 1;

inline std::uint64_t key_insert(std::uint64_t key, unsigned b) {
    unsigned pos = 0;
    while (((key >> (6 * pos)) & 63u) < b) ++pos;
    const std::uint64_t low = key & ((std::uint64_t(1) << (6 * pos)) - 1);
    const std::uint64_t high = key >> (6 * pos);
    return low | ((std::uint64_t(b) | (high << 6)) << (6 * pos));
}

inline void key_decode(std::uint64_t key, ExpVec& exp) {
    std::fill(exp.begin(), exp.end(), 0);
    for (unsigned pos = 0; pos < 10; ++pos) {
        unsigned f = (key >> (6 * pos)) & 63u;
        if (f == 63u) break;
        ++exp[f];
    }
}

inline std::uint64_t key_hash(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Open-addressing monomial -> coefficient-slot map with O(1) generation
/// clears and an int64 coefficient arena (stride = phi(k) per monomial).
struct HotPoly {
    std::vector<std::uint64_t> table_key;
    std::vector<std::uint32_t> table_slot;
    std::vector<std::uint32_t> table_gen;
    std::uint32_t generation = 0;
    std::uint64_t mask = 0;
    std::vector<std::uint64_t> order;
    std::vector<std::int64_t> coeffs;
    unsigned stride = 1;

    void reset(unsigned stride_) {
        stride = stride_;
        std::size_t cap = std::size_t(1) << 16;
        table_key.assign(cap, 0);
        table_slot.assign(cap, 0);
        table_gen.assign(cap, 0);
        mask = cap - 1;
        generation = 1;
        order.clear();
        coeffs.clear();
    }

    void clear() {
        ++generation;
        order.clear();
        coeffs.clear();
    }

    void grow() {
        std::size_t cap = (mask + 1) * 2;
        table_key.assign(cap, 0);
        table_slot.assign(cap, 0);
        table_gen.assign(cap, 0);
        mask = cap - 1;
        for (std::uint32_t s = 0; s < order.size(); ++s) {
            std::uint64_t h = key_hash(order[s]) & mask;
            while (table_gen[h] == generation) h = (h + 1) & mask;
            table_gen[h] = generation;
            table_key[h] = order[s];
            table_slot[h] = s;
        }
    }

    /// Coefficient block for `key`, inserted zeroed if absent.  The pointer
    /// is invalidated by the next at() call.
    std::int64_t* at(std::uint64_t key) {
        if (order.size() * 2 >= mask) grow();
        std::uint64_t h = key_hash(key) & mask;
        for (;;) {
            if (table_gen[h] != generation) {
                table_gen[h] = generation;
                table_key[h] = key;
                table_slot[h] = static_cast<std::uint32_t>(order.size());
                order.push_back(key);
                coeffs.resize(coeffs.size() + stride, 0);
                return coeffs.data() + std::size_t(table_slot[h]) * stride;
            }
            if (table_key[h] == key)
                return coeffs.data() + std::size_t(table_slot[h]) * stride;
            h = (h + 1) & mask;
        }
    }
};

/// mulmat[e] is the phi x phi int64 matrix of multiplication by eta^e:
/// (c * eta^e)_i = sum_j c_j * mulmat[e][j*phi + i].
struct HotRing {
    unsigned phi = 1;
    std::vector<std::vector<std::int64_t>> mulmat;
    std::vector<long double> matnorm;  // max_j sum_i |mulmat[e][j][i]|

    static HotRing build(const CycRing& ring, unsigned k) {
        HotRing h;
        h.phi = ring.phi;
        h.mulmat.resize(k);
        h.matnorm.resize(k);
        for (unsigned e = 0; e < k; ++e) {
            auto& m = h.mulmat[e];
            m.assign(std::size_t(h.phi) * h.phi, 0);
            long double norm = 0;
            for (unsigned j = 0; j < h.phi; ++j) {
                const auto& row = ring.pow_rows_i64[j + e];
                long double rowsum = 0;
                for (unsigned i = 0; i < h.phi; ++i) {
                    m[std::size_t(j) * h.phi + i] = row[i];
                    rowsum += std::abs(static_cast<long double>(row[i]));
                }
                norm = std::max(norm, rowsum);
            }
            h.matnorm[e] = norm;
        }
        return h;
    }
};

inline void hot_expand_term(const ExpVec& exp, std::int64_t coeff,
                            std::size_t V, const std::vector<std::uint8_t>& expT,
                            const HotRing& hr, HotPoly& cur, HotPoly& next,
                            HotPoly& acc) {
    const unsigned phi = hr.phi;
    cur.clear();
    {
        std::int64_t* c0 = cur.at(kEmptyKey);
        c0[0] = coeff;
    }
    // remaining factor count decides when to fuse into the accumulator
    unsigned remaining = 0;
    for (std::uint8_t e : exp) remaining += e;
    if (remaining == 0) {
        std::int64_t* dst = acc.at(kEmptyKey);
        dst[0] += coeff;
        return;
    }
    for (unsigned a = 0; a < V; ++a) {
        for (unsigned rep = 0; rep < exp[a]; ++rep) {
            --remaining;
            HotPoly& target = remaining == 0 ? acc : next;
            if (remaining != 0) next.clear();
            const std::uint8_t* row_exp = expT.data() + std::size_t(a) * V;
            for (std::size_t t = 0; t < cur.order.size(); ++t) {
                const std::uint64_t key = cur.order[t];
                // copy: target.at() may reallocate the arena we read from
                std::int64_t cbuf[8];
                for (unsigned i = 0; i < phi; ++i)
                    cbuf[i] = cur.coeffs[t * phi + i];
                for (unsigned b = 0; b < V; ++b) {
                    const std::int64_t* m = hr.mulmat[row_exp[b]].data();
                    std::int64_t* dst = target.at(key_insert(key, b));
                    for (unsigned j = 0; j < phi; ++j) {
                        const std::int64_t cj = cbuf[j];
                        if (cj == 0) continue;
                        const std::int64_t* mj = m + std::size_t(j) * phi;
                        for (unsigned i = 0; i < phi; ++i) dst[i] += cj * mj[i];
                    }
                }
            }
            if (remaining != 0) std::swap(cur, next);
        }
    }
}

// ---- GMP engine ------------------------------------------------------------

inline void gmp_expand_term(const ExpVec& exp, const Integer& coeff,
                            std::size_t V, const std::vector<std::uint8_t>& expT,
                            unsigned k, std::map<ExpVec, CycInt>& acc) {
    std::vector<CycInt> etas;
    etas.reserve(k);
    for (unsigned e = 0; e < k; ++e) etas.push_back(eta_pow(k, e));
    unsigned remaining = 0;
    for (std::uint8_t e : exp) remaining += e;
    if (remaining == 0) {
        ExpVec zero(V, 0);
        auto it = acc.find(zero);
        if (it == acc.end())
            acc.emplace(std::move(zero), cyc_from_integer(k, coeff));
        else
            it->second = cyc_add(it->second, cyc_from_integer(k, coeff));
        return;
    }
    std::map<ExpVec, CycInt> cur;
    cur.emplace(ExpVec(V, 0), cyc_from_integer(k, coeff));
    for (unsigned a = 0; a < V; ++a) {
        for (unsigned rep = 0; rep < exp[a]; ++rep) {
            --remaining;
            std::map<ExpVec, CycInt> next;
            std::map<ExpVec, CycInt>& out = remaining == 0 ? acc : next;
            for (const auto& [key, cval] : cur) {
                for (unsigned b = 0; b < V; ++b) {
                    ExpVec nk = key;
                    ++nk[b];
                    CycInt prod = cyc_mul(cval, etas[expT[std::size_t(a) * V + b]]);
                    auto it = out.find(nk);
                    if (it == out.end())
                        out.emplace(std::move(nk), std::move(prod));
                    else
                        it->second = cyc_add(it->second, prod);
                }
            }
            if (remaining != 0) cur = std::move(next);
        }
    }
}

}  // namespace detail

/// Exact MacWilliams transform: substitutes z_a -> sum_b eta^(a.b) z_b into w,
/// expands in Z[eta_k], and divides every coefficient by cardinality^g.
/// `cardinality` must be |C| of the code whose genus-g enumerator w is;
/// otherwise the exact division or integrality assertion fails with
/// invariant_error.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w,
                                              const Integer& cardinality) {
    if (cardinality < 1) throw input_error("macwilliams_transform: bad cardinality");
    if (!is_homogeneous(w))
        throw input_error("macwilliams_transform: enumerator not homogeneous");
    const std::size_t V = w.var_count();
    if (V > kMaxEnumeratorVars)
        throw resource_error("macwilliams_transform: k^g exceeds the variable cap");
    const CycRing& ring = cyc_ring(w.k);
    for (const auto& [exp, coeff] : w.terms)
        if (exp.size() != V)
            throw input_error("macwilliams_transform: exponent vector size != k^g");
    const auto expT = detail::dot_table(w.k, w.g, V);
    const Integer divisor = ipow(cardinality, w.g);

    std::map<ExpVec, CycInt> result_cyc;

    // a-priori l1 bound over the whole expansion decides the engine
    bool fast = V <= 63 && w.n <= 9 && ring.phi <= 8 && ring.rows_fit_i64 &&
                fits_int64(divisor);
    if (fast) {
        detail::HotRing hr = detail::HotRing::build(ring, w.k);
        long double bound = 0;
        for (const auto& [exp, coeff] : w.terms) {
            long double t = std::fabs(coeff.get_d());
            for (unsigned a = 0; a < V; ++a) {
                if (!exp[a]) continue;
                long double f = 0;
                for (unsigned b = 0; b < V; ++b)
                    f += hr.matnorm[expT[std::size_t(a) * V + b]];
                for (unsigned rep = 0; rep < exp[a]; ++rep) t *= f;
            }
            bound += t;
            if (bound > std::ldexp(1.0L, 58)) break;
        }
        if (bound > std::ldexp(1.0L, 58)) fast = false;
        if (fast) {
            detail::HotPoly cur, next, acc;
            cur.reset(hr.phi);
            next.reset(hr.phi);
            acc.reset(hr.phi);
            for (const auto& [exp, coeff] : w.terms)
                detail::hot_expand_term(exp, to_int64(coeff), V, expT, hr, cur,
                                        next, acc);
            ExpVec exp(V);
            for (std::size_t t = 0; t < acc.order.size(); ++t) {
                CycInt c = cyc_zero(w.k);
                bool nonzero = false;
                for (unsigned i = 0; i < hr.phi; ++i) {
                    std::int64_t v = acc.coeffs[t * hr.phi + i];
                    if (v != 0) nonzero = true;
                    c.c[i] = Integer(static_cast<long>(v));
                }
                if (!nonzero) continue;
                detail::key_decode(acc.order[t], exp);
                result_cyc.emplace(exp, std::move(c));
            }
        }
    }
    if (!fast) {
        std::map<ExpVec, CycInt> acc;
        for (const auto& [exp, coeff] : w.terms)
            detail::gmp_expand_term(exp, coeff, V, expT, w.k, acc);
        for (auto& [exp, c] : acc)
            if (!cyc_is_zero(c)) result_cyc.emplace(exp, std::move(c));
    }

    WeightEnumerator out;
    out.k = w.k;
    out.g = w.g;
    out.n = w.n;
    for (auto& [exp, c] : result_cyc) {
        CycInt q = cyc_divexact(c, divisor);
        auto val = as_integer(q);
        if (!val)
            throw invariant_error(
                "macwilliams_transform: non-rational coefficient (wrong cardinality?)");
        if (*val == 0) continue;
        if (*val < 0)
            throw invariant_error(
                "macwilliams_transform: negative coefficient (wrong cardinality?)");
        out.terms.emplace(exp, std::move(*val));
    }
    return out;
}

struct MacWilliamsReport {
    bool equal = false;
    std::optional<bool> sym_equal;         // reported for genus 1
    std::optional<ExpVec> first_mismatch;  // exponent vector, when unequal
    Integer cardinality = 1;
    Integer dual_cardinality = 1;
};

/// Checks genus_cwe(dual(C), g) == transform(genus_cwe(C, g)) / |C|^g exactly,
/// term by term; for g = 1 also compares both sides after symmetrization.
inline MacWilliamsReport verify_macwilliams(const Code& c, unsigned g,
                                            std::size_t span_cap = kDefaultSpanCap,
                                            std::size_t tuple_cap = kDefaultTupleCap) {
    MacWilliamsReport rep;
    rep.cardinality = c.cardinality;
    Code dual = dual_code(c, span_cap);
    rep.dual_cardinality = dual.cardinality;
    WeightEnumerator lhs = genus_cwe(dual, g, tuple_cap);
    WeightEnumerator rhs =
        macwilliams_transform(genus_cwe(c, g, tuple_cap), c.cardinality);
    rep.equal = lhs.terms == rhs.terms;
    if (!rep.equal) {
        auto li = lhs.terms.begin();
        auto ri = rhs.terms.begin();
        while (li != lhs.terms.end() && ri != rhs.terms.end() &&
               li->first == ri->first && li->second == ri->second) {
            ++li;
            ++ri;
        }
        if (li != lhs.terms.end())
            rep.first_mismatch = li->first;
        else if (ri != rhs.terms.end())
            rep.first_mismatch = ri->first;
    }
    if (g == 1) rep.sym_equal = symmetrize(lhs) == symmetrize(rhs);
    return rep;
}

}  // namespace zktheta
