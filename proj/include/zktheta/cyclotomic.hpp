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

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "zktheta/errors.hpp"
#include "zktheta/integer.hpp"

namespace zktheta {

// ---------------------------------------------------------------------------
// Dense integer polynomials, just enough to build cyclotomic polynomials.
// ---------------------------------------------------------------------------

/// Dense polynomial over Z; coefficient i is the coefficient of x^i.
/// Trailing zeros are trimmed, so degree() == c.size() - 1 for nonzero polys.
struct CycPoly {
    std::vector<Integer> c;

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

inline void poly_trim(CycPoly& p) {
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

inline CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    CycPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    poly_trim(r);
    return r;
}

/// Exact quotient a / b over Z[x]; b must be monic-leading-divisible and the
/// division must leave no remainder.
inline CycPoly poly_divexact(CycPoly a, const CycPoly& b) {
    if (b.is_zero()) throw invariant_error("polynomial division by zero");
    CycPoly q;
    if (a.c.size() < b.c.size()) {
        poly_trim(a);
        if (!a.is_zero()) throw invariant_error("inexact polynomial division");
        return q;
    }
    q.c.assign(a.c.size() - b.c.size() + 1, Integer(0));
    for (long i = static_cast<long>(q.c.size()) - 1; i >= 0; --i) {
        Integer coef =
            divide_exact(a.c[i + b.c.size() - 1], b.c.back(), "poly_divexact");
        q.c[i] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) a.c[i + j] -= coef * b.c[j];
    }
    poly_trim(a);
    if (!a.is_zero()) throw invariant_error("inexact polynomial division");
    poly_trim(q);
    return q;
}

inline unsigned totient(unsigned k) {
    unsigned result = k, m = k;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// k-th cyclotomic polynomial, computed by exact division of x^k - 1 by the
/// product of Phi_d over proper divisors d of k.
inline const CycPoly& cyclotomic_polynomial(unsigned k) {
    static std::map<unsigned, CycPoly> cache;
    static std::mutex mtx;
    if (k < 1) throw input_error("cyclotomic_polynomial: k must be >= 1");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // compute recursively without re-locking
    std::vector<unsigned> stack{k};
    while (!stack.empty()) {
        unsigned m = stack.back();
        if (cache.count(m)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        stack.pop_back();
        CycPoly xk1;  // x^m - 1
        xk1.c.assign(m + 1, Integer(0));
        xk1.c[0] = -1;
        xk1.c[m] = 1;
        CycPoly denom;
        denom.c = {Integer(1)};
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) denom = poly_mul(denom, cache.at(d));
        cache.emplace(m, poly_divexact(xk1, denom));
    }
    const CycPoly& phi = cache.at(k);
    if (phi.degree() != static_cast<long>(totient(k)))
        throw invariant_error("cyclotomic polynomial degree != phi(k)");
    return phi;
}

// ---------------------------------------------------------------------------
// The ring Z[eta_k], eta_k = exp(2*pi*i/k), as Z[x] / Phi_k(x).
//
// Representing modulo Phi_k (not x^k - 1) keeps the ring an integral domain,
// so "is this element a rational integer" is well defined.
// ---------------------------------------------------------------------------

/// Shared per-modulus data: Phi_k and fully reduced rows x^m mod Phi_k.
struct CycRing {
    unsigned k = 0;
    unsigned phi = 0;
    CycPoly modulus;
    // pow_rows[m] = coefficients of x^m mod Phi_k, m = 0 .. max_pow,
    // max_pow = phi + k - 2.  Covers every power a schoolbook product,
    // eta_pow, or a monomial-times-element product can produce.
    std::vector<std::vector<Integer>> pow_rows;
    unsigned max_pow = 0;
    // int64 copies for the hot MacWilliams path (valid at all desk-scale k).
    std::vector<std::vector<std::int64_t>> pow_rows_i64;
    bool rows_fit_i64 = true;
    // max l1 norm over rows, used for a-priori overflow bounds
    Integer row_l1_max = 1;
};

inline const CycRing& cyc_ring(unsigned k) {
    static std::map<unsigned, std::unique_ptr<CycRing>> cache;
    static std::mutex mtx;
    if (k < 1) throw input_error("cyc_ring: k must be >= 1");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return *it->second;

    auto ring = std::make_unique<CycRing>();
    ring->k = k;
    ring->modulus = cyclotomic_polynomial(k);
    ring->phi = static_cast<unsigned>(ring->modulus.degree());
    const unsigned phi = ring->phi;
    ring->max_pow = phi + k - 2;  // >= 2*phi-2 and >= k-1 since phi <= k
    ring->pow_rows.resize(ring->max_pow + 1);
    std::vector<Integer> cur(phi, Integer(0));
    if (phi > 0) cur[0] = 1;  // x^0
    for (unsigned m = 0; m <= ring->max_pow; ++m) {
        ring->pow_rows[m] = cur;
        // multiply by x and reduce: shift up, fold x^phi via the monic modulus
        Integer lead = phi > 0 ? cur[phi - 1] : Integer(0);
        for (unsigned i = phi; i-- > 1;) cur[i] = cur[i - 1];
        if (phi > 0) cur[0] = 0;
        if (lead != 0)
            for (unsigned i = 0; i < phi; ++i) cur[i] -= lead * ring->modulus.c[i];
    }
    for (auto& row : ring->pow_rows) {
        Integer l1(0);
        std::vector<std::int64_t> r64;
        r64.reserve(row.size());
        for (const auto& v : row) {
            l1 += abs(v);
            if (fits_int64(v))
                r64.push_back(to_int64(v));
            else
                ring->rows_fit_i64 = false;
        }
        if (l1 > ring->row_l1_max) ring->row_l1_max = l1;
        ring->pow_rows_i64.push_back(std::move(r64));
    }
    const CycRing& ref = *ring;
    cache.emplace(k, std::move(ring));
    return ref;
}

/// Element of Z[eta_k]: exactly phi(k) integer coefficients in the power
/// basis 1, eta, ..., eta^(phi(k)-1).
struct CycInt {
    unsigned k = 1;
    std::vector<Integer> c;

    bool operator==(const CycInt& o) const { return k == o.k && c == o.c; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }
};

inline CycInt cyc_zero(unsigned k) {
    return CycInt{k, std::vector<Integer>(cyc_ring(k).phi, Integer(0))};
}

inline CycInt cyc_from_integer(unsigned k, Integer v) {
    CycInt r = cyc_zero(k);
    if (!r.c.empty()) r.c[0] = std::move(v);
    else if (v != 0)
        throw invariant_error("nonzero constant in zero-rank ring");
    return r;
}

inline bool cyc_is_zero(const CycInt& a) {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

inline void check_same_ring(const CycInt& a, const CycInt& b) {
    if (a.k != b.k) throw input_error("cyclotomic modulus mismatch");
}

inline CycInt cyc_add(const CycInt& a, const CycInt& b) {
    check_same_ring(a, b);
    CycInt r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

inline CycInt cyc_sub(const CycInt& a, const CycInt& b) {
    check_same_ring(a, b);
    CycInt r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

inline CycInt cyc_neg(const CycInt& a) {
    CycInt r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline CycInt cyc_scale(const CycInt& a, const Integer& s) {
    CycInt r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

inline CycInt cyc_mul(const CycInt& a, const CycInt& b) {
    check_same_ring(a, b);
    const CycRing& ring = cyc_ring(a.k);
    const unsigned phi = ring.phi;
    if (phi == 0) return a;
    std::vector<Integer> conv(2 * phi - 1, Integer(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c[j] == 0) continue;
            conv[i + j] += a.c[i] * b.c[j];
        }
    }
    CycInt r = cyc_zero(a.k);
    for (unsigned m = 0; m < conv.size(); ++m) {
        if (conv[m] == 0) continue;
        if (m < phi) {
            r.c[m] += conv[m];
        } else {
            const auto& row = ring.pow_rows[m];
            for (unsigned i = 0; i < phi; ++i) r.c[i] += conv[m] * row[i];
        }
    }
    return r;
}

/// Per-coefficient exact division by a rational integer.
inline CycInt cyc_divexact(const CycInt& a, const Integer& d) {
    CycInt r = a;
    for (auto& x : r.c) x = divide_exact(x, d, "cyc_divexact");
    return r;
}

/// eta_k^m, reduced mod Phi_k (m may be negative; it is reduced mod k).
inline CycInt eta_pow(unsigned k, long long m) {
    const CycRing& ring = cyc_ring(k);
    long long r = m % static_cast<long long>(k);
    if (r < 0) r += k;
    CycInt out{k, ring.pow_rows[static_cast<unsigned>(r)]};
    return out;
}

/// Some(c0) iff the element is a rational integer (all higher coefficients 0).
inline std::optional<Integer> as_integer(const CycInt& a) {
    for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return std::nullopt;
    return a.c.empty() ? Integer(0) : a.c[0];
}

/// Character sum sum_{j=0}^{k-1} eta^(j m).  Exactly k when k | m, else 0;
/// the result is asserted to be a rational integer.
inline CycInt char_sum(unsigned k, long long m) {
    CycInt acc = cyc_zero(k);
    for (unsigned j = 0; j < k; ++j)
        acc = cyc_add(acc, eta_pow(k, m * static_cast<long long>(j)));
    if (!as_integer(acc))
        throw invariant_error("char_sum produced a non-rational value");
    return acc;
}

/// Numeric embedding at eta = exp(2*pi*i/k), for cross-checks only.
inline std::complex<double> cyc_embed(const CycInt& a) {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> eta = std::polar(1.0, two_pi / static_cast<double>(a.k));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = acc * eta + std::complex<double>(a.c[i].get_d(), 0.0);
    return acc;
}

}  // namespace zktheta
