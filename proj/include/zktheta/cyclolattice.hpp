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
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "zktheta/codes.hpp"
#include "zktheta/enumerator.hpp"
#include "zktheta/errors.hpp"
#include "zktheta/qseries.hpp"
#include "zktheta/theta.hpp"

namespace zktheta {

// Lattices over the ring of integers D = Z[xi] of the p-th cyclotomic field,
// p an odd prime.  A coordinate is x = sum_j a_j xi^j with integer a_j,
// j = 0..p-2.  Reduction modulo the ideal B = <1 - xi> sends x to
// sum_j a_j mod p, identifying D/B with F_p.
//
// Norms are measured by the trace form.  With Tr_{K/Q}(xi^m) = p*[p|m] - 1
// and Tr_{K/Q} = 2 Tr_{K+/Q} on the real subfield,
//
//   2p * Tr_{K+/Q}(x conj(x) / p) = p * sum a_j^2 - (sum a_j)^2,
//
// a positive definite integer form; series in v = e^(2 pi i z / 2p) then have
// integer exponents.  The closed form is validated against the numeric
// embedding oracle sum_i |sigma_i(x)|^2 before anything is built on it.

/// Element of D for a fixed odd prime p: integer coefficients of
/// 1, xi, ..., xi^(p-2).
struct CycCoord {
    unsigned p = 3;
    std::vector<long> a;  // length p-1
};

/// Point of D^n.
struct CycVector {
    std::vector<CycCoord> coords;
};

inline bool is_odd_prime(unsigned p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void check_coord(const CycCoord& x) {
    if (!is_odd_prime(x.p)) throw input_error("cyclolattice: p must be an odd prime");
    if (x.a.size() != x.p - 1)
        throw input_error("cyclolattice: coordinate needs exactly p-1 coefficients");
}

/// rho(x) = sum of coefficients mod p (reduction modulo B = <1 - xi>).
inline unsigned reduce_mod_B(const CycCoord& x) {
    check_coord(x);
    long long s = 0;
    for (long v : x.a) s += v;
    long long r = s % static_cast<long long>(x.p);
    if (r < 0) r += x.p;
    return static_cast<unsigned>(r);
}

/// 2p * Tr_{K+/Q}(x conj(x) / p) = p * sum a_j^2 - (sum a_j)^2.
/// Zero iff x = 0.
inline long long trace_form(const CycCoord& x) {
    check_coord(x);
    long long s = 0, sq = 0;
    for (long v : x.a) {
        s += v;
        sq += static_cast<long long>(v) * v;
    }
    return static_cast<long long>(x.p) * sq - s * s;
}

/// Numeric oracle for the closed-form trace: sum over the p-1 complex
/// embeddings of |sigma_i(x)|^2.
inline double embed_norm(const CycCoord& x) {
    check_coord(x);
    const double two_pi = 6.283185307179586476925286766559;
    double acc = 0.0;
    for (unsigned i = 1; i < x.p; ++i) {
        std::complex<double> v(0.0, 0.0);
        for (std::size_t j = x.a.size(); j-- > 0;)
            v = v * std::polar(1.0, two_pi * i / static_cast<double>(x.p)) +
                std::complex<double>(static_cast<double>(x.a[j]), 0.0);
        acc += std::norm(v);
    }
    return acc;
}

namespace detail {

/// Per-residue counts of coordinates by trace value: scan[r] lists
/// (trace, multiplicity) sorted by trace, over the box |a_j| <= floor(sqrt(N)),
/// which covers everything since trace_form(a) >= sum a_j^2.
struct CoordScan {
    unsigned p = 3;
    long trunc = 0;
    std::vector<std::vector<std::pair<long long, Integer>>> per_residue;
};

inline void coord_scan_rec(unsigned p, long trunc, long bound,
                           std::vector<long>& a, unsigned i, long long sumsq,
                           std::uint64_t& nodes, std::uint64_t budget,
                           std::vector<std::map<long long, Integer>>& buckets) {
    if (++nodes > budget)
        throw resource_error("cyclolattice box scan budget exceeded");
    if (i == p - 1) {
        CycCoord x{p, a};
        long long tf = trace_form(x);
        if (tf <= trunc) buckets[reduce_mod_B(x)][tf] += 1;
        return;
    }
    for (long v = -bound; v <= bound; ++v) {
        long long nsq = sumsq + static_cast<long long>(v) * v;
        if (nsq > trunc) continue;
        a[i] = v;
        coord_scan_rec(p, trunc, bound, a, i + 1, nsq, nodes, budget, buckets);
    }
    a[i] = 0;
}

inline CoordScan scan_coordinates(unsigned p, long trunc, std::uint64_t budget) {
    if (!is_odd_prime(p)) throw input_error("cyclolattice: p must be an odd prime");
    if (trunc < 0) throw input_error("cyclolattice: negative truncation");
    CoordScan s;
    s.p = p;
    s.trunc = trunc;
    const long bound = static_cast<long>(std::sqrt(static_cast<double>(trunc)));
    std::vector<std::map<long long, Integer>> buckets(p);
    std::vector<long> a(p - 1, 0);
    std::uint64_t nodes = 0;
    coord_scan_rec(p, trunc, bound, a, 0, 0, nodes, budget, buckets);
    s.per_residue.resize(p);
    for (unsigned r = 0; r < p; ++r)
        for (auto& [tf, cnt] : buckets[r]) s.per_residue[r].emplace_back(tf, cnt);
    return s;
}

}  // namespace detail

/// theta_j(z) = sum over x in B + j of v^(trace_form(x)), v = e^(2 pi i z/2p):
/// counts coordinates with rho = j by trace value.
inline std::vector<QSeries<Integer>> theta_battery(unsigned p, long trunc,
                                                   std::uint64_t budget = kDefaultNodeBudget) {
    auto scan = detail::scan_coordinates(p, trunc, budget);
    std::vector<QSeries<Integer>> out;
    out.reserve(p);
    for (unsigned j = 0; j < p; ++j) {
        QSeries<Integer> s = qs_zero(2L * p, trunc, Integer(0));
        for (const auto& [tf, cnt] : scan.per_residue[j])
            s.coeffs[static_cast<std::size_t>(tf)] += cnt;
        out.push_back(std::move(s));
    }
    return out;
}

inline QSeries<Integer> theta_j(unsigned p, unsigned j, long trunc,
                                std::uint64_t budget = kDefaultNodeBudget) {
    if (j >= p) throw input_error("theta_j: j out of range");
    return theta_battery(p, trunc, budget)[j];
}

namespace detail {

inline void cyclo_dfs(const CoordScan& scan, const Code& c,
                      std::span<const std::uint16_t> w, unsigned i, long long used,
                      const Integer& ways, QSeries<Integer>& out,
                      std::uint64_t& nodes, std::uint64_t budget) {
    if (++nodes > budget)
        throw resource_error("cyclolattice enumeration budget exceeded");
    if (i == c.n) {
        out.coeffs[static_cast<std::size_t>(used)] += ways;
        return;
    }
    for (const auto& [tf, cnt] : scan.per_residue[w[i]]) {
        if (used + tf > scan.trunc) break;  // sorted by trace
        cyclo_dfs(scan, c, w, i + 1, used + tf, ways * cnt, out, nodes, budget);
    }
}

}  // namespace detail

/// Theta series of Gamma_C = rho^{-1}(C) in D^n by per-codeword,
/// per-coordinate enumeration with a running trace budget — independent of
/// the product formula of the composition route.
inline QSeries<Integer> theta_cyclolattice(unsigned p, const Code& c, long trunc,
                                           std::uint64_t budget = kDefaultNodeBudget) {
    if (c.k != p) throw input_error("theta_cyclolattice: code modulus != p");
    if (!c.materialized)
        throw resource_error("theta_cyclolattice: code span is not materialized");
    auto scan = detail::scan_coordinates(p, trunc, budget);
    QSeries<Integer> out = qs_zero(2L * p, trunc, Integer(0));
    std::uint64_t nodes = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        detail::cyclo_dfs(scan, c, c.word(i), 0, 0, Integer(1), out, nodes, budget);
    return out;
}

struct Theorem4Report {
    bool equal = false;
    long first_mismatch = -1;
    bool self_orthogonal = false;
};

/// theta_{Gamma_C} == W_C(theta_0, ..., theta_{p-1}) up to the truncation.
/// The paper states the identity under C subset of C^perp; that hypothesis is
/// enforced by default but can be disabled, since the product factorization
/// never uses it.
inline Theorem4Report verify_theorem4(unsigned p, const Code& c, long trunc,
                                      bool require_self_orthogonal = true,
                                      std::uint64_t budget = kDefaultNodeBudget) {
    if (c.k != p) throw input_error("verify_theorem4: code modulus != p");
    Theorem4Report r;
    r.self_orthogonal = classify(c).self_orthogonal;
    if (require_self_orthogonal && !r.self_orthogonal)
        throw input_error("verify_theorem4: code is not self-orthogonal "
                          "(pass the override to check anyway)");
    auto lhs = theta_cyclolattice(p, c, trunc, budget);
    auto rhs = compose(cwe(c), theta_battery(p, trunc, budget));
    r.first_mismatch = first_series_mismatch(lhs, rhs);
    r.equal = r.first_mismatch < 0;
    return r;
}

struct TraceGateReport {
    unsigned p = 3;
    std::size_t samples = 0;
    double max_abs_error = 0.0;
    bool pass = false;  // max error < 1e-9
};

/// Validation gate for the closed-form trace: compares against the numeric
/// embedding oracle on pseudo-random coordinates.
template <class Rng>
TraceGateReport trace_form_gate(unsigned p, std::size_t samples, Rng& rng,
                                long coeff_bound = 30) {
    TraceGateReport rep;
    rep.p = p;
    rep.samples = samples;
    std::uniform_int_distribution<long> dist(-coeff_bound, coeff_bound);
    for (std::size_t s = 0; s < samples; ++s) {
        CycCoord x{p, std::vector<long>(p - 1)};
        for (auto& v : x.a) v = dist(rng);
        const double err = std::abs(static_cast<double>(trace_form(x)) - embed_norm(x));
        rep.max_abs_error = std::max(rep.max_abs_error, err);
    }
    rep.pass = rep.max_abs_error < 1e-9;
    return rep;
}

}  // namespace zktheta
