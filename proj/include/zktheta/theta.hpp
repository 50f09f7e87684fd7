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
#include <optional>
#include <vector>

#include "zktheta/codes.hpp"
#include "zktheta/enumerator.hpp"
#include "zktheta/errors.hpp"
#include "zktheta/macwilliams.hpp"
#include "zktheta/qseries.hpp"

namespace zktheta {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// ---------------------------------------------------------------------------
// Construction A.  Gamma_C = (1/sqrt(k)) * preimage of C under reduction
// mod k; its theta series lives in u = q^(1/2k), where the u-exponent of the
// vector (c + k*w)/sqrt(k) is the integer |c + k*w|^2.
// ---------------------------------------------------------------------------

/// Theta series of the arithmetic progression kZ + j: coefficient of u^(x^2)
/// for every integer x = j (mod k).
inline QSeries<Integer> a_series(unsigned k, unsigned j, long trunc) {
    if (k < 2) throw input_error("a_series: k must be >= 2");
    if (j >= k) throw input_error("a_series: j out of range");
    QSeries<Integer> s = qs_zero(2L * k, trunc, Integer(0));
    const double root = std::sqrt(static_cast<double>(trunc));
    const long tmin = static_cast<long>(std::floor((-root - static_cast<double>(j)) /
                                                   static_cast<double>(k))) - 1;
    const long tmax = static_cast<long>(std::ceil((root - static_cast<double>(j)) /
                                                  static_cast<double>(k))) + 1;
    for (long t = tmin; t <= tmax; ++t) {
        const long long x = static_cast<long long>(j) + t * static_cast<long long>(k);
        const long long m = x * x;
        if (m <= trunc) s.coeffs[static_cast<std::size_t>(m)] += 1;
    }
    return s;
}

inline std::vector<QSeries<Integer>> a_series_all(unsigned k, long trunc) {
    std::vector<QSeries<Integer>> out;
    out.reserve(k);
    for (unsigned j = 0; j < k; ++j) out.push_back(a_series(k, j, trunc));
    return out;
}

namespace detail {

inline void theta_dfs(const Code& c, std::span<const std::uint16_t> w, unsigned i,
                      long long used, long trunc, QSeries<Integer>& out,
                      std::uint64_t& nodes, std::uint64_t budget) {
    if (++nodes > budget)
        throw resource_error("lattice enumeration budget exceeded; raise --node-budget");
    if (i == c.n) {
        out.coeffs[static_cast<std::size_t>(used)] += 1;
        return;
    }
    const long long rem = trunc - used;
    const double root = std::sqrt(static_cast<double>(rem));
    const long long j = w[i];
    long t = static_cast<long>(std::floor((-root - static_cast<double>(j)) /
                                          static_cast<double>(c.k))) - 1;
    const long tmax = static_cast<long>(std::ceil((root - static_cast<double>(j)) /
                                                  static_cast<double>(c.k))) + 1;
    for (; t <= tmax; ++t) {
        const long long x = j + static_cast<long long>(t) * c.k;
        const long long sq = x * x;
        if (sq > rem) continue;
        theta_dfs(c, w, i + 1, used + sq, trunc, out, nodes, budget);
    }
}

}  // namespace detail

/// Theta series of Gamma_C by direct lattice enumeration (coordinate DFS with
/// norm-budget pruning).  Deliberately independent of the product formula so
/// it can serve as the oracle against compose().
inline QSeries<Integer> theta_construction_a(const Code& c, long trunc,
                                             std::uint64_t budget = kDefaultNodeBudget) {
    if (!c.materialized)
        throw resource_error("theta_construction_a: code span is not materialized");
    QSeries<Integer> out = qs_zero(2L * c.k, trunc, Integer(0));
    std::uint64_t nodes = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        detail::theta_dfs(c, c.word(i), 0, 0, trunc, out, nodes, budget);
    return out;
}

// ---------------------------------------------------------------------------
// Composition W(s_0, ..., s_{v-1}) of an enumerator with a list of series.
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
QSeries<T> compose_terms(const std::map<ExpVec, Integer>& terms, unsigned n,
                         const std::vector<QSeries<T>>& series) {
    if (series.empty()) throw input_error("compose: empty series list");
    const long scale = series[0].scale;
    const long trunc = series[0].trunc;
    for (const auto& s : series)
        if (s.scale != scale || s.trunc != trunc)
            throw input_error("compose: mixed series scales or truncations");
    const T& like = series[0].coeffs[0];
    // lazily built powers: pows[j][e-1] = series[j]^e
    std::vector<std::vector<QSeries<T>>> pows(series.size());
    auto power = [&](std::size_t j, unsigned e) -> const QSeries<T>& {
        auto& pj = pows[j];
        if (pj.empty()) pj.push_back(series[j]);
        while (pj.size() < e) pj.push_back(qs_mul(pj.back(), series[j]));
        return pj[e - 1];
    };
    QSeries<T> acc = qs_zero(scale, trunc, like);
    for (const auto& [exp, coeff] : terms) {
        if (exp.size() != series.size())
            throw input_error("compose: enumerator variable count != series count");
        QSeries<T> prod = qs_one(scale, trunc, like, detail::one_like(like));
        unsigned deg = 0;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            if (!exp[j]) continue;
            deg += exp[j];
            prod = qs_mul(prod, power(j, exp[j]));
        }
        if (deg != n) throw input_error("compose: non-homogeneous enumerator");
        acc = qs_add(acc, qs_scale(prod, coeff));
    }
    return acc;
}

}  // namespace detail

/// W_C(s_0, ..., s_{k-1}) for a genus-1 enumerator.
template <class T>
QSeries<T> compose(const WeightEnumerator& w, const std::vector<QSeries<T>>& series) {
    if (w.g != 1) throw input_error("compose: genus-1 enumerator required");
    if (series.size() != w.k)
        throw input_error("compose: need exactly k series");
    return detail::compose_terms(w.terms, w.n, series);
}

/// S_C(s_0, ..., s_{floor(k/2)}) for a symmetrized enumerator.
template <class T>
QSeries<T> compose(const SymWeightEnumerator& s, const std::vector<QSeries<T>>& series) {
    if (series.size() != s.var_count())
        throw input_error("compose: need floor(k/2)+1 series");
    return detail::compose_terms(s.terms, s.n, series);
}

// ---------------------------------------------------------------------------
// Code <-> lattice dictionary.
// ---------------------------------------------------------------------------

/// det(Gamma_C)^2 = k^n / |C|^2 kept as an exact reduced fraction;
/// equals 1 exactly when the code is self-dual.
struct LatticeHandle {
    unsigned k = 2;
    unsigned n = 1;
    Integer det_sq_num = 1;
    Integer det_sq_den = 1;

    bool unimodular() const { return det_sq_num == det_sq_den; }
    double det() const {
        return std::sqrt(det_sq_num.get_d() / det_sq_den.get_d());
    }
};

inline LatticeHandle lattice(const Code& c) {
    LatticeHandle h;
    h.k = c.k;
    h.n = c.n;
    h.det_sq_num = ipow(static_cast<unsigned long>(c.k),
                        static_cast<unsigned long>(c.n));
    h.det_sq_den = c.cardinality * c.cardinality;
    Integer g = gcd(h.det_sq_num, h.det_sq_den);
    h.det_sq_num /= g;
    h.det_sq_den /= g;
    return h;
}

// ---------------------------------------------------------------------------
// Exact series identities (Theorems 1 and 2, Corollaries 1 and 2).
// ---------------------------------------------------------------------------

struct Theorem1Report {
    bool equal = false;
    long first_mismatch = -1;  // u-exponent of the first differing coefficient
};

template <class T>
long first_series_mismatch(const QSeries<T>& a, const QSeries<T>& b) {
    for (long m = 0; m <= std::min(a.trunc, b.trunc); ++m)
        if (!(a.coeffs[m] == b.coeffs[m])) return m;
    return a.trunc == b.trunc ? -1 : std::min(a.trunc, b.trunc) + 1;
}

/// theta_{Gamma_C} == W_C(A_0, ..., A_{k-1}), coefficient by coefficient.
inline Theorem1Report verify_theorem1(const Code& c, long trunc,
                                      std::uint64_t budget = kDefaultNodeBudget) {
    Theorem1Report r;
    auto lhs = theta_construction_a(c, trunc, budget);
    auto rhs = compose(cwe(c), a_series_all(c.k, trunc));
    r.first_mismatch = first_series_mismatch(lhs, rhs);
    r.equal = r.first_mismatch < 0;
    return r;
}

struct Theorem2Report {
    bool equal = false;
    long first_mismatch = -1;
    bool self_dual = false;
    bool corollary1_holds = false;  // self-dual rotation invariance
    bool corollary2_equal = false;  // symmetrized identity
};

/// W_{C^perp}(A_j) == (1/|C|) W_C(B_0, ..., B_{k-1}) with
/// B_m = sum_j eta^(jm) A_j, expanded exactly over Z[eta_k]; also checks the
/// symmetrized form (Corollary 2) through symmetrize() of both sides, and
/// reports the self-dual restatement (Corollary 1), whose 1/sqrt(k)^n
/// normalization equals 1/|C| exactly when C = C^perp.
inline Theorem2Report verify_theorem2(const Code& c, long trunc,
                                      std::size_t span_cap = kDefaultSpanCap,
                                      std::uint64_t budget = kDefaultNodeBudget) {
    (void)budget;
    Theorem2Report r;
    const unsigned k = c.k;
    Code dual = dual_code(c, span_cap);
    auto A = a_series_all(k, trunc);

    auto lhs = compose(cwe(dual), A);

    std::vector<QSeries<CycInt>> B;
    B.reserve(k);
    for (unsigned m = 0; m < k; ++m) {
        QSeries<CycInt> bm = qs_zero(2L * k, trunc, cyc_zero(k));
        for (unsigned j = 0; j < k; ++j)
            bm = qs_add(bm, qs_scale(to_cyc_series(A[j], k),
                                     eta_pow(k, static_cast<long long>(j) * m)));
        B.push_back(std::move(bm));
    }
    auto rhs = qs_as_integer(qs_divexact(compose(cwe(c), B), c.cardinality));

    r.first_mismatch = first_series_mismatch(lhs, rhs);
    r.equal = r.first_mismatch < 0;
    r.self_dual = classify(c).self_dual;
    r.corollary1_holds = r.self_dual && r.equal;

    // Corollary 2: fold X_j ~ X_{k-j} on both sides.
    const unsigned half = k / 2;
    std::vector<QSeries<Integer>> A_fold(A.begin(), A.begin() + half + 1);
    auto lhs_sym = compose(symmetrize(cwe(dual)), A_fold);
    std::vector<QSeries<CycInt>> B_fold;
    B_fold.reserve(half + 1);
    for (unsigned m = 0; m <= half; ++m) {
        QSeries<CycInt> bm = qs_zero(2L * k, trunc, cyc_zero(k));
        for (unsigned j = 0; j < k; ++j) {
            const unsigned fold = j <= half ? j : k - j;
            bm = qs_add(bm, qs_scale(to_cyc_series(A[fold], k),
                                     eta_pow(k, static_cast<long long>(j) * m)));
        }
        B_fold.push_back(std::move(bm));
    }
    auto rhs_sym = qs_as_integer(
        qs_divexact(compose(symmetrize(cwe(c)), B_fold), c.cardinality));
    r.corollary2_equal = first_series_mismatch(lhs_sym, rhs_sym) < 0;
    return r;
}

// ---------------------------------------------------------------------------
// Numeric transformation laws (Lemma 1, Proposition 3) and the structural
// T-invariance / Proposition 1 checks.
// ---------------------------------------------------------------------------

struct NumericCheck {
    std::complex<double> z;
    double residual = 0.0;
    double tail_bound = 0.0;
    bool pass = false;  // residual < 1e-9 with certified tails < 1e-12
};

inline constexpr double kNumericResidualTol = 1e-9;
inline constexpr double kNumericTailTol = 1e-12;

namespace detail {

inline std::complex<double> minus_inverse(std::complex<double> z) {
    return -1.0 / z;
}

/// Principal branch of (z/i)^p; z/i has positive real part on the upper
/// half plane, so the branch cut is never approached.
inline std::complex<double> z_over_i_pow(std::complex<double> z, double p) {
    std::complex<double> w(z.imag(), -z.real());  // z / i
    return std::pow(w, p);
}

inline double series_radius(std::complex<double> z, long scale) {
    const double two_pi = 6.283185307179586476925286766559;
    return std::exp(-two_pi * z.imag() / static_cast<double>(scale));
}

/// sum_{m > N} (2*sqrt(m)+1)^n r^m, the crude lattice-count tail bound.
inline double tail_bound_lattice(unsigned n, double r, long N) {
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    double acc = 0.0;
    double rm = std::pow(r, static_cast<double>(N + 1));
    for (long m = N + 1;; ++m) {
        const double term =
            std::pow(2.0 * std::sqrt(static_cast<double>(m)) + 1.0,
                     static_cast<double>(n)) * rm;
        acc += term;
        rm *= r;
        if (term < acc * 1e-22 + 1e-300) break;
        if (m > N + 2'000'000) return std::numeric_limits<double>::infinity();
    }
    return acc;
}

}  // namespace detail

/// Residual of A_j(-1/z) = (1/sqrt(k)) (z/i)^(1/2) sum_m e^(2 pi i j m / k) A_m(z).
/// Both sides are evaluated from the truncated series; the A_j coefficients
/// are at most 2, so the certified tail is 2x the geometric tail.
inline NumericCheck check_lemma1(unsigned k, unsigned j, std::complex<double> z,
                                 long trunc) {
    if (!(z.imag() > 0.0)) throw input_error("check_lemma1: Im z must be > 0");
    auto A = a_series_all(k, trunc);
    const std::complex<double> zi = detail::minus_inverse(z);
    auto lhs_eval = eval_series(A[j], zi);
    double tail = 2.0 * lhs_eval.geometric_tail;
    std::complex<double> rhs(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (unsigned m = 0; m < k; ++m) {
        auto em = eval_series(A[m], z);
        tail = std::max(tail, 2.0 * em.geometric_tail);
        rhs += std::polar(1.0, two_pi * j * m / static_cast<double>(k)) * em.value;
    }
    rhs *= detail::z_over_i_pow(z, 0.5) / std::sqrt(static_cast<double>(k));
    NumericCheck r;
    r.z = z;
    r.tail_bound = tail;
    if (!(tail < kNumericTailTol))
        throw resource_error("check_lemma1: tail bound not achievable at this truncation");
    r.residual = std::abs(lhs_eval.value - rhs);
    r.pass = r.residual < kNumericResidualTol;
    return r;
}

/// Residual of theta_{Gamma_C}(-1/z) = (1/det Gamma_C) (z/i)^(n/2)
/// theta_{Gamma_{C^perp}}(z), using Gamma_C^* = Gamma_{C^perp}.
inline NumericCheck check_prop3(const Code& c, std::complex<double> z, long trunc,
                                std::size_t span_cap = kDefaultSpanCap,
                                std::uint64_t budget = kDefaultNodeBudget) {
    if (!(z.imag() > 0.0)) throw input_error("check_prop3: Im z must be > 0");
    Code dual = dual_code(c, span_cap);
    auto th = theta_construction_a(c, trunc, budget);
    auto th_dual = theta_construction_a(dual, trunc, budget);
    const std::complex<double> zi = detail::minus_inverse(z);
    const double r1 = detail::series_radius(zi, th.scale);
    const double r2 = detail::series_radius(z, th.scale);
    const double tail = std::max(detail::tail_bound_lattice(c.n, r1, trunc),
                                 detail::tail_bound_lattice(c.n, r2, trunc));
    if (!(tail < kNumericTailTol))
        throw resource_error("check_prop3: tail bound not achievable at this truncation");
    auto lhs = eval_series(th, zi).value;
    auto rhs = detail::z_over_i_pow(z, static_cast<double>(c.n) / 2.0) *
               eval_series(th_dual, z).value / lattice(c).det();
    NumericCheck rep;
    rep.z = z;
    rep.tail_bound = tail;
    rep.residual = std::abs(lhs - rhs);
    rep.pass = rep.residual < kNumericResidualTol;
    return rep;
}

struct TInvarianceReport {
    bool pass = false;
    long offending_exponent = -1;
};

/// Exact, series-level form of T-invariance for even lattices: every nonzero
/// coefficient of theta_{Gamma_C} sits at a u-exponent divisible by 2k.
/// Requires k even and C doubly even (Gamma_C even), else input_error.
inline TInvarianceReport check_T_invariance(const Code& c, long trunc = 60,
                                            std::uint64_t budget = kDefaultNodeBudget) {
    if (c.k % 2 != 0)
        throw input_error("check_T_invariance: k must be even");
    auto cls = classify(c);
    if (!cls.doubly_even.value_or(false))
        throw input_error("check_T_invariance: code is not doubly even");
    auto th = theta_construction_a(c, trunc, budget);
    TInvarianceReport r;
    r.pass = true;
    for (long m = 0; m <= th.trunc; ++m)
        if (th.coeffs[m] != 0 && m % (2L * c.k) != 0) {
            r.pass = false;
            r.offending_exponent = m;
            break;
        }
    return r;
}

struct Prop1Report {
    bool self_orthogonal = false;
    bool integral_lattice = false;
    std::optional<bool> doubly_even;   // k even only
    std::optional<bool> even_lattice;  // k even only
    bool self_dual = false;
    bool unimodular_and_integral = false;
    bool eq1 = false;
    std::optional<bool> eq2;
    bool eq3 = false;

    bool all_hold() const {
        return eq1 && eq3 && (!eq2.has_value() || *eq2);
    }
};

/// The three computable equivalences of the code--lattice dictionary:
/// (1) C self-orthogonal  <->  all rational inner products on the lattice
///     generating set {g_i/sqrt(k)} u {sqrt(k) e_i} are integers;
/// (2) for even k, C doubly even  <->  all theta exponents divisible by 2k
///     (checked at the given truncation);
/// (3) C self-dual  <->  det(Gamma_C)^2 = 1 together with (1).
inline Prop1Report verify_prop1(const Code& c, long trunc = 60,
                                std::uint64_t budget = kDefaultNodeBudget) {
    Prop1Report r;
    auto cls = classify(c);
    r.self_orthogonal = cls.self_orthogonal;
    // products with the sqrt(k) e_i rows are always integral; the generator
    // pairs decide integrality
    r.integral_lattice = true;
    for (std::size_t i = 0; i < c.generators.size() && r.integral_lattice; ++i)
        for (std::size_t j = i; j < c.generators.size(); ++j)
            if (dot_over_z(c.generators[i], c.generators[j]) % c.k != 0) {
                r.integral_lattice = false;
                break;
            }
    r.eq1 = r.self_orthogonal == r.integral_lattice;
    if (c.k % 2 == 0) {
        r.doubly_even = cls.doubly_even;
        bool even_lat = true;
        if (c.materialized) {
            auto th = theta_construction_a(c, trunc, budget);
            for (long m = 0; m <= th.trunc && even_lat; ++m)
                if (th.coeffs[m] != 0 && m % (2L * c.k) != 0) even_lat = false;
            r.even_lattice = even_lat;
            r.eq2 = (*r.doubly_even == even_lat);
        }
    }
    r.self_dual = cls.self_dual;
    r.unimodular_and_integral = lattice(c).unimodular() && r.integral_lattice;
    r.eq3 = r.self_dual == r.unimodular_and_integral;
    return r;
}

}  // namespace zktheta
