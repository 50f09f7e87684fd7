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
#include <limits>
#include <vector>

#include "zktheta/cyclotomic.hpp"
#include "zktheta/errors.hpp"
#include "zktheta/integer.hpp"

namespace zktheta {

// Truncated power series in u = e^(2*pi*i*z / scale), i.e. u = q^(1/scale)
// with q = e^(2*pi*i*z).  Construction-A theta series use scale = 2k so the
// exponent of a lattice vector (c + k*w)/sqrt(k) is the integer |c + k*w|^2;
// cyclotomic theta series use scale = 2p.  Coefficients are exact; only
// eval_series leaves the exact world.

template <class T>
struct QSeries {
    long scale = 2;
    long trunc = 0;                // coefficients kept for exponents 0..trunc
    std::vector<T> coeffs;         // size trunc + 1

    bool operator==(const QSeries& o) const {
        return scale == o.scale && trunc == o.trunc && coeffs == o.coeffs;
    }
};

namespace detail {
inline Integer zero_like(const Integer&) { return Integer(0); }
inline CycInt zero_like(const CycInt& c) { return cyc_zero(c.k); }
inline std::complex<double> zero_like(const std::complex<double>&) { return {}; }

inline void add_into(Integer& dst, const Integer& a, const Integer& b) { dst = a + b; }
inline void add_into(CycInt& dst, const CycInt& a, const CycInt& b) { dst = cyc_add(a, b); }
inline void add_into(std::complex<double>& dst, const std::complex<double>& a,
                     const std::complex<double>& b) { dst = a + b; }

inline void mul_acc(Integer& dst, const Integer& a, const Integer& b) { dst += a * b; }
inline void mul_acc(CycInt& dst, const CycInt& a, const CycInt& b) {
    dst = cyc_add(dst, cyc_mul(a, b));
}
inline void mul_acc(CycInt& dst, const CycInt& a, const Integer& b) {
    dst = cyc_add(dst, cyc_scale(a, b));
}
inline void mul_acc(std::complex<double>& dst, const std::complex<double>& a,
                    const std::complex<double>& b) { dst += a * b; }
inline void mul_acc(std::complex<double>& dst, const std::complex<double>& a,
                    const Integer& b) { dst += a * b.get_d(); }

inline Integer one_like(const Integer&) { return Integer(1); }
inline CycInt one_like(const CycInt& c) { return cyc_from_integer(c.k, 1); }
inline std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }

inline bool coeff_zero(const Integer& a) { return a == 0; }
inline bool coeff_zero(const CycInt& a) { return cyc_is_zero(a); }
inline bool coeff_zero(const std::complex<double>& a) { return a == std::complex<double>{}; }

inline std::complex<double> to_complex(const Integer& a) { return {a.get_d(), 0.0}; }
inline std::complex<double> to_complex(const CycInt& a) { return cyc_embed(a); }
inline std::complex<double> to_complex(const std::complex<double>& a) { return a; }
}  // namespace detail

template <class T>
QSeries<T> qs_zero(long scale, long trunc, const T& like) {
    if (trunc < 0) throw input_error("qseries: negative truncation");
    QSeries<T> s;
    s.scale = scale;
    s.trunc = trunc;
    s.coeffs.assign(static_cast<std::size_t>(trunc) + 1, detail::zero_like(like));
    return s;
}

template <class T>
void check_compatible(const QSeries<T>& a, const QSeries<T>& b) {
    if (a.scale != b.scale) throw input_error("qseries: scale mismatch");
    if (a.trunc != b.trunc) throw input_error("qseries: truncation mismatch");
}

template <class T>
QSeries<T> qs_add(const QSeries<T>& a, const QSeries<T>& b) {
    check_compatible(a, b);
    QSeries<T> r = a;
    for (std::size_t m = 0; m < r.coeffs.size(); ++m)
        detail::add_into(r.coeffs[m], a.coeffs[m], b.coeffs[m]);
    return r;
}

template <class T>
QSeries<T> qs_mul(const QSeries<T>& a, const QSeries<T>& b) {
    check_compatible(a, b);
    QSeries<T> r = qs_zero(a.scale, a.trunc, a.coeffs[0]);
    for (long i = 0; i <= a.trunc; ++i) {
        if (detail::coeff_zero(a.coeffs[i])) continue;
        for (long j = 0; i + j <= a.trunc; ++j) {
            if (detail::coeff_zero(b.coeffs[j])) continue;
            detail::mul_acc(r.coeffs[i + j], a.coeffs[i], b.coeffs[j]);
        }
    }
    return r;
}

template <class T, class S>
QSeries<T> qs_scale(const QSeries<T>& a, const S& s) {
    QSeries<T> r = a;
    for (auto& c : r.coeffs) {
        T tmp = detail::zero_like(c);
        detail::mul_acc(tmp, c, s);
        c = std::move(tmp);
    }
    return r;
}

template <class T>
QSeries<T> qs_one(long scale, long trunc, const T& like, const T& one) {
    QSeries<T> s = qs_zero(scale, trunc, like);
    s.coeffs[0] = one;
    return s;
}

/// Value of the truncated series at u = e^(2*pi*i*z/scale), with the
/// coefficient-free geometric tail r^(trunc+1) / (1 - r), r = |u|.
struct SeriesEval {
    std::complex<double> value;
    double radius = 0.0;
    double geometric_tail = 0.0;
};

template <class T>
SeriesEval eval_series(const QSeries<T>& s, std::complex<double> z) {
    if (!(z.imag() > 0.0)) throw input_error("eval_series: Im z must be > 0");
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> u =
        std::exp(std::complex<double>(0.0, two_pi) * z / static_cast<double>(s.scale));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t m = s.coeffs.size(); m-- > 0;)
        acc = acc * u + detail::to_complex(s.coeffs[m]);
    SeriesEval e;
    e.value = acc;
    e.radius = std::abs(u);
    e.geometric_tail =
        e.radius < 1.0
            ? std::pow(e.radius, static_cast<double>(s.trunc) + 1.0) / (1.0 - e.radius)
            : std::numeric_limits<double>::infinity();
    return e;
}

inline QSeries<CycInt> to_cyc_series(const QSeries<Integer>& s, unsigned k) {
    QSeries<CycInt> r = qs_zero(s.scale, s.trunc, cyc_zero(k));
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        if (s.coeffs[m] != 0) r.coeffs[m] = cyc_from_integer(k, s.coeffs[m]);
    return r;
}

/// Per-coefficient exact division; throws invariant_error on inexactness.
inline QSeries<Integer> qs_divexact(const QSeries<Integer>& s, const Integer& d) {
    QSeries<Integer> r = s;
    for (auto& c : r.coeffs) c = divide_exact(c, d, "qs_divexact");
    return r;
}

inline QSeries<CycInt> qs_divexact(const QSeries<CycInt>& s, const Integer& d) {
    QSeries<CycInt> r = s;
    for (auto& c : r.coeffs) c = cyc_divexact(c, d);
    return r;
}

/// Extracts the rational-integer series; throws invariant_error when some
/// coefficient is not a rational integer.
inline QSeries<Integer> qs_as_integer(const QSeries<CycInt>& s) {
    QSeries<Integer> r = qs_zero(s.scale, s.trunc, Integer(0));
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        auto v = as_integer(s.coeffs[m]);
        if (!v) throw invariant_error("series coefficient is not a rational integer");
        r.coeffs[m] = std::move(*v);
    }
    return r;
}

}  // namespace zktheta
