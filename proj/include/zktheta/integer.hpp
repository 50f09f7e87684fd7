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

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "zktheta/errors.hpp"

namespace zktheta {

/// Exact arbitrary-precision integer.  All enumerator and series
/// coefficients are kept exact; nothing in the library rounds.
using Integer = mpz_class;

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// Exact quotient a / d; throws invariant_error if d does not divide a.
inline Integer divide_exact(const Integer& a, const Integer& d, const char* what) {
    if (d == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
        throw invariant_error(std::string("inexact division in ") + what);
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline std::string to_decimal(const Integer& a) { return a.get_str(); }

inline Integer from_decimal(const std::string& s) {
    Integer r;
    if (r.set_str(s, 10) != 0) throw input_error("not a decimal integer: " + s);
    return r;
}

inline bool fits_int64(const Integer& a) {
    return a >= Integer(INT64_MIN) && a <= Integer(INT64_MAX);
}

inline std::int64_t to_int64(const Integer& a) {
    if (!fits_int64(a)) throw invariant_error("integer out of int64 range");
    // mpz_get_si truncates to long; long is 64-bit on this target
    return static_cast<std::int64_t>(mpz_get_si(a.get_mpz_t()));
}

}  // namespace zktheta
