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
#include <cstdio>
#include <string>

#include <json.hpp>

#include "zktheta/codes.hpp"
#include "zktheta/cyclotomic.hpp"
#include "zktheta/enumerator.hpp"
#include "zktheta/qseries.hpp"

namespace zktheta {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so report payloads serialize identically
/// across runs.
inline double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline Json json_complex(std::complex<double> z) {
    return Json::array({round12(z.real()), round12(z.imag())});
}

inline Json to_json(const CodeReport& r) {
    Json j;
    j["cardinality"] = to_decimal(r.cardinality);
    j["self_orthogonal"] = r.self_orthogonal;
    j["self_dual"] = r.self_dual;
    if (r.doubly_even.has_value())
        j["doubly_even"] = *r.doubly_even;
    else
        j["doubly_even"] = nullptr;
    return j;
}

inline Json to_json(const WeightEnumerator& w) {
    Json j;
    j["k"] = w.k;
    j["g"] = w.g;
    j["n"] = w.n;
    Json terms = Json::array();
    for (const auto& [exp, coeff] : w.terms) {
        Json t;
        t["exp"] = Json::array();
        for (std::uint8_t e : exp) t["exp"].push_back(static_cast<unsigned>(e));
        t["coeff"] = to_decimal(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json to_json(const SymWeightEnumerator& s) {
    Json j;
    j["k"] = s.k;
    j["n"] = s.n;
    j["vars"] = s.var_count();
    Json terms = Json::array();
    for (const auto& [exp, coeff] : s.terms) {
        Json t;
        t["exp"] = Json::array();
        for (std::uint8_t e : exp) t["exp"].push_back(static_cast<unsigned>(e));
        t["coeff"] = to_decimal(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json to_json(const QSeries<Integer>& s) {
    Json j;
    j["scale"] = s.scale;
    j["trunc"] = s.trunc;
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(to_decimal(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

/// Report envelope used by every CLI verification subcommand.
inline Json report_json(const std::string& identity, Json params,
                        const std::string& verdict, Json evidence,
                        double elapsed_ms) {
    Json j;
    j["identity"] = identity;
    j["params"] = std::move(params);
    j["verdict"] = verdict;
    j["evidence"] = std::move(evidence);
    j["elapsed_ms"] = round12(elapsed_ms);
    return j;
}

}  // namespace zktheta
