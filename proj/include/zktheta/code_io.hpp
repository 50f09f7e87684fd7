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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zktheta/codes.hpp"
#include "zktheta/errors.hpp"

namespace zktheta {

// Code text format:
//   k <int>
//   n <int>
//   one generator row per line, space-separated residues
// '#' starts a comment; blank lines are ignored.  Row entries may be any
// integers and are reduced mod k.

inline Code parse_code_text(std::istream& in,
                            std::size_t span_cap = kDefaultSpanCap) {
    long long k = -1, n = -1;
    std::vector<std::vector<long long>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (k < 0) {
            long long v;
            if (first != "k" || !(ls >> v) || v < 2)
                throw input_error("code file line " + std::to_string(lineno) +
                                  ": expected 'k <int>=2>'");
            k = v;
        } else if (n < 0) {
            long long v;
            if (first != "n" || !(ls >> v) || v < 1)
                throw input_error("code file line " + std::to_string(lineno) +
                                  ": expected 'n <int>=1>'");
            n = v;
        } else {
            std::vector<long long> row;
            std::istringstream rs(line);
            long long v;
            while (rs >> v) row.push_back(v);
            if (rs.fail() && !rs.eof())
                throw input_error("code file line " + std::to_string(lineno) +
                                  ": bad row entry");
            if (static_cast<long long>(row.size()) != n)
                throw input_error("code file line " + std::to_string(lineno) +
                                  ": row has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n));
            rows.push_back(std::move(row));
        }
    }
    if (k < 0 || n < 0) throw input_error("code file: missing k or n header");
    return code_from_generators(static_cast<unsigned>(k),
                                static_cast<unsigned>(n), rows, span_cap);
}

inline Code parse_code_file(const std::string& path,
                            std::size_t span_cap = kDefaultSpanCap) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open code file: " + path);
    return parse_code_text(in, span_cap);
}

/// Emits the same format back, with the generators replaced by a minimal
/// generating set (implementation-chosen; not canonical across versions).
inline std::string emit_code_text(const Code& c,
                                  std::size_t span_cap = kDefaultSpanCap) {
    std::ostringstream out;
    out << "# minimal generating set (non-canonical)\n";
    out << "k " << c.k << "\n";
    out << "n " << c.n << "\n";
    for (const Codeword& g : minimal_generators(c, span_cap)) {
        for (std::size_t i = 0; i < g.size(); ++i)
            out << (i ? " " : "") << g[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace zktheta
