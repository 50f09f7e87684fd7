#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "zktheta/code_io.hpp"

using namespace zktheta;

TEST_CASE("parse accepts comments, blanks and unreduced entries") {
    std::istringstream in(
        "# a comment\n"
        "k 4\n"
        "\n"
        "n 3   # trailing comment\n"
        "5 -1 2\n");
    Code c = parse_code_text(in);
    REQUIRE(c.k == 4);
    REQUIRE(c.n == 3);
    REQUIRE(c.generators.size() == 1);
    REQUIRE(c.generators[0] == Codeword{1, 3, 2});
}

TEST_CASE("parse errors") {
    std::istringstream missing("n 2\n");
    REQUIRE_THROWS_AS(parse_code_text(missing), input_error);
    std::istringstream shortrow("k 2\nn 3\n1 1\n");
    REQUIRE_THROWS_AS(parse_code_text(shortrow), input_error);
    std::istringstream empty("");
    REQUIRE_THROWS_AS(parse_code_text(empty), input_error);
    REQUIRE_THROWS_AS(parse_code_file("/nonexistent/file.code"), input_error);
}

TEST_CASE("emit/parse round trip preserves the codeword set") {
    for (auto rows : {std::vector<std::vector<long long>>{{1, 1, 0}, {0, 2, 1}},
                      std::vector<std::vector<long long>>{},
                      std::vector<std::vector<long long>>{{1, 2, 3}}}) {
        Code c = code_from_generators(4, 3, rows);
        std::istringstream back(emit_code_text(c));
        Code c2 = parse_code_text(back);
        REQUIRE(c2.k == c.k);
        REQUIRE(c2.n == c.n);
        REQUIRE(c2.words == c.words);
    }
    // a dual emitted and re-parsed keeps its codeword set
    Code d = dual_code(code_from_generators(3, 2, {{1, 2}}));
    std::istringstream back(emit_code_text(d));
    REQUIRE(parse_code_text(back).words == d.words);
}
