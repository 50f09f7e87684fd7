#include <catch2/catch_amalgamated.hpp>

#include "zktheta/macwilliams.hpp"

using namespace zktheta;

namespace {
ExpVec ev(std::initializer_list<int> xs) {
    ExpVec out;
    for (int x : xs) out.push_back(static_cast<std::uint8_t>(x));
    return out;
}
}  // namespace

TEST_CASE("transform of small enumerators") {
    // zero code in Z_3^1: X_0 -> X_0 + X_1 + X_2
    auto zero = code_from_generators(3, 1, {});
    auto t = macwilliams_transform(cwe(zero), zero.cardinality);
    REQUIRE(t.terms == std::map<ExpVec, Integer>{
                           {ev({1, 0, 0}), 1}, {ev({0, 1, 0}), 1}, {ev({0, 0, 1}), 1}});

    // ((X0+X1)^2 + (X0-X1)^2)/2 = X0^2 + X1^2
    auto rep = code_from_generators(2, 2, {{1, 1}});
    auto tr = macwilliams_transform(cwe(rep), rep.cardinality);
    REQUIRE(tr.terms == cwe(rep).terms);

    // whole space Z_3^1: character sums cancel everything but X_0
    auto whole = whole_space(3, 1);
    auto tw = macwilliams_transform(cwe(whole), whole.cardinality);
    REQUIRE(tw.terms == std::map<ExpVec, Integer>{{ev({1, 0, 0}), 1}});
}

TEST_CASE("wrong cardinality is flagged, not rounded") {
    auto rep = code_from_generators(2, 2, {{1, 1}});
    REQUIRE_THROWS_AS(macwilliams_transform(cwe(rep), Integer(3)), invariant_error);
}

TEST_CASE("transform equals dual enumerator on named codes") {
    for (auto [k, rows] : std::vector<std::pair<unsigned, std::vector<std::vector<long long>>>>{
             {2, {{1, 1}}}, {5, {{1, 2}}}, {3, {{1, 2}}}, {6, {{2, 3}}}}) {
        Code c = code_from_generators(k, 2, rows);
        auto rep = verify_macwilliams(c, 1);
        REQUIRE(rep.equal);
        REQUIRE(rep.sym_equal.value());
    }
    // genus 2 instances
    auto zero5 = code_from_generators(5, 1, {});
    REQUIRE(verify_macwilliams(zero5, 2).equal);
    auto rep2 = code_from_generators(2, 2, {{1, 1}});
    REQUIRE(verify_macwilliams(rep2, 2).equal);
    auto span12 = code_from_generators(5, 2, {{1, 2}});
    REQUIRE(verify_macwilliams(span12, 2).equal);
}

TEST_CASE("involution: transforming twice returns the enumerator") {
    // cwe(-C) = cwe(C) for linear codes, so the double transform is exact
    for (auto [k, n, rows] :
         std::vector<std::tuple<unsigned, unsigned, std::vector<std::vector<long long>>>>{
             {2, 2, {{1, 1}}},
             {5, 2, {{1, 2}}},
             {4, 3, {{1, 2, 3}, {0, 2, 0}}},
             {6, 2, {{1, 5}}}}) {
        Code c = code_from_generators(k, n, rows);
        Code d = dual_code(c);
        auto once = macwilliams_transform(cwe(c), c.cardinality);
        auto twice = macwilliams_transform(once, d.cardinality);
        REQUIRE(twice.terms == cwe(c).terms);
    }
}

TEST_CASE("degree beyond the packed-key engine uses the exact fallback") {
    // n = 10 exceeds the packed-key degree limit; the identity must still hold
    Code c = code_from_generators(2, 10, {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}});
    auto rep = verify_macwilliams(c, 1);
    REQUIRE(rep.equal);
    REQUIRE(rep.sym_equal.value());
}

TEST_CASE("transform validates its input") {
    auto rep = code_from_generators(2, 2, {{1, 1}});
    auto w = cwe(rep);
    w.terms[ev({1, 0})] = 1;  // breaks homogeneity
    REQUIRE_THROWS_AS(macwilliams_transform(w, rep.cardinality), input_error);
}
