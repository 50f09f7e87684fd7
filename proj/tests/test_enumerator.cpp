#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zktheta/enumerator.hpp"

using namespace zktheta;

namespace {
ExpVec ev(std::initializer_list<int> xs) {
    ExpVec out;
    for (int x : xs) out.push_back(static_cast<std::uint8_t>(x));
    return out;
}
}  // namespace

TEST_CASE("complete weight enumerator") {
    auto zero = code_from_generators(3, 4, {});
    auto wz = cwe(zero);
    REQUIRE(wz.terms.size() == 1);
    REQUIRE(wz.terms.at(ev({4, 0, 0})) == 1);  // X_0^n

    auto rep = code_from_generators(2, 2, {{1, 1}});
    auto wr = cwe(rep);
    REQUIRE(wr.terms == std::map<ExpVec, Integer>{{ev({2, 0}), 1}, {ev({0, 2}), 1}});

    auto whole = whole_space(3, 1);
    auto ww = cwe(whole);
    REQUIRE(ww.terms == std::map<ExpVec, Integer>{
                            {ev({1, 0, 0}), 1}, {ev({0, 1, 0}), 1}, {ev({0, 0, 1}), 1}});
}

TEST_CASE("genus enumerator") {
    auto rep = code_from_generators(2, 2, {{1, 1}});
    REQUIRE(genus_cwe(rep, 1).terms == cwe(rep).terms);

    auto zero = code_from_generators(3, 2, {});
    auto g2 = genus_cwe(zero, 2);
    REQUIRE(g2.terms.size() == 1);
    ExpVec e(9, 0);
    e[0] = 2;
    REQUIRE(g2.terms.at(e) == 1);  // z_(0,0)^n

    // four tuples, each column pair constant: z00^2 + z01^2 + z10^2 + z11^2
    auto gr = genus_cwe(rep, 2);
    REQUIRE(gr.terms.size() == 4);
    for (unsigned a = 0; a < 4; ++a) {
        ExpVec key(4, 0);
        key[a] = 2;
        REQUIRE(gr.terms.at(key) == 1);
    }

    REQUIRE_THROWS_AS(genus_cwe(rep, 0), input_error);
    auto big = whole_space(4, 3);  // 64 words, 64^3 tuples
    REQUIRE_THROWS_AS(genus_cwe(big, 3, 1000), resource_error);
}

TEST_CASE("symmetrize") {
    auto whole = whole_space(3, 1);
    auto s = symmetrize(cwe(whole));
    REQUIRE(s.terms == std::map<ExpVec, Integer>{{ev({1, 0}), 1}, {ev({0, 1}), 2}});

    auto zero = code_from_generators(3, 4, {});
    auto sz = symmetrize(cwe(zero));
    REQUIRE(sz.terms == std::map<ExpVec, Integer>{{ev({4, 0}), 1}});

    // k = 4: the single monomial X_1 X_3 folds to X_1^2
    WeightEnumerator w13;
    w13.k = 4;
    w13.g = 1;
    w13.n = 2;
    w13.terms[ev({0, 1, 0, 1})] = 1;
    auto s13 = symmetrize(w13);
    REQUIRE(s13.terms == std::map<ExpVec, Integer>{{ev({0, 2, 0}), 1}});

    auto g2 = genus_cwe(zero, 2);
    REQUIRE_THROWS_AS(symmetrize(g2), input_error);
}

TEST_CASE("homogeneity and coefficient mass") {
    std::mt19937 rng(17);
    for (unsigned k : {2u, 3u, 5u}) {
        std::uniform_int_distribution<long long> e(0, k - 1);
        std::vector<std::vector<long long>> rows(2, std::vector<long long>(3));
        for (auto& r : rows)
            for (auto& v : r) v = e(rng);
        Code c = code_from_generators(k, 3, rows);
        for (unsigned g = 1; g <= 2; ++g) {
            auto w = genus_cwe(c, g);
            REQUIRE(is_homogeneous(w));
            REQUIRE(coefficient_sum(w) == ipow(c.cardinality, g));
        }
    }
}
