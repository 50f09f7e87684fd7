#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "zktheta/codes.hpp"

using namespace zktheta;

namespace {

std::set<Codeword> word_set(const Code& c) {
    std::set<Codeword> s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto w = c.word(i);
        s.insert(Codeword(w.begin(), w.end()));
    }
    return s;
}

// independent lexicographic four-square search, quadruple loop
std::array<unsigned, 4> four_squares_oracle(unsigned k) {
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b)
            for (unsigned c = 0; c < k; ++c)
                for (unsigned d = 0; d < k; ++d)
                    if (1ULL + a * a + b * b + c * c + d * d == 2ULL * k)
                        return {a, b, c, d};
    FAIL("no four-square solution");
    return {};
}

}  // namespace

TEST_CASE("span closure") {
    auto c = code_from_generators(2, 2, {{1, 1}});
    REQUIRE(word_set(c) == std::set<Codeword>{{0, 0}, {1, 1}});
    auto z = code_from_generators(3, 2, {});
    REQUIRE(word_set(z) == std::set<Codeword>{{0, 0}});
    auto h = code_from_generators(4, 1, {{2}});
    REQUIRE(word_set(h) == std::set<Codeword>{{0}, {2}});

    REQUIRE_THROWS_AS(code_from_generators(1, 2, {}), input_error);
    REQUIRE_THROWS_AS(code_from_generators(2, 0, {}), input_error);
    REQUIRE_THROWS_AS(code_from_generators(2, 1, {{1, 0}}), input_error);
    std::vector<std::vector<long long>> units;
    for (int i = 0; i < 10; ++i) {
        std::vector<long long> e(10, 0);
        e[i] = 1;
        units.push_back(e);
    }
    REQUIRE_THROWS_AS(code_from_generators(2, 10, units, 100), resource_error);
}

TEST_CASE("codes are closed additive subgroups") {
    std::mt19937 rng(7);
    for (unsigned k : {2u, 3u, 4u, 6u}) {
        std::uniform_int_distribution<long long> e(0, k - 1);
        for (unsigned n = 1; n <= 3; ++n) {
            std::vector<std::vector<long long>> rows(2, std::vector<long long>(n));
            for (auto& r : rows)
                for (auto& v : r) v = e(rng);
            Code c = code_from_generators(k, n, rows);
            auto words = word_set(c);
            REQUIRE(words.count(Codeword(n, 0)) == 1);
            for (const auto& a : words)
                for (const auto& b : words) {
                    Codeword s(n);
                    for (unsigned i = 0; i < n; ++i)
                        s[i] = static_cast<std::uint16_t>((a[i] + b[i]) % k);
                    REQUIRE(words.count(s) == 1);
                }
            for (const auto& g : c.generators) REQUIRE(words.count(g) == 1);
        }
    }
}

TEST_CASE("inner product") {
    REQUIRE(inner_product({1, 1}, {1, 1}, 2) == 0);
    REQUIRE(inner_product({1, 2}, {2, 3}, 4) == 0);
    REQUIRE(inner_product({1, 2}, {1, 2}, 5) == 0);
    REQUIRE_THROWS_AS(inner_product({1}, {1, 0}, 2), input_error);
}

TEST_CASE("weights") {
    auto w0 = weights({0, 0, 0}, 3);
    REQUIRE(w0.hamming == 0);
    REQUIRE(w0.euclidean == 0);
    REQUIRE(w0.profile == std::vector<std::size_t>{3, 0, 0});
    auto w1 = weights({1, 3}, 4);
    REQUIRE(w1.hamming == 2);
    REQUIRE(w1.euclidean == 10);
    REQUIRE(w1.profile == std::vector<std::size_t>{0, 1, 0, 1});
    auto w2 = weights({2, 2, 1}, 3);
    REQUIRE(w2.hamming == 3);
    REQUIRE(w2.euclidean == 9);
    REQUIRE(w2.profile == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("duality") {
    auto zero = code_from_generators(2, 2, {});
    REQUIRE(dual_code(zero).size() == 4);
    auto rep = code_from_generators(2, 2, {{1, 1}});
    REQUIRE(word_set(dual_code(rep)) == word_set(rep));
    auto whole = whole_space(3, 1);
    REQUIRE(word_set(dual_code(whole)) == std::set<Codeword>{{0}});

    // |C| * |dual| = k^n and double dual returns C
    std::mt19937 rng(11);
    for (unsigned k : {2u, 3u, 5u, 6u}) {
        std::uniform_int_distribution<long long> e(0, k - 1);
        std::vector<std::vector<long long>> rows(2, std::vector<long long>(3));
        for (auto& r : rows)
            for (auto& v : r) v = e(rng);
        Code c = code_from_generators(k, 3, rows);
        Code d = dual_code(c);
        REQUIRE(c.cardinality * d.cardinality == ipow(k, 3));
        REQUIRE(word_set(dual_code(d)) == word_set(c));
    }
    auto big = code_from_generators(2, 10, {});
    REQUIRE_THROWS_AS(dual_code(big, 100), resource_error);
}

TEST_CASE("classification") {
    auto rep = code_from_generators(2, 2, {{1, 1}});
    auto r = classify(rep);
    REQUIRE(r.self_orthogonal);
    REQUIRE(r.self_dual);
    REQUIRE(r.doubly_even.has_value());
    REQUIRE_FALSE(*r.doubly_even);

    auto zero = code_from_generators(5, 2, {});
    auto rz = classify(zero);
    REQUIRE(rz.self_orthogonal);
    REQUIRE_FALSE(rz.self_dual);
    REQUIRE_FALSE(rz.doubly_even.has_value());  // odd k: undefined

    // self_dual implies self_orthogonal on a small scan
    std::mt19937 rng(23);
    for (unsigned k : {2u, 3u, 4u}) {
        std::uniform_int_distribution<long long> e(0, k - 1);
        std::vector<std::vector<long long>> rows(2, std::vector<long long>(4));
        for (auto& r2 : rows)
            for (auto& v : r2) v = e(rng);
        auto rr = classify(code_from_generators(k, 4, rows));
        if (rr.self_dual) REQUIRE(rr.self_orthogonal);
    }
}

TEST_CASE("four squares") {
    REQUIRE(four_squares(2) == std::array<unsigned, 4>{0, 1, 1, 1});
    REQUIRE(four_squares(4) == std::array<unsigned, 4>{1, 1, 1, 2});
    REQUIRE(four_squares(6) == std::array<unsigned, 4>{0, 1, 1, 3});
    for (unsigned k = 2; k <= 16; k += 2) {
        auto s = four_squares(k);
        REQUIRE(1ULL + s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] ==
                2ULL * k);
        REQUIRE(s == four_squares_oracle(k));
    }
    REQUIRE_THROWS_AS(four_squares(3), input_error);
}

TEST_CASE("type II construction") {
    auto c21 = type2_code(2, 1);
    REQUIRE(c21.n == 8);
    REQUIRE(c21.cardinality == 16);
    auto r21 = classify(c21);
    REQUIRE(r21.self_dual);
    REQUIRE(r21.doubly_even.value());
    // exhaustive: the dual scan reproduces the code itself
    REQUIRE(dual_code(c21).words == c21.words);
    // exhaustive doubly-even: every codeword euclidean weight = 0 mod 2k
    for (std::size_t i = 0; i < c21.size(); ++i) {
        auto w = c21.word(i);
        unsigned long long eu = 0;
        for (auto v : w) eu += static_cast<unsigned long long>(v) * v;
        REQUIRE(eu % 4 == 0);
    }

    auto c41 = type2_code(4, 1);
    REQUIRE(c41.cardinality == 256);
    REQUIRE(classify(c41).self_dual);
    REQUIRE(classify(c41).doubly_even.value());

    // generator criterion carries the big, unmaterialized instances
    for (unsigned k = 2; k <= 12; k += 2)
        for (unsigned m = 1; m <= 2; ++m) {
            Code c = type2_code(k, m, 100'000);
            REQUIRE(c.n == 8 * m);
            REQUIRE(c.n % 8 == 0);
            REQUIRE(c.cardinality == ipow(k, 4UL * m));
            auto r = classify(c);
            REQUIRE(r.self_dual);
            REQUIRE(r.doubly_even.value());
        }
    auto lazy = type2_code(6, 2, 1000);
    REQUIRE_FALSE(lazy.materialized);
    REQUIRE(lazy.cardinality == ipow(6, 8));
    REQUIRE_THROWS_AS(type2_code(3, 1), input_error);
}

TEST_CASE("generator doubly-even criterion agrees with the per-word scan") {
    std::mt19937 rng(31);
    for (unsigned k : {2u, 4u, 6u, 8u}) {
        std::uniform_int_distribution<long long> e(0, k - 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<long long>> rows(2, std::vector<long long>(4));
            for (auto& r : rows)
                for (auto& v : r) v = e(rng);
            Code c = code_from_generators(k, 4, rows, 100'000);
            if (c.size() > 100'000) continue;
            bool exhaustive = true;
            for (std::size_t i = 0; i < c.size() && exhaustive; ++i) {
                unsigned long long eu = 0;
                for (auto v : c.word(i)) eu += static_cast<unsigned long long>(v) * v;
                if (eu % (2 * k) != 0) exhaustive = false;
            }
            REQUIRE(classify(c).doubly_even.value() == exhaustive);
        }
    }
}

TEST_CASE("minimal generators regenerate the code") {
    std::mt19937 rng(41);
    for (unsigned k : {2u, 3u, 4u, 6u}) {
        std::uniform_int_distribution<long long> e(0, k - 1);
        std::vector<std::vector<long long>> rows(3, std::vector<long long>(4));
        for (auto& r : rows)
            for (auto& v : r) v = e(rng);
        Code c = code_from_generators(k, 4, rows);
        auto gens = minimal_generators(c);
        std::vector<std::vector<long long>> regen;
        for (const auto& g : gens) regen.emplace_back(g.begin(), g.end());
        Code c2 = code_from_generators(k, 4, regen);
        REQUIRE(c2.words == c.words);
        // irredundant: dropping any listed generator loses codewords
        for (std::size_t drop = 0; drop < gens.size(); ++drop) {
            std::vector<std::vector<long long>> sub;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != drop) sub.emplace_back(gens[i].begin(), gens[i].end());
            REQUIRE(code_from_generators(k, 4, sub).size() < c.size());
        }
    }
}

TEST_CASE("direct sum concatenates coordinatewise") {
    auto a = code_from_generators(2, 2, {{1, 1}});
    auto b = code_from_generators(2, 1, {{1}});
    auto s = direct_sum(a, b);
    REQUIRE(s.n == 3);
    REQUIRE(s.cardinality == 4);
    REQUIRE(word_set(s) ==
            std::set<Codeword>{{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}});
}
