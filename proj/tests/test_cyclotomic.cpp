#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "zktheta/cyclotomic.hpp"

using namespace zktheta;

namespace {

CycInt random_cyc(unsigned k, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-5, 5);
    CycInt a = cyc_zero(k);
    for (auto& c : a.c) c = Integer(d(rng));
    return a;
}

CycInt cyc_pow(const CycInt& a, unsigned e) {
    CycInt r = cyc_from_integer(a.k, 1);
    for (unsigned i = 0; i < e; ++i) r = cyc_mul(r, a);
    return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    auto p1 = cyclotomic_polynomial(1);
    REQUIRE(p1.c == std::vector<Integer>{Integer(-1), Integer(1)});  // x - 1
    auto p4 = cyclotomic_polynomial(4);
    REQUIRE(p4.c == std::vector<Integer>{Integer(1), Integer(0), Integer(1)});  // x^2+1
    auto p6 = cyclotomic_polynomial(6);
    REQUIRE(p6.c == std::vector<Integer>{Integer(1), Integer(-1), Integer(1)});  // x^2-x+1
    for (unsigned k = 1; k <= 60; ++k)
        REQUIRE(cyclotomic_polynomial(k).degree() == static_cast<long>(totient(k)));
}

TEST_CASE("eta powers reduce mod Phi_k") {
    REQUIRE(eta_pow(3, 3) == cyc_from_integer(3, 1));
    CycInt e32 = eta_pow(3, 2);  // -1 - eta
    REQUIRE(e32.c == std::vector<Integer>{Integer(-1), Integer(-1)});
    REQUIRE(eta_pow(4, 2) == cyc_from_integer(4, -1));
    // eta^k = 1 exactly for all k <= 60, both via reduction and via products
    for (unsigned k = 1; k <= 60; ++k) {
        REQUIRE(eta_pow(k, k) == cyc_from_integer(k, 1));
        REQUIRE(cyc_pow(eta_pow(k, 1), k) == cyc_from_integer(k, 1));
        REQUIRE(cyc_mul(eta_pow(k, 1), eta_pow(k, k - 1)) == cyc_from_integer(k, 1));
    }
}

TEST_CASE("ring arithmetic identities") {
    // (1 + eta)^2 = eta when k = 3
    CycInt one_plus_eta = cyc_add(cyc_from_integer(3, 1), eta_pow(3, 1));
    REQUIRE(cyc_mul(one_plus_eta, one_plus_eta) == eta_pow(3, 1));
    std::mt19937 rng(1234);
    for (unsigned k : {3u, 4u, 5u, 6u, 8u, 12u}) {
        for (int trial = 0; trial < 50; ++trial) {
            CycInt a = random_cyc(k, rng), b = random_cyc(k, rng),
                   c = random_cyc(k, rng);
            REQUIRE(cyc_add(a, cyc_neg(a)) == cyc_zero(k));
            REQUIRE(cyc_mul(a, b) == cyc_mul(b, a));
            REQUIRE(cyc_mul(cyc_mul(a, b), c) == cyc_mul(a, cyc_mul(b, c)));
        }
    }
    REQUIRE_THROWS_AS(cyc_add(cyc_zero(3), cyc_zero(4)), input_error);
}

TEST_CASE("character sums") {
    REQUIRE(as_integer(char_sum(5, 0)).value() == 5);
    REQUIRE(as_integer(char_sum(5, 1)).value() == 0);
    REQUIRE(as_integer(char_sum(4, 2)).value() == 0);
    for (unsigned k = 2; k <= 30; ++k)
        for (long long m = 0; m < 3LL * k; ++m) {
            Integer expected = (m % k == 0) ? Integer(k) : Integer(0);
            REQUIRE(as_integer(char_sum(k, m)).value() == expected);
        }
}

TEST_CASE("as_integer") {
    REQUIRE(as_integer(cyc_from_integer(6, 7)).value() == 7);
    REQUIRE_FALSE(as_integer(eta_pow(3, 1)).has_value());
    // 1 + eta + eta^2 = 0 for k = 3
    CycInt s = cyc_add(cyc_add(cyc_from_integer(3, 1), eta_pow(3, 1)), eta_pow(3, 2));
    REQUIRE(as_integer(s).value() == 0);
}

TEST_CASE("numeric embedding is a ring homomorphism within 1e-10") {
    std::mt19937 rng(99);
    for (unsigned k : {3u, 5u, 7u, 8u, 12u, 30u}) {
        for (int trial = 0; trial < 30; ++trial) {
            CycInt a = random_cyc(k, rng), b = random_cyc(k, rng);
            auto lhs = cyc_embed(cyc_mul(a, b));
            auto rhs = cyc_embed(a) * cyc_embed(b);
            REQUIRE(std::abs(lhs - rhs) < 1e-10);
        }
    }
}
