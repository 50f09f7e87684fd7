#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zktheta/cyclolattice.hpp"

using namespace zktheta;

TEST_CASE("reduction modulo <1 - xi>") {
    REQUIRE(reduce_mod_B({3, {0, 0}}) == 0);
    REQUIRE(reduce_mod_B({3, {1, 0}}) == 1);
    REQUIRE(reduce_mod_B({5, {2, 3, 0, 1}}) == 1);
    REQUIRE(reduce_mod_B({3, {-1, -1}}) == 1);

    // rho is additive
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    for (unsigned p : {3u, 5u, 7u})
        for (int t = 0; t < 50; ++t) {
            CycCoord x{p, std::vector<long>(p - 1)}, y{p, std::vector<long>(p - 1)},
                s{p, std::vector<long>(p - 1)};
            for (unsigned i = 0; i < p - 1; ++i) {
                x.a[i] = d(rng);
                y.a[i] = d(rng);
                s.a[i] = x.a[i] + y.a[i];
            }
            REQUIRE(reduce_mod_B(s) == (reduce_mod_B(x) + reduce_mod_B(y)) % p);
        }
}

TEST_CASE("trace form closed form") {
    REQUIRE(trace_form({3, {0, 0}}) == 0);
    REQUIRE(trace_form({3, {1, 0}}) == 2);
    REQUIRE(trace_form({5, {1, 0, 0, 0}}) == 4);
    REQUIRE_THROWS_AS(trace_form({4, {1, 0, 0}}), input_error);
    REQUIRE_THROWS_AS(trace_form({3, {1}}), input_error);

    // positive definite, and bounded below by the coefficient norm
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> d(-20, 20);
    for (unsigned p : {3u, 5u, 7u})
        for (int t = 0; t < 200; ++t) {
            CycCoord x{p, std::vector<long>(p - 1)};
            long long sq = 0;
            bool zero = true;
            for (auto& v : x.a) {
                v = d(rng);
                sq += static_cast<long long>(v) * v;
                if (v != 0) zero = false;
            }
            REQUIRE(trace_form(x) >= sq);
            if (!zero) REQUIRE(trace_form(x) > 0);
        }
}

TEST_CASE("trace form matches the embedding oracle") {
    std::mt19937 rng(0xBEEF);
    for (unsigned p : {3u, 5u, 7u}) {
        auto rep = trace_form_gate(p, 300, rng);
        REQUIRE(rep.pass);
        REQUIRE(rep.max_abs_error < 1e-9);
    }
}

TEST_CASE("theta_j by box scan") {
    auto t0 = theta_j(3, 0, 5);
    REQUIRE(t0.coeffs[0] == 1);
    for (long m = 1; m <= 5; ++m) REQUIRE(t0.coeffs[m] == 0);

    auto t1 = theta_j(3, 1, 2);
    REQUIRE(t1.coeffs[0] == 0);
    REQUIRE(t1.coeffs[1] == 0);
    REQUIRE(t1.coeffs[2] == 3);  // 1, xi, xi^2 = -1-xi

    auto t06 = theta_j(3, 0, 6);
    REQUIRE(t06.coeffs[0] == 1);
    REQUIRE(t06.coeffs[6] == 6);
    for (long m = 1; m <= 5; ++m) REQUIRE(t06.coeffs[m] == 0);

    REQUIRE_THROWS_AS(theta_j(4, 0, 5), input_error);
    REQUIRE_THROWS_AS(theta_j(9, 0, 5), input_error);
    REQUIRE_THROWS_AS(theta_battery(5, 40, 100), resource_error);
}

TEST_CASE("units sit at the minimal trace p-1 with multiplicity 2p") {
    for (unsigned p : {3u, 5u, 7u}) {
        auto battery = theta_battery(p, static_cast<long>(p - 1));
        QSeries<Integer> sum = qs_zero(2L * p, static_cast<long>(p - 1), Integer(0));
        for (const auto& s : battery) sum = qs_add(sum, s);
        REQUIRE(sum.coeffs[0] == 1);
        for (long m = 1; m < static_cast<long>(p - 1); ++m)
            REQUIRE(sum.coeffs[m] == 0);
        REQUIRE(sum.coeffs[p - 1] == 2 * p);
    }
}

TEST_CASE("lattice theta by per-codeword enumeration") {
    auto zero = code_from_generators(3, 1, {});
    auto th = theta_cyclolattice(3, zero, 6);
    REQUIRE(th == theta_j(3, 0, 6));  // Gamma_C = B

    auto whole = whole_space(3, 1);
    auto tw = theta_cyclolattice(3, whole, 2);
    REQUIRE(tw.coeffs[0] == 1);
    REQUIRE(tw.coeffs[1] == 0);
    REQUIRE(tw.coeffs[2] == 6);

    // both pipelines agree on span{(1,2)} in F_5^2
    auto span12 = code_from_generators(5, 2, {{1, 2}});
    auto direct = theta_cyclolattice(5, span12, 8);
    auto composed = compose(cwe(span12), theta_battery(5, 8));
    REQUIRE(direct == composed);

    REQUIRE_THROWS_AS(theta_cyclolattice(5, zero, 6), input_error);
}

TEST_CASE("theorem 4 instances") {
    REQUIRE(verify_theorem4(3, code_from_generators(3, 1, {}), 30).equal);
    REQUIRE(verify_theorem4(5, code_from_generators(5, 2, {{1, 2}}), 20).equal);
    REQUIRE(verify_theorem4(3, code_from_generators(3, 3, {{1, 1, 1}}), 12).equal);

    // the self-orthogonality hypothesis is enforced by default, but the
    // identity itself never uses it
    auto not_so = code_from_generators(3, 2, {{1, 0}});
    REQUIRE_THROWS_AS(verify_theorem4(3, not_so, 8), input_error);
    auto relaxed = verify_theorem4(3, not_so, 8, false);
    REQUIRE_FALSE(relaxed.self_orthogonal);
    REQUIRE(relaxed.equal);
}
