#include "avb/sympow.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace avb;
using namespace avb::sympow;

namespace {

bundles::AdelicBundle random_gram_bundle(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        RatMat b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = Rat(Int(rng() % 3)) - 1;
        RatMat g = mat_mul(transpose(b), b);
        for (std::size_t i = 0; i < n; ++i) g(i, i) += Rat(Int(1 + rng() % 2));
        if (is_positive_definite(g))
            return bundles::AdelicBundle::with_gram(RatMat::identity(n), g);
    }
}

}  // namespace

TEST_CASE("multinomial geometric mean") {
    CHECK(gamma_nl(2, 2).log_value == doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-12));
    CHECK(gamma_nl(1, 5).log_value == doctest::Approx(0.0));
    // n=2, ℓ=3: multinomials 1,3,3,1 → (9)^{1/4}
    CHECK(gamma_nl(2, 3).log_value == doctest::Approx(std::log(9.0) / 4.0));
    CHECK_THROWS_AS(gamma_nl(50, 50), std::invalid_argument);  // guard
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == doctest::Approx(1.0));
    CHECK(harmonic(4) == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0 + 0.25));
}

TEST_CASE("gamma asymptotics approach H_n - 1") {
    for (std::size_t n = 2; n <= 4; ++n) {
        double target = harmonic(n) - 1.0;
        double prev = -1.0;
        for (std::size_t ell : {8, 16, 32, 64}) {
            double v = gamma_nl(n, ell).log_value / double(ell);
            CHECK(v >= prev - 1e-12);  // monotone approach from below
            prev = v;
        }
        CHECK(std::fabs(prev - target) <= 0.15 * target);
    }
}

TEST_CASE("determinant of the symmetric power, exactly") {
    RatMat m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    auto r = det_sympow_identity_check(m, 2);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(216.0));  // (6)^3

    std::mt19937_64 rng(73);
    for (int k = 0; k < 30; ++k) {
        std::size_t n = 2 + rng() % 2;
        std::size_t ell = 2 + rng() % 2;
        RatMat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(Int(rng() % 7)) - 3;
        if (det(a) == 0) continue;
        CHECK(det_sympow_identity_check(a, ell).pass);
    }
}

TEST_CASE("inverse operator norm bound") {
    RatMat m(2, 2);
    m(0, 0) = 1;
    m(1, 1) = Rat(1, 2);
    auto r = inverse_norm_bound_check(m);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(r.rhs));  // equality for this diagonal case

    std::mt19937_64 rng(79);
    for (int k = 0; k < 20; ++k) {
        RatMat a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rat(Int(rng() % 9)) - 4;
        if (det(a) == 0) continue;
        CHECK(inverse_norm_bound_check(a).pass);
    }
}

TEST_CASE("symmetric-power slope identity") {
    auto i2 = bundles::AdelicBundle::standard(2);
    auto r = sympow_slope_check(i2, 2);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(std::log(2.0) / 6.0));

    std::mt19937_64 rng(83);
    for (int k = 0; k < 50; ++k) {
        std::size_t n = 2 + rng() % 2;
        std::size_t ell = 2 + ((n == 2) ? rng() % 2 : 0);
        CHECK(sympow_slope_check(random_gram_bundle(rng, n), ell).pass);
    }
}

TEST_CASE("symmetric-power mu_max bracket") {
    auto r = sympow_mumax_check(bundles::AdelicBundle::standard(2), 2);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(0.5 * std::log(2.0)));
    CHECK(r.rhs == doctest::Approx(8.0 * std::log(2.0)));
}

TEST_CASE("siegel-type short basis witness") {
    RatMat g(2, 2);
    g(0, 0) = 1;
    g(1, 1) = 4;
    auto b = bundles::AdelicBundle::with_gram(RatMat::identity(2), g);
    auto r = siegel_check(b);
    CHECK(r.pass);
    CHECK(r.rhs == doctest::Approx(std::log(2.0)));
}
