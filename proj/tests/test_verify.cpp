#include "avb/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace avb;
using namespace avb::verify;

namespace {

bundles::AdelicBundle diag_gram(std::vector<Rat> d) {
    std::size_t n = d.size();
    RatMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = d[i];
    return bundles::AdelicBundle::with_gram(RatMat::identity(n), g);
}

}  // namespace

TEST_CASE("line isomorphism height identity") {
    RatMat one = RatMat::identity(1);
    auto l1 = bundles::AdelicBundle::with_gram(one, one);
    auto r = check_line_isomorphism(l1, l1, one);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(0.0));

    auto l2 = bundles::scale(l1, Rat(1, 3), Rat(2));
    RatMat m = one;
    CHECK(check_line_isomorphism(l2, l1, m).pass);
}

TEST_CASE("determinant-line isomorphism identity") {
    auto b = diag_gram({1, 4});
    CHECK(check_iso_determinant(b, b, RatMat::identity(2)).pass);
    RatMat m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    CHECK(check_iso_determinant(b, diag_gram({2, 5}), m).pass);
}

TEST_CASE("injective maps bound the maximal slope") {
    auto b2 = bundles::AdelicBundle::standard(2);
    auto b3 = bundles::AdelicBundle::standard(3);
    RatMat inc(3, 2);
    inc(0, 0) = 1;
    inc(1, 1) = 1;
    auto r = check_slope_injective(b2, b3, inc);
    CHECK(r.pass);
    CHECK(check_slope_injective(b2, b2, RatMat::identity(2)).pass);
}

TEST_CASE("slope method with coordinate quotients") {
    auto b = bundles::AdelicBundle::standard(3);
    std::vector<FiltrationStep> steps;
    for (std::size_t i = 0; i < 3; ++i) {
        FiltrationStep s;
        s.quotient = bundles::AdelicBundle::standard(1);
        s.map = RatMat(1, 3);
        s.map(0, i) = 1;
        s.dim = 1;
        steps.push_back(std::move(s));
    }
    CHECK(check_slope_method(b, steps).pass);
}

TEST_CASE("slope comparison through a map with kernel") {
    auto b3 = diag_gram({1, 1, 4});
    auto b2 = bundles::AdelicBundle::standard(2);
    RatMat proj(2, 3);  // kernel = span(e3)
    proj(0, 0) = 1;
    proj(1, 1) = 1;
    CHECK(check_prop66(b3, b2, proj, 1).pass);
    CHECK(check_prop66(b2, b2, RatMat::identity(2), 1).pass);
}

TEST_CASE("surjective corollary") {
    auto b3 = bundles::AdelicBundle::standard(3);
    auto b2 = bundles::AdelicBundle::standard(2);
    RatMat proj(2, 3);
    proj(0, 0) = 1;
    proj(1, 1) = 1;
    CHECK(check_corollary_surjective(b3, b2, proj).pass);
    CHECK(check_corollary_surjective(b2, b2, RatMat::identity(2)).pass);
}

TEST_CASE("tensor slope additivity") {
    RatMat a(1, 1);
    a(0, 0) = Rat(1, 2);
    auto line = bundles::AdelicBundle::with_gram(a, RatMat::identity(1));
    auto r = check_tensor_slope({diag_gram({1, 4}), line});
    CHECK(r.pass);
    CHECK(check_tensor_slope({line, line}).pass);
    auto rh = check_tensor_slope({diag_gram({1, 4}), diag_gram({1, 9})});
    CHECK(rh.pass);  // exact additivity for two hermitian bundles
}

TEST_CASE("suites are deterministic under (seed, count)") {
    auto a = run_suite("hermitian-exact", 3, 7);
    auto b = run_suite("hermitian-exact", 3, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].rhs == b[i].rhs);
    }
    CHECK(run_suite("hermitian-exact", 0, 7).empty());
}

TEST_CASE("prefix stability: a longer run extends a shorter one") {
    auto a = run_suite("body-brackets", 2, 11);
    auto b = run_suite("body-brackets", 4, 11);
    REQUIRE(b.size() >= a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].lhs == b[i].lhs);
    }
}

TEST_CASE("short suite runs pass outright") {
    for (const auto& r : run_suite("hermitian-exact", 10, 19)) CHECK(r.pass);
    for (const auto& r : run_suite("body-brackets", 10, 19)) CHECK(r.pass);
}
