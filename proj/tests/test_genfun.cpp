#include <doctest.h>

#include "deligne/genfun.hpp"

using deligne::Partition;
using namespace deligne::genfun;
using deligne::oracle::Alphabet;
using deligne::oracle::Layout;

namespace {

TruncationSpec spec(int a, int b, int nx, int ny, int d) { return TruncationSpec{a, b, nx, ny, d}; }

// Coefficient of a monomial given as exponents [alpha..., beta..., x..., y...].
deligne::Integer coeff(const MultiPoly& f, const TruncationSpec& t, std::vector<int> e) {
    Layout layout;
    layout.counts = {t.a, t.b, t.nx, t.ny};
    return f.embedded(layout).coefficient(e);
}

}  // namespace

TEST_CASE("degree zero truncation is 1") {
    const auto t = spec(2, 2, 2, 2, 0);
    CHECK(genfun_lhs(t) == MultiPoly::constant(1));
    CHECK(genfun_rhs(t) == MultiPoly::constant(1));
}

TEST_CASE("no series variables leaves only the constant") {
    CHECK(genfun_lhs(spec(0, 0, 2, 2, 4)) == MultiPoly::constant(1));
    CHECK(genfun_rhs(spec(0, 0, 2, 2, 4)) == MultiPoly::constant(1));
    CHECK(genfun_pair_count(spec(0, 0, 2, 2, 4)) == 1);
}

TEST_CASE("low-degree coefficients") {
    const auto t = spec(1, 1, 2, 2, 2);
    const MultiPoly lhs = genfun_lhs(t);
    // alpha1 beta1 carries S_{1,1} = (x1 + x2)(y1 + y2) - 1.
    CHECK(coeff(lhs, t, {1, 1, 0, 0, 0, 0}) == -1);
    CHECK(coeff(lhs, t, {1, 1, 1, 0, 1, 0}) == 1);
    CHECK(coeff(lhs, t, {1, 1, 0, 1, 0, 1}) == 1);
    CHECK(coeff(lhs, t, {1, 1, 1, 0, 0, 0}) == 0);
    // alpha1 carries s_1(x).
    CHECK(coeff(lhs, t, {1, 0, 1, 0, 0, 0}) == 1);
    CHECK(coeff(lhs, t, {1, 0, 0, 0, 0, 0}) == 0);
    CHECK(coeff(lhs, t, {0, 0, 0, 0, 0, 0}) == 1);
}

TEST_CASE("pair counts") {
    // lambda, mu with at most one part: compositions of <= 2 into two parts.
    CHECK(genfun_pair_count(spec(1, 1, 1, 1, 2)) == 6);
    CHECK(genfun_pair_count(spec(2, 0, 1, 1, 3)) == 1 + 1 + 2 + 2);
}

TEST_CASE("generating function identity on small truncations") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int n = 1; n <= 3; n += 2)
                for (int d = 0; d <= 4; ++d) {
                    const auto t = spec(a, b, n, 3 - n + 1, d);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(n);
                    CAPTURE(d);
                    CHECK(genfun_lhs(t) == genfun_rhs(t));
                }
}

TEST_CASE("generating function identity at degree 6") {
    const auto t = spec(2, 2, 3, 3, 6);
    CHECK(genfun_lhs(t) == genfun_rhs(t));
}

TEST_CASE("omega form of the left side") {
    for (int d = 0; d <= 4; ++d) {
        const auto t = spec(2, 2, 2, 2, d);
        CHECK(genfun_lhs_omega(t) == genfun_lhs(t));
    }
}

TEST_CASE("skew Cauchy examples") {
    CHECK(cauchy_skew_sum({}, 2, 2, 3) == cauchy_product({}, 2, 2, 3));
    CHECK(cauchy_skew_sum(Partition{1}, 1, 1, 0).is_zero());
    for (const auto& tau : deligne::partitions_up_to(3)) {
        CAPTURE(tau);
        CHECK(verify_cauchy(tau, spec(2, 2, 2, 2, 5)));
        CHECK(cauchy_skew_sum(tau, 2, 2, 4, Alphabet::beta, Alphabet::y) ==
              cauchy_product(tau, 2, 2, 4, Alphabet::beta, Alphabet::y));
    }
}

TEST_CASE("dual Cauchy") {
    for (int d = 0; d <= 4; ++d) CHECK(verify_dual_cauchy(spec(2, 2, 1, 1, d)));
    const auto t = spec(1, 1, 1, 1, 2);
    CHECK(coeff(dual_cauchy_sum(t), t, {1, 1, 0, 0}) == -1);
    CHECK(coeff(dual_cauchy_product(t), t, {2, 2, 0, 0}) == 0);
}

TEST_CASE("assembled right side matches the product form") {
    for (int d = 0; d <= 4; ++d) {
        const auto t = spec(2, 2, 2, 2, d);
        CHECK(assembled_rhs(t) == genfun_rhs(t));
    }
}

TEST_CASE("truncation spec validation") {
    CHECK_NOTHROW(spec(0, 0, 0, 0, 0).validate());
    CHECK_THROWS_AS(spec(-1, 1, 1, 1, 2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(1, 1, -1, 1, 2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(1, 1, 1, 1, -1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(1, 1, 1, 1, kMaxDegree + 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(genfun_lhs(spec(1, 1, 1, 1, 9)), std::invalid_argument);
}
