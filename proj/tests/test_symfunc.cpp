#include <doctest.h>

#include <map>
#include <random>

#include "deligne/oracle.hpp"
#include "deligne/symfunc.hpp"

using deligne::Partition;
using deligne::SymFunc;
using deligne::schur;
using deligne::oracle::Alphabet;
using deligne::oracle::MultiPoly;

namespace {

SymFunc sum(std::initializer_list<Partition> parts) {
    SymFunc out;
    for (const auto& p : parts) out += schur(p);
    return out;
}

MultiPoly poly(const SymFunc& f, int nvars) { return deligne::oracle::expand_symfunc(f, Alphabet::x, nvars); }

SymFunc random_element(std::mt19937& rng, int max_size) {
    const auto pool = deligne::partitions_up_to(max_size);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    SymFunc out;
    for (int k = 0; k < 3; ++k) out.add_term(pool[pick(rng)], coeff(rng));
    return out;
}

}  // namespace

TEST_CASE("schur basis injection") {
    CHECK(schur(Partition{}) == SymFunc::unit());
    CHECK(schur(Partition{2, 1}).terms().size() == 1);
    CHECK(schur(Partition{2, 1}).coefficient(Partition{2, 1}) == 1);
}

TEST_CASE("multiply examples") {
    CHECK(schur(Partition{1}) * schur(Partition{1}) == sum({Partition{2}, Partition{1, 1}}));
    const SymFunc f = schur(Partition{3, 1}) * 2 + schur(Partition{2});
    CHECK(SymFunc::unit() * f == f);
    CHECK(schur(Partition{2}) * schur(Partition{1, 1}) == sum({Partition{3, 1}, Partition{2, 1, 1}}));
    // c^{(3,2,1)}_{(2,1),(2,1)} = 2
    CHECK(deligne::lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
}

TEST_CASE("multiply agrees with oracle polynomial products") {
    // A degree-d identity holds iff it holds in d variables.
    for (const auto& lambda : deligne::partitions_up_to(6))
        for (const auto& mu : deligne::partitions_up_to(6 - lambda.size())) {
            const int nvars = std::max(1, lambda.size() + mu.size());
            CAPTURE(lambda);
            CAPTURE(mu);
            CHECK(poly(schur(lambda) * schur(mu), nvars) == poly(schur(lambda), nvars) * poly(schur(mu), nvars));
        }
}

TEST_CASE("LR coefficients are symmetric") {
    for (const auto& lambda : deligne::partitions_up_to(7))
        for (const auto& mu : deligne::partitions_up_to(7 - lambda.size()))
            CHECK(schur(lambda) * schur(mu) == schur(mu) * schur(lambda));
}

TEST_CASE("pieri_column examples") {
    CHECK(deligne::pieri_column(SymFunc::unit(), 1) == schur(Partition{1}));
    CHECK(deligne::pieri_column(schur(Partition{1}), 2) == sum({Partition{2, 1}, Partition{1, 1, 1}}));
    CHECK(deligne::pieri_column(schur(Partition{1}), 1) == schur(Partition{1}) * schur(Partition{1}));
}

TEST_CASE("Pieri rules agree with LR multiplication") {
    for (const auto& lambda : deligne::partitions_up_to(5))
        for (int i = 0; i <= 4; ++i) {
            const Partition column(std::vector<int>(static_cast<std::size_t>(i), 1));
            const Partition row = i ? Partition{i} : Partition{};
            CHECK(deligne::pieri_column(schur(lambda), i) == schur(lambda) * schur(column));
            CHECK(deligne::pieri_row(schur(lambda), i) == schur(lambda) * schur(row));
        }
}

TEST_CASE("complete and elementary products") {
    CHECK(deligne::complete_to_schur(Partition{1}) == schur(Partition{1}));
    CHECK(deligne::complete_to_schur(Partition{2, 1}) == sum({Partition{3}, Partition{2, 1}}));
    CHECK(deligne::elementary_to_schur(Partition{2, 1}) == sum({Partition{1, 1, 1}, Partition{2, 1}}));
    CHECK(deligne::complete_to_schur(Partition{}) == SymFunc::unit());
    // h_(1,1,1) = s_3 + 2 s_21 + s_111
    CHECK(deligne::complete_to_schur(Partition{1, 1, 1}) ==
          sum({Partition{3}, Partition{1, 1, 1}}) + schur(Partition{2, 1}) * 2);
}

TEST_CASE("skew_schur examples") {
    CHECK(deligne::skew_schur(Partition{3, 1}, Partition{}) == schur(Partition{3, 1}));
    CHECK(deligne::skew_schur(Partition{2, 1}, Partition{1}) == sum({Partition{2}, Partition{1, 1}}));
    CHECK(deligne::skew_schur(Partition{1}, Partition{1}) == SymFunc::unit());
    CHECK(deligne::skew_schur(Partition{2, 1}, Partition{2, 2}).is_zero());
    CHECK(deligne::skew_schur(Partition{1}, Partition{1, 1}).is_zero());
}

TEST_CASE("skew_schur agrees with SSYT polynomials") {
    for (const auto& outer : deligne::partitions_up_to(5))
        for (const auto& inner : deligne::partitions_up_to(outer.size())) {
            if (!contains(outer, inner)) continue;
            const int nvars = std::max(1, outer.size() - inner.size());
            CAPTURE(outer);
            CAPTURE(inner);
            CHECK(poly(deligne::skew_schur(outer, inner), nvars) ==
                  deligne::oracle::skew_schur_poly(deligne::SkewShape(outer, inner), Alphabet::x, nvars));
        }
}

TEST_CASE("skew_schur vanishes off the support") {
    for (const auto& lambda : deligne::partitions_up_to(5))
        for (const auto& tau : deligne::partitions_up_to(5))
            if (!contains(lambda, tau)) CHECK(deligne::skew_schur(lambda, tau).is_zero());
}

TEST_CASE("omega") {
    CHECK(deligne::omega(schur(Partition{2})) == schur(Partition{1, 1}));
    const SymFunc f = schur(Partition{3, 1}) + schur(Partition{2}) * 2;
    CHECK(deligne::omega(deligne::omega(f)) == f);
    CHECK(deligne::omega(deligne::complete_to_schur(Partition{2, 1})) == deligne::elementary_to_schur(Partition{2, 1}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const SymFunc a = random_element(rng, 3);
        const SymFunc b = random_element(rng, 3);
        CHECK(deligne::omega(a * b) == deligne::omega(a) * deligne::omega(b));
    }
}

TEST_CASE("jacobi_trudi examples") {
    using deligne::JacobiTrudiBasis;
    CHECK(deligne::jacobi_trudi(Partition{1}, JacobiTrudiBasis::complete) == schur(Partition{1}));
    // det [[h2, h3], [h0, h1]] = h2 h1 - h3
    const auto det = deligne::expand_index_determinant({{2, 3}, {0, 1}});
    CHECK(det == deligne::MonomialExpansion{{Partition{3}, -1}, {Partition{2, 1}, 1}});
    CHECK(deligne::jacobi_trudi(Partition{2, 1}, JacobiTrudiBasis::complete) == schur(Partition{2, 1}));
    CHECK(deligne::jacobi_trudi(Partition{2, 1}, JacobiTrudiBasis::elementary) == schur(Partition{2, 1}));
    CHECK(deligne::jacobi_trudi(Partition{}, JacobiTrudiBasis::complete) == SymFunc::unit());
}

TEST_CASE("jacobi_trudi reproduces schur in both forms") {
    using deligne::JacobiTrudiBasis;
    for (const auto& p : deligne::partitions_up_to(6)) {
        CAPTURE(p);
        CHECK(deligne::jacobi_trudi(p, JacobiTrudiBasis::complete) == schur(p));
        CHECK(deligne::jacobi_trudi(p, JacobiTrudiBasis::elementary) == schur(p));
    }
}

TEST_CASE("index determinant edge cases") {
    CHECK(deligne::expand_index_determinant({}) == deligne::MonomialExpansion{{Partition{}, 1}});
    CHECK(deligne::expand_index_determinant({{-1}}).empty());
    CHECK_THROWS_AS(deligne::expand_index_determinant({{1, 2}}), std::invalid_argument);
}
