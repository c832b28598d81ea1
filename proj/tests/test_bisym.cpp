#include <doctest.h>

#include <random>

#include "deligne/bisym.hpp"

using deligne::BiIndex;
using deligne::BiSymFunc;
using deligne::Partition;
using deligne::SymFunc;
using deligne::schur;

namespace {

BiSymFunc term(Partition x, Partition y, long c = 1) { return BiSymFunc(BiIndex{std::move(x), std::move(y)}, c); }

BiSymFunc random_element(std::mt19937& rng) {
    const auto pool = deligne::partitions_up_to(2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    BiSymFunc out;
    for (int k = 0; k < 3; ++k) out.add_term({pool[pick(rng)], pool[pick(rng)]}, coeff(rng));
    return out;
}

}  // namespace

TEST_CASE("tensor embeds pairs of symmetric functions") {
    CHECK(deligne::tensor(schur(Partition{1}), SymFunc::unit()) == term(Partition{1}, {}));
    CHECK(deligne::tensor(SymFunc::unit(), schur(Partition{1})) == term({}, Partition{1}));
    CHECK(deligne::tensor(schur(Partition{1}), schur(Partition{1})) == term(Partition{1}, Partition{1}));
    CHECK(deligne::tensor(SymFunc{}, schur(Partition{1})).is_zero());
}

TEST_CASE("multiply examples") {
    const BiSymFunc f = term(Partition{2, 1}, Partition{1}) + term({}, {}, -3);
    CHECK(BiSymFunc::unit() * f == f);
    CHECK(term(Partition{1}, {}) * term({}, Partition{1}) == term(Partition{1}, Partition{1}));

    const BiSymFunc sq = term(Partition{1}, Partition{1}) * term(Partition{1}, Partition{1});
    CHECK(sq == term(Partition{2}, Partition{2}) + term(Partition{2}, Partition{1, 1}) +
                    term(Partition{1, 1}, Partition{2}) + term(Partition{1, 1}, Partition{1, 1}));
}

TEST_CASE("multiply is commutative and associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const BiSymFunc a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("omega_xy") {
    CHECK(deligne::omega_xy(term(Partition{2}, Partition{1, 1})) == term(Partition{1, 1}, Partition{2}));
    CHECK(deligne::omega_xy(BiSymFunc::unit()) == BiSymFunc::unit());
    const BiSymFunc f = term(Partition{2, 1}, Partition{1}) - term(Partition{1, 1}, {}) - term(Partition{2}, {});
    CHECK(deligne::omega_xy(deligne::omega_xy(f)) == f);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const BiSymFunc a = random_element(rng), b = random_element(rng);
        CHECK(deligne::omega_xy(a * b) == deligne::omega_xy(a) * deligne::omega_xy(b));
    }
}

TEST_CASE("filtration degree and ordering") {
    const BiSymFunc f = term({}, {}, -1) + term(Partition{1}, Partition{1});
    CHECK(f.degree() == 2);
    CHECK(f.terms().begin()->first == BiIndex{Partition{1}, Partition{1}});
    CHECK(BiSymFunc{}.degree() == -1);
}

TEST_CASE("e_i(x) and e_i(y) are algebraically independent up to degree 5") {
    // Monomials e_alpha(x) e_beta(y) with |alpha| + |beta| <= 5.
    std::vector<BiSymFunc> monomials;
    for (const auto& alpha : deligne::partitions_up_to(5))
        for (const auto& beta : deligne::partitions_up_to(5 - alpha.size()))
            monomials.push_back(
                deligne::tensor(deligne::elementary_to_schur(alpha), deligne::elementary_to_schur(beta)));
    CHECK(monomials.size() == 1 + 2 + 5 + 10 + 20 + 36);
    CHECK(deligne::rank(monomials) == monomials.size());
}

TEST_CASE("rank detects dependence") {
    const BiSymFunc a = term(Partition{1}, {});
    const BiSymFunc b = term({}, Partition{1});
    CHECK(deligne::rank({a, b, a * deligne::Integer(2) - b * deligne::Integer(3)}) == 2);
    CHECK(deligne::rank({}) == 0);
}
