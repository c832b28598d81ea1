#include <doctest.h>

#include <algorithm>
#include <set>

#include "deligne/partition.hpp"

using deligne::Partition;
using deligne::SkewShape;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Every weakly decreasing vector in {0..cols}^rows, built by odometer.
std::set<std::vector<int>> brute_force_rectangle(int rows, int cols) {
    std::set<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(rows), 0);
    while (true) {
        if (std::is_sorted(v.rbegin(), v.rend())) {
            std::vector<int> trimmed(v);
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.insert(trimmed);
        }
        int k = 0;
        while (k < rows && v[static_cast<std::size_t>(k)] == cols) v[static_cast<std::size_t>(k++)] = 0;
        if (k == rows) break;
        ++v[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace

TEST_CASE("partition canonical form") {
    CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{3, 1, 1}.size() == 5);
    CHECK(Partition{3, 1, 1}.length() == 3);
    CHECK(Partition{3, 1}[5] == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("canonical order: size first, then larger part lists first") {
    CHECK(Partition{} < Partition{1});
    CHECK(Partition{1} < Partition{2});
    CHECK(Partition{2} < Partition{1, 1});
    CHECK(Partition{3} < Partition{2, 1});
    CHECK(Partition{2, 1} < Partition{1, 1, 1});
    CHECK(Partition{1, 1, 1} < Partition{4});
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{2, 1, 1}) == Partition{3, 1});
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    for (const auto& p : deligne::partitions_up_to(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("contains") {
    CHECK(contains(Partition{2, 1}, Partition{1}));
    CHECK_FALSE(contains(Partition{2, 1}, Partition{2, 2}));
    CHECK(contains(Partition{}, Partition{}));
    CHECK_FALSE(contains(Partition{1}, Partition{1, 1}));
}

TEST_CASE("partitions_in_rectangle") {
    using V = std::vector<Partition>;
    CHECK(deligne::partitions_in_rectangle(1, 1) == V{Partition{}, Partition{1}});
    CHECK(deligne::partitions_in_rectangle(2, 1) == V{Partition{}, Partition{1}, Partition{1, 1}});
    CHECK(deligne::partitions_in_rectangle(2, 2) ==
          V{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{2, 2}});
    CHECK(deligne::partitions_in_rectangle(0, 3) == V{Partition{}});

    for (int r = 0; r <= 5; ++r)
        for (int s = 0; s <= 5; ++s) {
            const auto listed = deligne::partitions_in_rectangle(r, s);
            const auto brute = brute_force_rectangle(r, s);
            CHECK(static_cast<long long>(listed.size()) == binomial(r + s, r));
            CHECK(listed.size() == brute.size());
            for (const auto& p : listed) CHECK(brute.count(p.parts()) == 1);
            CHECK(std::is_sorted(listed.begin(), listed.end()));
        }
}

TEST_CASE("partitions_of matches partition numbers") {
    const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        const auto listed = deligne::partitions_of(n);
        CHECK(listed.size() == p[static_cast<std::size_t>(n)]);
        CHECK(std::adjacent_find(listed.begin(), listed.end(), [](auto& a, auto& b) { return !(a < b); }) ==
              listed.end());
    }
}

TEST_CASE("parse_partition") {
    CHECK(deligne::parse_partition("2,1,1") == Partition{2, 1, 1});
    CHECK(deligne::parse_partition("") == Partition{});
    CHECK(deligne::parse_partition("[]") == Partition{});
    CHECK(deligne::parse_partition("[3, 2]") == Partition{3, 2});
    CHECK_THROWS_AS(deligne::parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(deligne::parse_partition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(deligne::parse_partition("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(deligne::parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(deligne::parse_partition("[2"), std::invalid_argument);
    CHECK(to_string(Partition{2, 1, 1}) == "2,1,1");
}

TEST_CASE("skew shape validation") {
    CHECK_THROWS_AS(SkewShape(Partition{2, 1}, Partition{2, 2}), std::invalid_argument);
    CHECK(SkewShape(Partition{2, 1}, Partition{1}).cells() == 2);
}

TEST_CASE("enumerate_ssyt examples") {
    CHECK(deligne::enumerate_ssyt(SkewShape(Partition{1}), 3).size() == 3);

    const auto row = deligne::enumerate_ssyt(SkewShape(Partition{2}), 2);
    REQUIRE(row.size() == 3);
    CHECK(row[0].rows == std::vector<std::vector<int>>{{1, 1}});
    CHECK(row[1].rows == std::vector<std::vector<int>>{{1, 2}});
    CHECK(row[2].rows == std::vector<std::vector<int>>{{2, 2}});

    const auto column = deligne::enumerate_ssyt(SkewShape(Partition{1, 1}), 2);
    REQUIRE(column.size() == 1);
    CHECK(column[0].rows == std::vector<std::vector<int>>{{1}, {2}});

    // The empty shape has exactly one (empty) filling.
    CHECK(deligne::enumerate_ssyt(SkewShape(Partition{1}, Partition{1}), 3).size() == 1);
}

TEST_CASE("enumerate_ssyt counts for rows and columns") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) {
            const Partition row(std::vector<int>{n});
            const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
            CHECK(static_cast<long long>(deligne::enumerate_ssyt(SkewShape(row), k).size()) == binomial(n + k - 1, n));
            CHECK(static_cast<long long>(deligne::enumerate_ssyt(SkewShape(col), k).size()) == binomial(k, n));
        }
}

TEST_CASE("enumerate_ssyt fillings are semistandard") {
    const SkewShape shape(Partition{3, 2, 2}, Partition{1, 1});
    const auto all = deligne::enumerate_ssyt(shape, 3);
    CHECK(!all.empty());
    for (const auto& t : all) {
        auto at = [&](int r, int c) { return t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.inner()[r])]; };
        for (int r = 0; r < shape.outer().length(); ++r)
            for (int c = shape.inner()[r]; c < shape.outer()[r]; ++c) {
                if (c + 1 < shape.outer()[r]) CHECK(at(r, c) <= at(r, c + 1));
                if (r + 1 < shape.outer().length() && c >= shape.inner()[r + 1] && c < shape.outer()[r + 1])
                    CHECK(at(r, c) < at(r + 1, c));
            }
    }
}
