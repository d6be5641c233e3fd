#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "rrcolor/enumerate.hpp"

using namespace rrcolor;

namespace {

std::vector<Partition> to_partitions(const std::vector<std::string>& texts)
{
    std::vector<Partition> out;
    for (const auto& t : texts)
        out.push_back(Partition::parse(t));
    return out;
}

/// Gordon condition written directly on raw parts.
bool gordon_oracle(const oracle::Parts& p, int k, int r)
{
    for (std::size_t j = 0; j + static_cast<std::size_t>(k - 1) < p.size(); ++j)
        if (p[j] - p[j + static_cast<std::size_t>(k - 1)] < 2)
            return false;
    return std::count(p.begin(), p.end(), 1) <= r - 1;
}

}  // namespace

TEST_CASE("partitions in reverse-lexicographic order")
{
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(4) == to_partitions({"(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"}));
    CHECK(partitions_of(10).size() == 42);
    const auto p = unrestricted_partitions(30);
    for (int n = 0; n <= 30; ++n) {
        const std::vector<Partition> all = partitions_of(n);
        REQUIRE(static_cast<Int>(all.size()) == p[static_cast<std::size_t>(n)]);
        REQUIRE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
        REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}

TEST_CASE("box enumeration")
{
    int visited = 0;
    for_each_partition_in_box(Box{-1, 3}, [&](const Partition&) { ++visited; });
    CHECK(visited == 0);

    for (int rows = 0; rows <= 5; ++rows) {
        for (int cols = 0; cols <= 5; ++cols) {
            std::vector<Int> by_weight(static_cast<std::size_t>(rows * cols) + 1, 0);
            std::set<Partition> seen;
            for_each_partition_in_box(Box{cols, rows}, [&](const Partition& p) {
                REQUIRE(fits_box(p, Box{cols, rows}));
                REQUIRE(seen.insert(p).second);
                ++by_weight[static_cast<std::size_t>(p.weight())];
            });
            REQUIRE(by_weight == oracle::box_counts(rows, cols));
        }
    }
}

TEST_CASE("rank family matches the table rows")
{
    CHECK(rank_family(IdentityParams(7, 1), 10) ==
          to_partitions({"(7,1,1,1)", "(6,4)", "(6,3,1)", "(6,1,1,1,1)", "(5,5)", "(5,4,1)", "(5,3,1,1)", "(4,4,2)"}));
    CHECK(rank_family(IdentityParams(8, 3), 10).size() == 20);
    CHECK(rank_family(IdentityParams(3, 1), 5).empty());
}

TEST_CASE("colored family for M = 8, r = 3, n = 10")
{
    const std::vector<ColoredPartition> c = colored_family(IdentityParams(8, 3), 10);
    CHECK(c.size() == 20);
    CHECK(std::find(c.begin(), c.end(), ColoredPartition::parse("(6_1,3_1,1_1)")) != c.end());
    CHECK(std::is_sorted(c.begin(), c.end(), std::greater<>()));
    CHECK(c == colored_family_via_map(IdentityParams(8, 3), 10));
}

TEST_CASE("family dispatch and validation")
{
    const IdentityParams params(7, 1);
    CHECK(count_family({Family::A, params, std::nullopt, 10}) == 8);
    CHECK(count_family({Family::C, params, std::nullopt, 10}) == 8);
    CHECK(count_family({Family::F, params, Box{100, 100}, 10}) == 8);
    CHECK(count_family({Family::Gordon, params, std::nullopt, 10}) == 8);
    CHECK(count_family({Family::ProductParts, params, std::nullopt, 10}) == 8);
    CHECK(count_family({Family::Type1, std::nullopt, std::nullopt, 10}) == 6);
    CHECK(std::holds_alternative<std::vector<ColoredPartition>>(
        enumerate_family({Family::C, params, std::nullopt, 4})));

    CHECK_THROWS_AS(count_family({Family::F, params, std::nullopt, 10}), std::invalid_argument);
    CHECK_THROWS_AS(count_family({Family::A, params, Box{2, 2}, 10}), std::invalid_argument);
    CHECK_THROWS_AS(count_family({Family::A, std::nullopt, std::nullopt, 10}), std::invalid_argument);
    CHECK_THROWS_AS(count_family({Family::Gordon, IdentityParams(8, 3), std::nullopt, 10}), std::invalid_argument);
    CHECK_THROWS_AS(count_family({Family::A, params, std::nullopt, -1}), std::invalid_argument);
    CHECK_THROWS_AS(count_family({Family::Type1, std::nullopt, std::nullopt, 3, 0}), std::invalid_argument);
    CHECK(family_name(Family::Gordon) == "Gordon");
}

TEST_CASE("Gordon families against the product and a raw oracle")
{
    const std::vector<std::pair<int, int>> cases{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
    for (const auto& [k, r] : cases) {
        const TruncatedSeries product = restricted_product(IdentityParams(2 * k + 1, r), 25);
        for (int n = 0; n <= 25; ++n) {
            Int raw = 0;
            for (const auto& p : oracle::partitions(n))
                raw += gordon_oracle(p, k, r) ? 1 : 0;
            CAPTURE(k);
            CAPTURE(r);
            CAPTURE(n);
            REQUIRE(static_cast<Int>(gordon_family(k, r, n).size()) == raw);
            REQUIRE(raw == product[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("product parts and the signed count")
{
    for (int M = 3; M <= 9; ++M) {
        for (int r = 1; 2 * r <= M; ++r) {
            const IdentityParams params(M, r);
            const TruncatedSeries product = restricted_product(params, 24);
            for (int n = 0; n <= 24; ++n) {
                REQUIRE(product_side_count(params, n) == product[static_cast<std::size_t>(n)]);
                if (2 * r < M)
                    REQUIRE(static_cast<Int>(product_parts_family(params, n).size()) ==
                            product[static_cast<std::size_t>(n)]);
            }
        }
    }
    // M = 4, r = 2: 1 + q^2 is not a count of allowed parts, yet the identity holds.
    CHECK(product_side_count(IdentityParams(4, 2), 2) == 0);
    CHECK(rank_family(IdentityParams(4, 2), 2).empty());
}

TEST_CASE("containment and stabilisation of boxed families")
{
    const IdentityParams params(7, 2);
    for (int n = 0; n <= 14; ++n) {
        const std::vector<Partition> all = rank_family(params, n);
        Int previous = 0;
        for (int side = 0; side <= n + 1; ++side) {
            const std::vector<Partition> inner = boxed_family(params, Box{side, side}, n);
            const std::vector<Partition> wide = boxed_family(params, Box{side + 1, side}, n);
            const std::vector<Partition> tall = boxed_family(params, Box{side, side + 1}, n);
            for (const Partition& p : inner) {
                REQUIRE(std::binary_search(wide.begin(), wide.end(), p, std::greater<>()));
                REQUIRE(std::binary_search(tall.begin(), tall.end(), p, std::greater<>()));
                REQUIRE(std::binary_search(all.begin(), all.end(), p, std::greater<>()));
            }
            REQUIRE(static_cast<Int>(inner.size()) >= previous);
            previous = static_cast<Int>(inner.size());
            if (side >= n)
                REQUIRE(inner.size() == all.size());
        }
    }
}

TEST_CASE("boxed and colored counts agree")
{
    for (int M = 4; M <= 8; ++M) {
        for (int r = 1; 2 * r <= M; ++r) {
            const IdentityParams params(M, r);
            for (const Box box : {Box{0, 0}, Box{3, 2}, Box{4, 4}, Box{6, 3}, Box{2, 5}}) {
                REQUIRE(boxed_counts(params, box) == colored_box_counts(params, box));
            }
            CHECK(boxed_counts(params, Box{-1, 2}).empty());
            CHECK(colored_box_counts(params, Box{2, -1}).empty());
        }
    }
}

TEST_CASE("enumerators are deterministic")
{
    const IdentityParams params(9, 2);
    CHECK(rank_family(params, 20) == rank_family(params, 20));
    CHECK(colored_family(params, 20) == colored_family(params, 20));
    std::vector<ColoredPartition> first;
    std::vector<ColoredPartition> second;
    for_each_admissible_colored(params, 20, 20, [&](const ColoredPartition& c) { first.push_back(c); });
    for_each_admissible_colored(params, 20, 20, [&](const ColoredPartition& c) { second.push_back(c); });
    CHECK(first == second);
    CHECK(first.front().empty());
}
