#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rrcolor/enumerate.hpp"
#include "rrcolor/qseries.hpp"

using namespace rrcolor;

namespace {

std::vector<Int> coeffs(const TruncatedSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }
std::vector<Int> coeffs(const QPolynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

/// Partitions into parts avoiding 0, r, -r mod M, from the coin-change oracle.
std::vector<Int> allowed_parts_oracle(int M, int r, int order)
{
    return oracle::count_with_parts(order, [&](int part) {
        const int res = part % M;
        return res != 0 && res != r && res != M - r;
    });
}

std::vector<IdentityParams> grid(int m_lo, int m_hi)
{
    std::vector<IdentityParams> out;
    for (int M = m_lo; M <= m_hi; ++M)
        for (int r = 1; 2 * r <= M; ++r)
            out.emplace_back(M, r);
    return out;
}

}  // namespace

TEST_CASE("truncated series arithmetic")
{
    TruncatedSeries a(std::vector<Int>{1, 2, 3}, 4);
    CHECK(a.order() == 4);
    CHECK(coeffs(a) == std::vector<Int>{1, 2, 3, 0, 0});
    TruncatedSeries b = TruncatedSeries::one(2);
    b.add_term(1, -1);
    CHECK(coeffs(a * b) == std::vector<Int>{1, 1, 1});
    CHECK(coeffs(a + b) == std::vector<Int>{2, 1, 3});
    CHECK(coeffs(-a) == std::vector<Int>{-1, -2, -3, 0, 0});

    TruncatedSeries g = TruncatedSeries::one(6);
    g.divide_one_minus_q(2);
    CHECK(coeffs(g) == std::vector<Int>{1, 0, 1, 0, 1, 0, 1});
    g.times_one_minus_q(2);
    CHECK(g == TruncatedSeries::one(6));
    a.add_term(9, 5);
    CHECK(a[4] == 0);
}

TEST_CASE("polynomial arithmetic")
{
    const QPolynomial one_minus_q({1, -1});
    CHECK(QPolynomial({1, 2, 0, 0}).degree() == 1);
    CHECK(QPolynomial({0, 0}).is_zero());
    CHECK(QPolynomial().degree() == -1);
    CHECK(one_minus_q * one_minus_q == QPolynomial({1, -2, 1}));
    CHECK((one_minus_q - one_minus_q).is_zero());
    CHECK(one_minus_q.substitute_power(3) == QPolynomial({1, 0, 0, -1}));
    CHECK(QPolynomial::monomial(2, 5).shifted(1) == QPolynomial({0, 0, 0, 5}));
    CHECK(QPolynomial({1, 1, 2}).to_string() == "1 + q + 2q^2");
    CHECK(QPolynomial({1, 1, 2}).coefficient(7) == 0);
    const std::vector<Int> x{1, 2, 3};
    const std::vector<Int> y{1, 2};
    CHECK(first_difference(x, y) == 2);
    CHECK_FALSE(first_difference(y, std::vector<Int>{1, 2, 0}).has_value());
}

TEST_CASE("checked coefficient arithmetic throws on overflow")
{
    TruncatedSeries big(std::vector<Int>{std::numeric_limits<Int>::max()}, 0);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("unrestricted partition series")
{
    const auto expected = oracle::count_with_parts(40, [](int) { return true; });
    CHECK(coeffs(unrestricted_partitions(40)) == expected);
    CHECK(unrestricted_partitions(100)[100] == 190569292);
}

TEST_CASE("product side")
{
    CHECK(coeffs(restricted_product(IdentityParams(5, 2), 4)) == std::vector<Int>{1, 1, 1, 1, 2});
    CHECK(coeffs(restricted_product(IdentityParams(3, 1), 5)) == std::vector<Int>{1, 0, 0, 0, 0, 0});
    CHECK(restricted_product(IdentityParams(7, 1), 10)[10] == 8);
    CHECK(restricted_product(IdentityParams(8, 3), 10)[10] == 20);

    for (const IdentityParams& params : grid(3, 9)) {
        CAPTURE(params.modulus());
        CAPTURE(params.residue());
        const TruncatedSeries product = restricted_product(params, 30);
        if (2 * params.residue() < params.modulus())
            CHECK(coeffs(product) == allowed_parts_oracle(params.modulus(), params.residue(), 30));
        CHECK(product * excluded_product(params, 30) == unrestricted_partitions(30));
    }
}

TEST_CASE("three series forms agree to order 30")
{
    for (const IdentityParams& params : grid(3, 9)) {
        CAPTURE(params.modulus());
        CAPTURE(params.residue());
        const TruncatedSeries product = restricted_product(params, 30);
        CHECK(bosonic_sum(params, 30) == product);
        CHECK(fermionic_multisum(params, 30) == product);
        CHECK(bosonic_sum(params, 30)[0] == 1);
    }
    CHECK(coeffs(bosonic_sum(IdentityParams(5, 2), 4)) == std::vector<Int>{1, 1, 1, 1, 2});
    CHECK(bosonic_sum(IdentityParams(8, 3), 10)[10] == 20);
    CHECK(coeffs(fermionic_multisum(IdentityParams(3, 1), 6)) == std::vector<Int>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("single and double sums written out by hand")
{
    // sum q^{n^2} / (q)_n
    TruncatedSeries single(20);
    for (int n = 0; n * n <= 20; ++n) {
        TruncatedSeries term(20);
        term.add_term(n * n, 1);
        for (int i = 1; i <= n; ++i)
            term.divide_one_minus_q(i);
        single += term;
    }
    CHECK(single == fermionic_multisum(IdentityParams(5, 2), 20));
    CHECK(coeffs(single) == allowed_parts_oracle(5, 2, 20));

    // sum q^{a^2 + b^2} / ((q)_{a-b} (q)_b) over a >= b >= 0
    TruncatedSeries dbl(20);
    for (int a = 0; a * a <= 20; ++a) {
        for (int b = 0; b <= a && a * a + b * b <= 20; ++b) {
            TruncatedSeries term(20);
            term.add_term(a * a + b * b, 1);
            for (int i = 1; i <= a - b; ++i)
                term.divide_one_minus_q(i);
            for (int i = 1; i <= b; ++i)
                term.divide_one_minus_q(i);
            dbl += term;
        }
    }
    CHECK(dbl == fermionic_multisum(IdentityParams(7, 3), 20));
    CHECK(coeffs(dbl) == allowed_parts_oracle(7, 3, 20));
}

TEST_CASE("gaussian binomials")
{
    CHECK(gaussian_binomial(4, 2) == QPolynomial({1, 1, 2, 1, 1}));
    CHECK(coeffs(gaussian_binomial(4, 2)) == oracle::box_counts(2, 2));
    CHECK(gaussian_binomial(7, 0) == QPolynomial::constant(1));
    CHECK(gaussian_binomial(0, 0) == QPolynomial::constant(1));
    CHECK(gaussian_binomial(3, 5).is_zero());
    CHECK(gaussian_binomial(3, -1).is_zero());
    CHECK(gaussian_binomial(-2, 0).is_zero());
    CHECK(gaussian_binomial(4, 2, 2) == QPolynomial({1, 0, 1, 0, 2, 0, 1, 0, 1}));

    for (int a = 0; a <= 12; ++a) {
        for (int b = 0; b <= a; ++b) {
            const QPolynomial g = gaussian_binomial(a, b);
            REQUIRE(g == gaussian_binomial(a, a - b));
            REQUIRE(g.degree() == b * (a - b));
            REQUIRE(coeffs(g) == oracle::box_counts(b, a - b));
        }
    }
}

TEST_CASE("offset matrices")
{
    CHECK(odd_offset_matrix(3) == std::vector<std::vector<int>>{{1, 2}, {0, 1}, {0, 0}});
    CHECK(odd_offset_matrix(4) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
    CHECK(even_offset_matrix(4) == std::vector<std::vector<int>>{{2, 1}, {2, 1}, {1, 1}, {0, 0}});
    CHECK(even_offset_matrix(3) == std::vector<std::vector<int>>{{1}, {1}, {0}});
    CHECK(even_offset_matrix(2) == std::vector<std::vector<int>>{{}, {}});
}

TEST_CASE("finitized identities hold exactly")
{
    for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= k; ++r)
            for (int N = 0; N <= 12; ++N) {
                CAPTURE(k);
                CAPTURE(r);
                CAPTURE(N);
                REQUIRE(fq_odd_lhs(k, r, N) == fq_odd_rhs(k, r, N));
            }
    for (int k = 2; k <= 4; ++k)
        for (int r = 1; r <= k; ++r)
            for (int N = 0; N <= 10; ++N) {
                CAPTURE(k);
                CAPTURE(r);
                CAPTURE(N);
                REQUIRE(fq_even_lhs(k, r, N) == fq_even_rhs(k, r, N));
            }
    CHECK(fq_odd_lhs(2, 2, 0) == QPolynomial::constant(1));
    CHECK(fq_odd_rhs(2, 2, 0) == QPolynomial::constant(1));
    CHECK(fq_even_lhs(2, 1, 0) == QPolynomial::constant(1));
    CHECK(fq_even_rhs(2, 1, 0) == QPolynomial::constant(1));
}

TEST_CASE("subtracting the even offsets breaks the identity")
{
    int mismatches = 0;
    for (int k = 3; k <= 4; ++k)
        for (int r = 1; r < k; ++r)
            for (int N = 0; N <= 6; ++N)
                mismatches += fq_even_lhs(k, r, N) != fq_even_rhs(k, r, N, OffsetSign::subtracted) ? 1 : 0;
    CHECK(mismatches > 0);
    CHECK(fq_even_lhs(3, 1, 0) != fq_even_rhs(3, 1, 0, OffsetSign::subtracted));
    // k = 2 has no offsets, so both signs agree.
    CHECK(fq_even_rhs(2, 1, 5, OffsetSign::subtracted) == fq_even_rhs(2, 1, 5));
}

TEST_CASE("left sides count rank-bounded partitions in the box")
{
    for (int k = 2; k <= 4; ++k) {
        for (int r = 1; r <= k; ++r) {
            for (int N = 0; N <= 8; ++N) {
                const Box odd = fq_odd_box(k, r, N);
                const Box even = fq_even_box(k, r, N);
                CHECK(odd == Box{(N + k - r + 1) / 2, (N - k + r) >= 0 ? (N - k + r) / 2 : -((k - r - N + 1) / 2)});
                CHECK(even == Box{N + k - r, N});

                const IdentityParams po(2 * k + 1, r);
                const QPolynomial lo = fq_odd_lhs(k, r, N);
                const std::vector<Int> fo = boxed_counts(po, odd);
                for (int n = 0; n <= std::max(lo.degree(), static_cast<int>(fo.size()) - 1); ++n)
                    REQUIRE(lo.coefficient(n) == (n < static_cast<int>(fo.size()) ? fo[n] : 0));

                const IdentityParams pe(2 * k, r);
                const QPolynomial le = fq_even_lhs(k, r, N);
                const std::vector<Int> fe = boxed_counts(pe, even);
                for (int n = 0; n <= std::max(le.degree(), static_cast<int>(fe.size()) - 1); ++n)
                    REQUIRE(le.coefficient(n) == (n < static_cast<int>(fe.size()) ? fe[n] : 0));
            }
        }
    }
}

TEST_CASE("odd box example for k = 2, r = 2, N = 6")
{
    const IdentityParams params(5, 2);
    const Box box = fq_odd_box(2, 2, 6);
    CHECK(box == Box{3, 3});
    const QPolynomial lhs = fq_odd_lhs(2, 2, 6);
    CHECK(lhs == fq_odd_rhs(2, 2, 6));
    // Independent count straight from the oracle.
    for (int n = 0; n <= 9; ++n) {
        Int count = 0;
        for (const auto& p : oracle::partitions(n))
            if (static_cast<int>(p.size()) <= box.rows && (p.empty() || p.front() <= box.cols) &&
                oracle::ranks_within(p, params.rank_low(), params.rank_high()))
                ++count;
        CHECK(lhs.coefficient(n) == count);
    }
}

TEST_CASE("finitized left sides stabilise to the product")
{
    for (int k = 2; k <= 4; ++k) {
        for (int r = 1; r <= k; ++r) {
            const QPolynomial at20 = fq_odd_lhs(k, r, 20);
            const QPolynomial at24 = fq_odd_lhs(k, r, 24);
            const TruncatedSeries product = restricted_product(IdentityParams(2 * k + 1, r), 10);
            for (int n = 0; n <= 10; ++n) {
                CHECK(at20.coefficient(n) == at24.coefficient(n));
                CHECK(at20.coefficient(n) == product[static_cast<std::size_t>(n)]);
            }
        }
    }
    CHECK(fq_even_lhs(4, 3, 10).coefficient(10) == 20);
    CHECK(fq_even_lhs(4, 3, 5) == fq_even_rhs(4, 3, 5));
}

TEST_CASE("decimal rendering")
{
    const std::vector<Int> c{1, -2, 30};
    CHECK(to_decimal_strings(c) == std::vector<std::string>{"1", "-2", "30"});
}
