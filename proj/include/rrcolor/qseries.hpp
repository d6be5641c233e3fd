#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrcolor/checked.hpp"
#include "rrcolor/colored.hpp"

namespace rrcolor {

/*
 * A formal power series in q known exactly up to and including q^order.
 * Binary operations truncate to the smaller order of the two operands.
 */
class TruncatedSeries {
public:
    /// The zero series to the given order.
    explicit TruncatedSeries(int order);
    TruncatedSeries(std::vector<Int> coefficients, int order);

    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const Int> coefficients() const { return coeffs_; }

    /// Adds `c * q^exponent`; ignored beyond the order.
    void add_term(int exponent, Int c);

    TruncatedSeries truncated(int order) const;

    /// Multiply by (1 - q^m), m >= 1.
    TruncatedSeries& times_one_minus_q(int m);
    /// Multiply by 1/(1 - q^m) = 1 + q^m + q^{2m} + ..., m >= 1.
    TruncatedSeries& divide_one_minus_q(int m);

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

/// Exact polynomial in q with integer coefficients; the zero polynomial has
/// no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Int> coefficients);

    static QPolynomial monomial(int degree, Int c = 1);
    static QPolynomial constant(Int c) { return monomial(0, c); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Zero outside the stored range.
    Int coefficient(int n) const;
    std::span<const Int> coefficients() const { return coeffs_; }

    /// q -> q^factor.
    QPolynomial substitute_power(int factor) const;
    /// Multiply by q^shift, shift >= 0.
    QPolynomial shifted(int shift) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator-=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// "1 + q + 2q^2"
    std::string to_string() const;

private:
    void normalize();

    std::vector<Int> coeffs_;
};

/// First degree at which two coefficient sequences differ (missing entries
/// count as zero), or nullopt when equal.
std::optional<int> first_difference(std::span<const Int> a, std::span<const Int> b);

/// 1/(q)_inf: the partition-number series.
TruncatedSeries unrestricted_partitions(int order);

/// 1/(q^step; q^step)_m truncated at `order`.
TruncatedSeries inverse_pochhammer(int m, int step, int order);

/*
 * Product over n not congruent to 0, r, -r (mod M) of 1/(1 - q^n), i.e.
 * 1/(q)_inf times (1 - q^n) once for every residue among {0, r, -r} that n
 * hits. For r < M/2 this counts partitions into the allowed parts. For
 * r = M/2 the residues r and -r coincide and parts congruent to M/2 carry
 * (1 - q^n) in the numerator, which is the product the theta series
 * factors into.
 */
TruncatedSeries restricted_product(const IdentityParams& params, int order);

/// The complementary factor: product of 1/(1 - q^n) over the residue multiset
/// {0, r, -r}, so that restricted_product * excluded_product = 1/(q)_inf.
TruncatedSeries excluded_product(const IdentityParams& params, int order);

/// (1/(q)_inf) * sum_j (-1)^j q^{j(Mj + M - 2r)/2}.
TruncatedSeries bosonic_sum(const IdentityParams& params, int order);

/// The multisum over n_1 >= ... >= n_{k-1} >= 0 with quadratic exponents and
/// Pochhammer denominators; base q^{2-s} on the last factor.
TruncatedSeries fermionic_multisum(const IdentityParams& params, int order);

/// Gaussian binomial [a choose b] in q^base. Zero when b < 0, b > a or a < 0.
QPolynomial gaussian_binomial(int a, int b, int base = 1);

/// Offset matrices of the finitized identities; entry [i-1][j-1] is the
/// (i, j) entry. The odd matrix is k x (k-1), the even one k x (k-2).
std::vector<std::vector<int>> odd_offset_matrix(int k);
std::vector<std::vector<int>> even_offset_matrix(int k);

/// Finitized identity for M = 2k + 1 (0 < r <= k, N >= 0).
QPolynomial fq_odd_lhs(int k, int r, int N);
QPolynomial fq_odd_rhs(int k, int r, int N);

/// Sign with which the offset matrix entries enter the upper binomial entries
/// of the even right-hand side.
enum class OffsetSign { added, subtracted };

/// Finitized identity for M = 2k (k >= 2, 0 < r <= k, N >= 0). The right side
/// matches the left only with OffsetSign::added; `subtracted` is kept so the
/// mismatch can be demonstrated (it differs whenever k >= 3 and r < k).
QPolynomial fq_even_lhs(int k, int r, int N);
QPolynomial fq_even_rhs(int k, int r, int N, OffsetSign sign = OffsetSign::added);

/// Box (u columns, v rows) whose rank-restricted partitions the left side of
/// the finitized identity counts. Either side may be negative, in which case
/// no partition fits.
struct Box {
    int cols = 0;  // u
    int rows = 0;  // v
    friend bool operator==(const Box&, const Box&) = default;
};

Box fq_odd_box(int k, int r, int N);
Box fq_even_box(int k, int r, int N);

/// Decimal strings, degree 0 first.
std::vector<std::string> to_decimal_strings(std::span<const Int> coefficients);

}  // namespace rrcolor
