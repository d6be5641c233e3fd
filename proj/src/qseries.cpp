#include "rrcolor/qseries.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rrcolor {

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("truncation order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coefficients, int order) : TruncatedSeries(order)
{
    const std::size_t n = std::min(coefficients.size(), coeffs_.size());
    std::copy_n(coefficients.begin(), n, coeffs_.begin());
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

void TruncatedSeries::add_term(int exponent, Int c)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent in power series");
    if (exponent <= order())
        coeffs_[static_cast<std::size_t>(exponent)] = checked_add(coeffs_[static_cast<std::size_t>(exponent)], c);
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    return TruncatedSeries(coeffs_, std::min(order, this->order()));
}

TruncatedSeries& TruncatedSeries::times_one_minus_q(int m)
{
    if (m < 1)
        throw std::invalid_argument("factor exponent must be positive");
    for (std::size_t n = coeffs_.size(); n-- > static_cast<std::size_t>(m);)
        coeffs_[n] = checked_sub(coeffs_[n], coeffs_[n - static_cast<std::size_t>(m)]);
    return *this;
}

TruncatedSeries& TruncatedSeries::divide_one_minus_q(int m)
{
    if (m < 1)
        throw std::invalid_argument("factor exponent must be positive");
    for (std::size_t n = static_cast<std::size_t>(m); n < coeffs_.size(); ++n)
        coeffs_[n] = checked_add(coeffs_[n], coeffs_[n - static_cast<std::size_t>(m)]);
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out.coeffs_[n] = checked_sub(0, coeffs_[n]);
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] = checked_add(coeffs_[n], other.coeffs_[n]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] = checked_sub(coeffs_[n], other.coeffs_[n]);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        const Int ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= order; ++j) {
            const auto n = static_cast<std::size_t>(i + j);
            out.coeffs_[n] = checked_add(out.coeffs_[n], checked_mul(ai, b.coeffs_[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

// ------------------------------------------------------------ polynomial

QPolynomial::QPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

void QPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(int degree, Int c)
{
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    std::vector<Int> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs.back() = c;
    return QPolynomial(std::move(coeffs));
}

Int QPolynomial::coefficient(int n) const
{
    if (n < 0 || n > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(n)];
}

QPolynomial QPolynomial::substitute_power(int factor) const
{
    if (factor < 1)
        throw std::invalid_argument("substitution power must be positive");
    if (is_zero() || factor == 1)
        return *this;
    std::vector<Int> out(static_cast<std::size_t>(degree() * factor) + 1, 0);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out[n * static_cast<std::size_t>(factor)] = coeffs_[n];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(int shift) const
{
    if (shift < 0)
        throw std::invalid_argument("negative shift");
    if (is_zero())
        return {};
    std::vector<Int> out(static_cast<std::size_t>(shift), 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-() const
{
    std::vector<Int> out(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out[n] = checked_sub(0, coeffs_[n]);
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t n = 0; n < other.coeffs_.size(); ++n)
        coeffs_[n] = checked_add(coeffs_[n], other.coeffs_[n]);
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t n = 0; n < other.coeffs_.size(); ++n)
        coeffs_[n] = checked_sub(coeffs_[n], other.coeffs_[n]);
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Int c = coeffs_[n];
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        const Int mag = c < 0 ? -c : c;
        if (mag != 1 || n == 0)
            out += std::to_string(mag);
        if (n >= 1)
            out += "q";
        if (n >= 2)
            out += "^" + std::to_string(n);
    }
    return out;
}

std::optional<int> first_difference(std::span<const Int> a, std::span<const Int> b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Int x = i < a.size() ? a[i] : 0;
        const Int y = i < b.size() ? b[i] : 0;
        if (x != y)
            return static_cast<int>(i);
    }
    return std::nullopt;
}

// -------------------------------------------------------- series forms

TruncatedSeries unrestricted_partitions(int order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int m = 1; m <= order; ++m)
        s.divide_one_minus_q(m);
    return s;
}

TruncatedSeries inverse_pochhammer(int m, int step, int order)
{
    if (m < 0 || step < 1)
        throw std::invalid_argument("bad Pochhammer parameters");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int i = 1; i <= m && i * step <= order; ++i)
        s.divide_one_minus_q(i * step);
    return s;
}

namespace {

/// How many of the residues 0, r, -r (as a multiset) n falls into; 2 for
/// n = M/2 mod M when r = M/2.
int excluded_multiplicity(int n, const IdentityParams& params)
{
    const int res = n % params.modulus();
    const int r = params.residue();
    return (res == 0) + (res == r) + (res == params.modulus() - r);
}

}  // namespace

TruncatedSeries restricted_product(const IdentityParams& params, int order)
{
    TruncatedSeries s = unrestricted_partitions(order);
    for (int n = 1; n <= order; ++n)
        for (int i = excluded_multiplicity(n, params); i > 0; --i)
            s.times_one_minus_q(n);
    return s;
}

TruncatedSeries excluded_product(const IdentityParams& params, int order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n)
        for (int i = excluded_multiplicity(n, params); i > 0; --i)
            s.divide_one_minus_q(n);
    return s;
}

TruncatedSeries bosonic_sum(const IdentityParams& params, int order)
{
    const Int M = params.modulus();
    const Int r = params.residue();
    auto exponent = [&](Int j) {
        const Int twice = j * (M * j + M - 2 * r);
        if (!is_even(twice))
            throw std::logic_error("non-integral theta exponent");
        return twice / 2;
    };

    TruncatedSeries theta(order);
    theta.add_term(0, 1);
    for (Int j = 1;; ++j) {
        const Int up = exponent(j);
        const Int down = exponent(-j);
        if (up > order && down > order)
            break;
        const Int sign = (j % 2 == 0) ? 1 : -1;
        if (up <= order)
            theta.add_term(static_cast<int>(up), sign);
        if (down <= order)
            theta.add_term(static_cast<int>(down), sign);
    }
    return theta * unrestricted_partitions(order);
}

TruncatedSeries fermionic_multisum(const IdentityParams& params, int order)
{
    const int k = params.k();
    if (k <= 1)
        return TruncatedSeries::one(order);

    const int vars = k - 1;
    const int r = params.residue();
    const int last_step = 2 - params.s();

    std::vector<TruncatedSeries> inv_chain;
    std::vector<TruncatedSeries> inv_last;
    for (int m = 0; m <= order; ++m) {
        inv_chain.push_back(inverse_pochhammer(m, 1, order));
        inv_last.push_back(inverse_pochhammer(m, last_step, order));
    }

    TruncatedSeries total(order);
    std::vector<int> n(static_cast<std::size_t>(vars), 0);

    // Depth-first over n_1 >= n_2 >= ... >= n_{k-1} >= 0; the exponent only
    // grows as indices are fixed, so a partial exponent above the order prunes.
    std::function<void(int, int, int)> descend = [&](int idx, int cap, int exponent) {
        if (idx == vars) {
            const int room = order - exponent;
            TruncatedSeries term = inv_last[static_cast<std::size_t>(n.back())].truncated(room);
            for (int i = 0; i + 1 < vars; ++i)
                term = term * inv_chain[static_cast<std::size_t>(n[static_cast<std::size_t>(i)] -
                                                                 n[static_cast<std::size_t>(i + 1)])];
            for (int d = 0; d <= term.order(); ++d)
                total.add_term(exponent + d, term[static_cast<std::size_t>(d)]);
            return;
        }
        for (int value = 0; value <= cap; ++value) {
            const int linear = (idx + 1 >= r) ? value : 0;
            const int next = exponent + value * value + linear;
            if (next > order)
                break;
            n[static_cast<std::size_t>(idx)] = value;
            descend(idx + 1, value, next);
        }
    };
    int cap = 0;
    while ((cap + 1) * (cap + 1) <= order)
        ++cap;
    descend(0, cap, 0);
    return total;
}

// ---------------------------------------------------- gaussian binomials

QPolynomial gaussian_binomial(int a, int b, int base)
{
    if (base < 1)
        throw std::invalid_argument("gaussian binomial base must be positive");
    if (a < 0 || b < 0 || b > a)
        return {};
    b = std::min(b, a - b);

    // After step i the vector holds [a - b + i choose i]; each step multiplies
    // by (1 - q^{a-b+i}) and divides exactly by (1 - q^i).
    std::vector<Int> poly{1};
    for (int i = 1; i <= b; ++i) {
        const auto up = static_cast<std::size_t>(a - b + i);
        std::vector<Int> product(poly.size() + up, 0);
        for (std::size_t n = 0; n < poly.size(); ++n) {
            product[n] = checked_add(product[n], poly[n]);
            product[n + up] = checked_sub(product[n + up], poly[n]);
        }
        const auto step = static_cast<std::size_t>(i);
        const std::size_t qlen = product.size() - step;
        std::vector<Int> quotient(qlen, 0);
        for (std::size_t n = 0; n < qlen; ++n)
            quotient[n] = n >= step ? checked_add(product[n], quotient[n - step]) : product[n];
        for (std::size_t n = qlen; n < product.size(); ++n) {
            const Int carried = n >= step ? quotient[n - step] : 0;
            if (checked_add(product[n], carried) != 0)
                throw std::logic_error("inexact division in gaussian binomial");
        }
        poly = std::move(quotient);
    }
    return QPolynomial(std::move(poly)).substitute_power(base);
}

// ------------------------------------------------ finitized identities

std::vector<std::vector<int>> odd_offset_matrix(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    std::vector<std::vector<int>> a(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k - 1)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::max(j - i + 1, 0);
    return a;
}

std::vector<std::vector<int>> even_offset_matrix(int k)
{
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
    std::vector<std::vector<int>> b(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k - 2)));
    // Rows 1 and 2 coincide, each later row drops by one and saturates at 1;
    // the last row is zero.
    for (int i = 1; i < k; ++i)
        for (int j = 1; j <= k - 2; ++j)
            b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::max(k - std::max(i, 2) - j + 1, 1);
    return b;
}

namespace {

void require_finitized(int k, int r, int N, int min_k)
{
    if (k < min_k)
        throw std::invalid_argument("k must be at least " + std::to_string(min_k));
    if (r <= 0 || r > k)
        throw std::invalid_argument("r must satisfy 0 < r <= k");
    if (N < 0)
        throw std::invalid_argument("N must be non-negative");
}

/// Calls visit(n) for every n_1 >= ... >= n_{vars} >= 0 whose weighted sum
/// sum_i weight * n_i stays within `budget`.
void for_each_tuple(int vars, int weight, int budget, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> n(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int, int)> descend = [&](int idx, int cap, int left) {
        if (idx == vars) {
            visit(n);
            return;
        }
        for (int value = 0; value <= cap && weight * value <= left; ++value) {
            n[static_cast<std::size_t>(idx)] = value;
            descend(idx + 1, value, left - weight * value);
        }
    };
    if (budget < 0)
        return;
    descend(0, budget, budget);
}

int multisum_exponent(const std::vector<int>& n, int r)
{
    int e = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        e += n[i] * n[i];
        if (static_cast<int>(i) + 1 >= r)
            e += n[i];
    }
    return e;
}

}  // namespace

QPolynomial fq_odd_lhs(int k, int r, int N)
{
    require_finitized(k, r, N, 1);
    const Int M = 2 * k + 1;
    QPolynomial total;
    const int span = N + 2 * k + 2;
    for (Int j = -span; j <= span; ++j) {
        const Int lower = floor_div(N - k + r - M * j, 2);
        if (lower < 0 || lower > N)
            continue;
        const Int twice = j * (M * j + M - 2 * r);
        const QPolynomial term = gaussian_binomial(N, static_cast<int>(lower)).shifted(static_cast<int>(twice / 2));
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

QPolynomial fq_odd_rhs(int k, int r, int N)
{
    require_finitized(k, r, N, 1);
    const auto a = odd_offset_matrix(k);
    const auto& offsets = a[static_cast<std::size_t>(r - 1)];
    const int vars = k - 1;
    QPolynomial total;
    for_each_tuple(vars, 2, N - k + r, [&](const std::vector<int>& n) {
        QPolynomial term = QPolynomial::monomial(multisum_exponent(n, r));
        int prefix = 0;  // n_1 + ... + n_{j-1}
        for (int j = 0; j < vars && !term.is_zero(); ++j) {
            const int nj = n[static_cast<std::size_t>(j)];
            const int next = j + 1 < vars ? n[static_cast<std::size_t>(j + 1)] : 0;
            const int top = N - 2 * prefix - nj - next - offsets[static_cast<std::size_t>(j)];
            term = term * gaussian_binomial(top, nj - next);
            prefix += nj;
        }
        total += term;
    });
    return total;
}

QPolynomial fq_even_lhs(int k, int r, int N)
{
    require_finitized(k, r, N, 2);
    const int top = 2 * N + k - r;
    QPolynomial total;
    const int span = N + 2;
    for (Int j = -span; j <= span; ++j) {
        const Int lower = N - k * j;
        if (lower < 0 || lower > top)
            continue;
        const Int exponent = j * (k * j + k - r);
        const QPolynomial term = gaussian_binomial(top, static_cast<int>(lower)).shifted(static_cast<int>(exponent));
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

QPolynomial fq_even_rhs(int k, int r, int N, OffsetSign sign)
{
    require_finitized(k, r, N, 2);
    const auto b = even_offset_matrix(k);
    const auto& offsets = b[static_cast<std::size_t>(r - 1)];
    const int offset_sign = sign == OffsetSign::added ? 1 : -1;
    const int vars = k - 1;
    QPolynomial total;
    for_each_tuple(vars, 1, N, [&](const std::vector<int>& n) {
        QPolynomial term = QPolynomial::monomial(multisum_exponent(n, r));
        int prefix = 0;
        for (int j = 0; j + 1 < vars && !term.is_zero(); ++j) {
            const int nj = n[static_cast<std::size_t>(j)];
            const int next = n[static_cast<std::size_t>(j + 1)];
            const int top = 2 * N - 2 * prefix - nj - next + offset_sign * offsets[static_cast<std::size_t>(j)];
            term = term * gaussian_binomial(top, nj - next);
            prefix += nj;
        }
        term = term * gaussian_binomial(N - prefix, n.back(), 2);
        total += term;
    });
    return total;
}

Box fq_odd_box(int k, int r, int N)
{
    return {static_cast<int>(floor_div(N + k - r + 1, 2)), static_cast<int>(floor_div(N - k + r, 2))};
}

Box fq_even_box(int k, int r, int N)
{
    return {N + k - r, N};
}

std::vector<std::string> to_decimal_strings(std::span<const Int> coefficients)
{
    std::vector<std::string> out;
    out.reserve(coefficients.size());
    for (Int c : coefficients)
        out.push_back(std::to_string(c));
    return out;
}

}  // namespace rrcolor
