#pragma once

// Brute-force reference routines used only by the tests. None of these call
// into the library's algorithms; they work on raw vectors and Ferrers
// bitmaps.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Dot matrix of a Ferrers diagram.
inline std::vector<std::vector<bool>> ferrers(const Parts& parts)
{
    const int cols = parts.empty() ? 0 : parts.front();
    std::vector<std::vector<bool>> grid(parts.size(), std::vector<bool>(static_cast<std::size_t>(cols), false));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            grid[i][static_cast<std::size_t>(j)] = true;
    return grid;
}

/// Conjugate by transposing the dot matrix and reading off row lengths.
inline Parts conjugate(const Parts& parts)
{
    const auto grid = ferrers(parts);
    Parts out;
    const int cols = parts.empty() ? 0 : parts.front();
    for (int j = 0; j < cols; ++j) {
        int len = 0;
        for (const auto& row : grid)
            len += row[static_cast<std::size_t>(j)] ? 1 : 0;
        out.push_back(len);
    }
    return out;
}

inline int durfee(const Parts& parts)
{
    const auto grid = ferrers(parts);
    int d = 0;
    for (int s = 1; s <= static_cast<int>(parts.size()); ++s) {
        bool fits = true;
        for (int i = 0; i < s && fits; ++i)
            for (int j = 0; j < s && fits; ++j)
                fits = static_cast<std::size_t>(j) < grid[static_cast<std::size_t>(i)].size() &&
                       grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (fits)
            d = s;
    }
    return d;
}

inline std::vector<int> ranks(const Parts& parts)
{
    const Parts dual = conjugate(parts);
    std::vector<int> out;
    for (int i = 0; i < durfee(parts); ++i)
        out.push_back(parts[static_cast<std::size_t>(i)] - dual[static_cast<std::size_t>(i)]);
    return out;
}

/// Dots on each diagonal hook, counted cell by cell: cell (i, j) belongs to
/// hook min(i, j).
inline std::vector<int> hook_lengths(const Parts& parts)
{
    const auto grid = ferrers(parts);
    std::vector<int> out(static_cast<std::size_t>(durfee(parts)), 0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid[i].size(); ++j)
            if (grid[i][j])
                ++out[std::min(i, j)];
    return out;
}

/// All partitions of n with parts at most `cap`, by plain recursion (largest part first).
inline void partitions(int n, int cap, Parts& prefix, const std::function<void(const Parts&)>& visit)
{
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (int part = std::min(n, cap); part >= 1; --part) {
        prefix.push_back(part);
        partitions(n - part, part, prefix, visit);
        prefix.pop_back();
    }
}

inline std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    Parts prefix;
    partitions(n, n, prefix, [&](const Parts& p) { out.push_back(p); });
    return out;
}

/// Coin-change count of partitions of 0..order using parts accepted by `allowed`.
inline std::vector<std::int64_t> count_with_parts(int order, const std::function<bool(int)>& allowed)
{
    std::vector<std::int64_t> ways(static_cast<std::size_t>(order) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= order; ++part)
        if (allowed(part))
            for (int n = part; n <= order; ++n)
                ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - part)];
    return ways;
}

/// Number of partitions of each weight fitting in rows x cols; the
/// coefficients of the Gaussian binomial [rows + cols choose rows].
inline std::vector<std::int64_t> box_counts(int rows, int cols)
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(rows * cols) + 1, 0);
    for (int n = 0; n <= rows * cols; ++n) {
        Parts prefix;
        partitions(n, cols, prefix, [&](const Parts& p) {
            if (static_cast<int>(p.size()) <= rows)
                ++out[static_cast<std::size_t>(n)];
        });
    }
    return out;
}

inline bool ranks_within(const Parts& p, int lo, int hi)
{
    for (int r : ranks(p))
        if (r < lo || r > hi)
            return false;
    return true;
}

}  // namespace oracle
