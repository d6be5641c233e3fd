#include "rrcolor/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rrcolor {

void for_each_partition(int n, const PartitionVisitor& visit)
{
    if (n < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> a{n};
    for (;;) {
        visit(Partition(a));
        // Rightmost part larger than 1; everything after it is ones.
        std::size_t ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty())
            return;
        const int part = --a.back();
        auto rest = static_cast<int>(ones) + 1;
        while (rest > 0) {
            const int take = std::min(part, rest);
            a.push_back(take);
            rest -= take;
        }
    }
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

void for_each_partition_in_box(const Box& box, const PartitionVisitor& visit)
{
    if (box.cols < 0 || box.rows < 0)
        return;
    std::vector<int> parts;
    std::function<void(int)> descend = [&](int cap) {
        visit(Partition(parts));
        if (static_cast<int>(parts.size()) == box.rows)
            return;
        for (int next = cap; next >= 1; --next) {
            parts.push_back(next);
            descend(next);
            parts.pop_back();
        }
    };
    descend(box.cols);
}

namespace {

bool initial_ok(const ColoredPart& part, int r)
{
    const int twice = 2 * part.color;
    const int bound = same_parity(part.size, r) ? std::abs(twice - r + 1) : std::abs(twice - r);
    return part.size > bound;
}

bool difference_ok(const ColoredPart& upper, const ColoredPart& lower, int r)
{
    const int delta = 2 * (upper.color - lower.color);
    int bound = 0;
    if (same_parity(upper.size, lower.size))
        bound = 2 + std::abs(delta);
    else if (same_parity(lower.size, r))
        bound = 2 + std::abs(delta - 1);
    else
        bound = 2 + std::abs(delta + 1);
    return upper.size - lower.size >= bound;
}

bool parity_ok(const ColoredPart& part, const IdentityParams& params)
{
    return !(params.even_modulus() && part.color == params.k() - 1 && same_parity(part.size, params.residue()));
}

void sort_descending(std::vector<ColoredPartition>& v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
}

}  // namespace

void for_each_admissible_colored(const IdentityParams& params, int max_size, int max_weight,
                                 const ColoredVisitor& visit)
{
    const int r = params.residue();
    const int colors = params.color_count();
    std::vector<ColoredPart> parts;
    std::function<void(int, int)> descend = [&](int cap, int budget) {
        visit(ColoredPartition(parts));
        for (int size = std::min(cap, budget); size >= 1; --size) {
            for (int color = 1; color <= colors; ++color) {
                const ColoredPart part{size, color};
                if (!initial_ok(part, r) || !parity_ok(part, params))
                    continue;
                if (!parts.empty() && !difference_ok(parts.back(), part, r))
                    continue;
                parts.push_back(part);
                // Condition (ii) forces a gap of at least 2 to the next part.
                descend(size - 2, budget - size);
                parts.pop_back();
            }
        }
    };
    descend(max_size, max_weight);
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::A:
        return "A";
    case Family::C:
        return "C";
    case Family::F:
        return "F";
    case Family::Gordon:
        return "Gordon";
    case Family::Type1:
        return "Type1";
    case Family::ProductParts:
        return "ProductParts";
    }
    return "?";
}

void FamilySpec::validate() const
{
    if (n < 0)
        throw std::invalid_argument("family weight must be non-negative");
    if (box.has_value() != (family == Family::F))
        throw std::invalid_argument("a box is required for F and only for F");
    if (family != Family::Type1 && !params)
        throw std::invalid_argument("family " + family_name(family) + " needs (M, r)");
    if (family == Family::Gordon && params->even_modulus())
        throw std::invalid_argument("the Gordon family needs an odd modulus M = 2k + 1");
    if (min_part < 1)
        throw std::invalid_argument("minimum part must be positive");
}

bool in_rank_family(const Partition& p, const IdentityParams& params)
{
    for (int rank : successive_ranks(p))
        if (!params.rank_allowed(rank))
            return false;
    return true;
}

bool fits_box(const Partition& p, const Box& box)
{
    return box.cols >= 0 && box.rows >= 0 && p.largest() <= box.cols && static_cast<int>(p.length()) <= box.rows;
}

bool in_gordon_family(const Partition& p, int k, int r)
{
    const auto span = static_cast<std::size_t>(k - 1);
    for (std::size_t j = 0; j + span < p.length(); ++j)
        if (p[j] - p[j + span] < 2)
            return false;
    const auto ones = std::count(p.parts().begin(), p.parts().end(), 1);
    return ones <= r - 1;
}

std::vector<Partition> rank_family(const IdentityParams& params, int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (in_rank_family(p, params))
            out.push_back(p);
    });
    return out;
}

std::vector<ColoredPartition> colored_family(const IdentityParams& params, int n)
{
    if (n < 0)
        throw std::invalid_argument("family weight must be non-negative");
    std::vector<ColoredPartition> out;
    for_each_admissible_colored(params, n, n, [&](const ColoredPartition& c) {
        if (c.weight() == n)
            out.push_back(c);
    });
    sort_descending(out);
    return out;
}

std::vector<ColoredPartition> colored_family_via_map(const IdentityParams& params, int n)
{
    std::vector<ColoredPartition> out;
    for (const Partition& p : rank_family(params, n))
        out.push_back(color_map(p, params));
    sort_descending(out);
    return out;
}

std::vector<Partition> boxed_family(const IdentityParams& params, const Box& box, int n)
{
    std::vector<Partition> out;
    for (const Partition& p : rank_family(params, n))
        if (fits_box(p, box))
            out.push_back(p);
    return out;
}

std::vector<Partition> gordon_family(int k, int r, int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (in_gordon_family(p, k, r))
            out.push_back(p);
    });
    return out;
}

std::vector<Partition> type1_family(int n, int min_part)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (is_type1(p) && (p.empty() || p.parts().back() >= min_part))
            out.push_back(p);
    });
    return out;
}

std::vector<Partition> product_parts_family(const IdentityParams& params, int n)
{
    const int M = params.modulus();
    const int r = params.residue();
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        for (int part : p.parts()) {
            const int res = part % M;
            if (res == 0 || res == r || res == M - r)
                return;
        }
        out.push_back(p);
    });
    return out;
}

Int product_side_count(const IdentityParams& params, int n)
{
    const int M = params.modulus();
    const int r = params.residue();
    if (2 * r < M)
        return static_cast<Int>(product_parts_family(params, n).size());
    Int total = 0;
    for_each_partition(n, [&](const Partition& p) {
        int half = 0;
        for (std::size_t i = 0; i < p.length(); ++i) {
            const int res = p[i] % M;
            if (res == 0)
                return;
            if (res == r) {
                if (i > 0 && p[i - 1] == p[i])
                    return;
                ++half;
            }
        }
        total += half % 2 == 0 ? 1 : -1;
    });
    return total;
}

FamilyMembers enumerate_family(const FamilySpec& spec)
{
    spec.validate();
    switch (spec.family) {
    case Family::A:
        return rank_family(*spec.params, spec.n);
    case Family::C:
        return colored_family(*spec.params, spec.n);
    case Family::F:
        return boxed_family(*spec.params, *spec.box, spec.n);
    case Family::Gordon:
        return gordon_family(spec.params->k(), spec.params->residue(), spec.n);
    case Family::Type1:
        return type1_family(spec.n, spec.min_part);
    case Family::ProductParts:
        return product_parts_family(*spec.params, spec.n);
    }
    throw std::logic_error("unhandled family");
}

Int count_family(const FamilySpec& spec)
{
    return std::visit([](const auto& v) { return static_cast<Int>(v.size()); }, enumerate_family(spec));
}

std::vector<Int> boxed_counts(const IdentityParams& params, const Box& box)
{
    if (box.cols < 0 || box.rows < 0)
        return {};
    std::vector<Int> counts(static_cast<std::size_t>(box.cols) * static_cast<std::size_t>(box.rows) + 1, 0);
    for_each_partition_in_box(box, [&](const Partition& p) {
        if (in_rank_family(p, params))
            ++counts[static_cast<std::size_t>(p.weight())];
    });
    return counts;
}

std::vector<Int> colored_counts(const IdentityParams& params, int max_size, int max_weight,
                                const std::function<bool(const ColoredPartition&)>& keep)
{
    if (max_weight < 0)
        return {};
    std::vector<Int> counts(static_cast<std::size_t>(max_weight) + 1, 0);
    for_each_admissible_colored(params, std::max(max_size, 0), max_weight, [&](const ColoredPartition& c) {
        if (keep(c))
            ++counts[static_cast<std::size_t>(c.weight())];
    });
    return counts;
}

std::vector<Int> colored_box_counts(const IdentityParams& params, const Box& box)
{
    if (box.cols < 0 || box.rows < 0)
        return {};
    // The box condition bounds the largest part by u + v - 1.
    return colored_counts(params, box.cols + box.rows - 1, box.cols * box.rows, [&](const ColoredPartition& c) {
        return check_box_condition(c, params, box.cols, box.rows);
    });
}

}  // namespace rrcolor
